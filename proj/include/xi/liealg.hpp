#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xi/exact.hpp"
#include "xi/rootsys.hpp"

namespace xi {

/// Finite-dimensional real Lie algebra given by its structure constants in a
/// fixed basis e_0, ..., e_{d-1}. Elements are coordinate vectors.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// upper[i][j - i - 1] = [e_i, e_j] for i < j; antisymmetry fills the rest.
    LieAlgebra(std::size_t dim, const std::vector<std::vector<QVector>>& upper);

    std::size_t dim() const { return dim_; }
    const QVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    QVector bracket(const QVector& x, const QVector& y) const;
    /// Column j of ad(x) is [x, e_j].
    QMatrix ad(const QVector& x) const;
    QMatrix ad_basis(std::size_t i) const;
    bool integral() const { return integral_; }

private:
    std::size_t dim_ = 0;
    std::vector<QVector> table_;
    bool integral_ = true;
};

/// Builds the algebra from a bracket callback on basis indices i < j.
template <class F>
LieAlgebra make_lie_algebra(std::size_t dim, F&& bracket_of) {
    std::vector<std::vector<QVector>> upper(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) upper[i].push_back(bracket_of(i, j));
    return LieAlgebra(dim, upper);
}

/// Number of basis triples i < j < k violating the Jacobi identity.
std::size_t jacobi_violations(const LieAlgebra& g);

DenseMatrix<Rational> killing_matrix(const LieAlgebra& g);
Signature killing_signature(const LieAlgebra& g);
/// Signature of the Killing form of g restricted to a subspace.
Signature killing_signature_on(const LieAlgebra& g, const std::vector<QVector>& subspace);

std::vector<QVector> center(const LieAlgebra& g);
std::size_t derived_dimension(const LieAlgebra& g);

/// Isomorphism invariants used to identify real forms.
struct Fingerprint {
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    Signature killing;
    std::size_t derived_dim = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

std::string to_string(const Fingerprint& f);
Fingerprint fingerprint(const LieAlgebra& g);

/// Structure constants of the subalgebra spanned by basis; throws if the span
/// is not closed under the bracket.
LieAlgebra subalgebra(const LieAlgebra& g, const std::vector<QVector>& basis);
bool is_closed(const LieAlgebra& g, const std::vector<QVector>& basis);
LieAlgebra direct_sum(const std::vector<const LieAlgebra*>& parts);

/// Linear map phi with phi[e_i, e_j] = [phi e_i, phi e_j] for all i, j.
bool is_automorphism(const LieAlgebra& g, const QMatrix& phi);

using ComplexMatrix = DenseMatrix<Gaussian>;

ComplexMatrix zero_complex(std::size_t n);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix combine(const std::vector<ComplexMatrix>& ms, const QVector& coeffs);
bool is_real(const ComplexMatrix& a);
/// Real coordinates (Re, Im of each entry, row-major).
QVector real_coordinates(const ComplexMatrix& a);

/// A real Lie algebra together with the data of the causal boundary theory:
/// Cartan involution theta, the expected restricted root system, and a chart
/// sending ambient coordinate k of the root datum to an element of a.
struct Realization {
    std::string name;
    LieAlgebra algebra;
    std::vector<ComplexMatrix> matrices;  // empty for structure-constant-only algebras
    QMatrix theta;
    std::optional<RootDatum> datum;
    std::vector<QVector> chart;

    /// Element of a with ambient coordinates y.
    QVector cartan_element(const RationalVector& y) const;
    /// Expresses a matrix in the basis; nullopt if it is not in the algebra.
    std::optional<QVector> coordinates(const ComplexMatrix& m) const;
};

/// Lie algebra of matrices with bracket the commutator. Throws if the span is
/// not closed.
LieAlgebra matrix_lie_algebra(const std::vector<ComplexMatrix>& basis);

struct RootSpace {
    RationalVector weight;  // in ambient coordinates of the datum
    std::vector<QVector> basis;
};

struct RestrictedRoots {
    std::vector<RootSpace> spaces;  // zero weight first, then by weight

    std::size_t multiplicity(const RationalVector& w) const;
    std::vector<RationalVector> roots() const;
    /// (squared length, multiplicity) per root length, ascending; throws if
    /// roots of equal length have different multiplicities.
    std::vector<std::pair<Rational, std::size_t>> multiplicities() const;
};

/// Joint eigenspace decomposition of ad(a) through the chart.
RestrictedRoots restricted_roots(const Realization& r);

/// tau = exp(i pi ad Y) o theta on the complexification, written re + i im
/// on the real basis.
struct Tau {
    QMatrix re;
    QMatrix im;

    bool is_involution() const;
};

/// Rejects Y whose ad-spectrum is not half-integral.
Tau tau_endomorphism(const Realization& r, const RestrictedRoots& rr, const RationalVector& y);

/// h = {X in g : tau X = X}.
std::vector<QVector> stabilizer_subalgebra(const Tau& t);
/// q = (-1)-eigenspace of a real involutive tau.
std::vector<QVector> minus_space(const Tau& t);

/// Whether [h,q] lies in q and [q,q] in h.
bool symmetric_pair_relations(const LieAlgebra& g, const std::vector<QVector>& h, const std::vector<QVector>& q);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Jacobi, theta, Cartan decomposition signs, maximality of a and the
/// restricted roots against the declared datum.
std::vector<CheckResult> verify_realization(const Realization& r);

}  // namespace xi
