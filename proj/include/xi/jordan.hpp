#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "xi/crown.hpp"
#include "xi/liealg.hpp"
#include "xi/poly.hpp"

namespace xi {

enum class JordanKind { symmetric_real, hermitian_complex };

/// Symm(n,R) or Herm(n,C) with x o y = (xy + yx)/2. Elements are stored as
/// complex matrices; for Symm(n,R) all entries are real.
class JordanAlgebra {
public:
    JordanAlgebra(JordanKind kind, std::size_t n);

    JordanKind kind() const { return kind_; }
    std::size_t rank() const { return n_; }
    std::string name() const;

    bool contains(const ComplexMatrix& x) const;
    ComplexMatrix product(const ComplexMatrix& x, const ComplexMatrix& y) const;
    ComplexMatrix unit() const;
    /// The diagonal idempotents E_11, ..., E_nn.
    std::vector<ComplexMatrix> frame() const;

private:
    JordanKind kind_;
    std::size_t n_;
};

/// Accepts "symm" / "herm" (case-insensitive).
JordanKind parse_jordan_kind(std::string_view text);

Rational jordan_det(const JordanAlgebra& v, const ComplexMatrix& x);
/// det(lambda e - x).
Polynomial characteristic_polynomial(const JordanAlgebra& v, const ComplexMatrix& x);

struct StratumLabel {
    std::size_t p = 0;  // positive roots of the characteristic polynomial
    bool regular = false;

    friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

/// Counts roots by Sturm chains.
StratumLabel signature_stratum(const JordanAlgebra& v, const ComplexMatrix& x);

/// Inertia of x as a Hermitian form, by congruence.
Signature inertia(const JordanAlgebra& v, const ComplexMatrix& x);

/// z_p = c_1 + ... + c_p - c_(p+1) - ... - c_n.
ComplexMatrix frame_point(const JordanAlgebra& v, std::size_t p);

/// The sign vectors (+-1, ..., +-1) split into S_n orbits, by representative
/// lexicographically descending (so the orbit of z_n comes first).
ExtremeDecomposition xi0_extreme_orbits(const JordanAlgebra& v);

/// Number of positive entries of a sign vector.
std::size_t positive_count(const RationalVector& signs);

struct StratumStabilizer {
    std::size_t p = 0;
    std::vector<ComplexMatrix> basis;  // {A : A z_p + z_p A^dagger = 0}, Im tr A = 0 for Herm
    Fingerprint fingerprint;
    std::string expected;  // so(p,n-p) or su(p,n-p), compact forms written so(n) / su(n)
    std::string name = "unidentified";
    bool compact = false;  // trace form of the defining module negative definite
};

StratumStabilizer stratum_stabilizer_algebra(const JordanAlgebra& v, std::size_t p);

/// Every sample is regular, lies in V and has the inertia of z_p.
bool stratum_transitivity_check(const JordanAlgebra& v, std::size_t p, const std::vector<ComplexMatrix>& samples);

}  // namespace xi
