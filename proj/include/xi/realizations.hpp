#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "xi/algebra_name.hpp"
#include "xi/liealg.hpp"

namespace xi {

/// Matrix realization of a classical noncompact real form with
/// theta(X) = -X^dagger, the restricted root datum and the chart of a.
/// Names: sl(n,R|C|H), so(p,q), so(n,C), sp(n,R|C), sp(p,q), su(p,q), so*(2n).
/// Sizes: n <= 8 for sl(n,R|C); p + q <= 10 for so and su; n <= 10 for
/// so(n,C); matrices of size at most 10 for the quaternionic and symplectic
/// families.
Realization build_classical(std::string_view name);
Realization build_classical(const SimpleAlgebraName& name);

using MatrixMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Real basis of {X : L(X) = 0 for every L} among n x n complex matrices, or
/// among real ones if real_entries.
std::vector<ComplexMatrix> solve_matrix_conditions(std::size_t n, bool real_entries,
                                                   const std::vector<MatrixMap>& conditions);

/// Real matrices of the action on V_R: complex N x N matrices act on C^N
/// viewed as R^{2N}; if every matrix is real, on R^N.
std::vector<DenseMatrix<Rational>> real_action(const std::vector<ComplexMatrix>& matrices);

/// An identification target: structure constants plus, when available, a
/// faithful real module used to separate isomorphic but differently embedded
/// candidates.
struct CandidateAlgebra {
    std::string display;  // as written in the reference tables
    AlgebraName name;
    LieAlgebra algebra;
    std::vector<DenseMatrix<Rational>> action;  // empty if no matrix model
    Fingerprint fp;
};

/// Builds (and caches) a candidate. Accepts everything build_classical does
/// plus compact forms, gl(n,R), R, the exceptional forms with a Chevalley
/// model and direct sums. Throws for names without a model (f4(-20), e6(-26)).
const CandidateAlgebra& candidate_algebra(const std::string& display);

/// Inertia of the trace form tr(XY) on the commutant of a family of real
/// matrices inside End(R^m).
Signature commutant_signature(const std::vector<DenseMatrix<Rational>>& action);

}  // namespace xi
