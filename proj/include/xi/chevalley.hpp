#pragma once

#include <cstddef>

#include "xi/liealg.hpp"
#include "xi/rootsys.hpp"

namespace xi {

/// Complex simple Lie algebra of a simply-laced root datum in a Chevalley
/// basis h_1..h_r, f_alpha (alpha in datum.roots order), with integral
/// structure constants:
///   [h_i, f_a] = <a, a_i> f_a,  [f_a, f_-a] = h_a,  [f_a, f_b] = N_ab f_(a+b).
/// Signs come from a bimultiplicative cocycle on the root lattice.
struct ChevalleyAlgebra {
    RootDatum datum;
    LieAlgebra algebra;

    std::size_t rank() const { return datum.simple.size(); }
    std::size_t root_index(const RationalVector& a) const;  // basis index of f_a
    /// N_ab, or 0 when a + b is not a root.
    long structure_constant(const RationalVector& a, const RationalVector& b) const;
};

/// Rejects reducible and non-simply-laced data.
ChevalleyAlgebra build_chevalley(const RootDatum& rd);

/// Real span of the Chevalley basis with theta(f_a) = -f_-a, theta(h) = -h;
/// a = span{h_i}, restricted roots = roots with multiplicity 1.
Realization split_real_form(const ChevalleyAlgebra& ca);

/// The complex algebra as a real one, basis (b, J b); theta is conjugation
/// with respect to the compact form; restricted roots have multiplicity 2.
Realization complex_as_real(const ChevalleyAlgebra& ca);

/// The inner real form u^psi + J u^-psi inside the complex algebra, where u is
/// the compact form and psi = exp(i pi ad omega_node) acts on f_a by
/// (-1)^(coefficient of alpha_node in a). node is 0-based.
LieAlgebra inner_real_form(const ChevalleyAlgebra& ca, std::size_t node);

}  // namespace xi
