#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xi/rootsys.hpp"
#include "xi/weyl.hpp"

namespace xi {

enum class Membership { interior, boundary, exterior };

std::string to_string(Membership m);

/// The closed polytope {X : |<a, X>| <= 1 for every constraint root a}.
/// For the crown itself both data coincide. For the polytope of doubly
/// restricted roots the constraints come from a larger system while the
/// symmetry group stays the Weyl group of the restricted roots.
struct CrownPolytope {
    RootDatum weyl_system;
    RootDatum constraint_system;

    const std::vector<RationalVector>& constraints() const { return constraint_system.positive; }
};

CrownPolytope make_crown(const RootDatum& rd);

Rational max_root_value(const CrownPolytope& p, const RationalVector& x);
Membership membership(const CrownPolytope& p, const RationalVector& x);

/// omega_j / m_j for the constraint system; rejects reducible data.
std::vector<RationalVector> extreme_candidates(const CrownPolytope& p);

/// Vertex test: on the boundary with active constraints spanning span(roots).
bool is_extreme_point(const CrownPolytope& p, const RationalVector& y);

struct ExtremeDecomposition {
    std::vector<WeylOrbit> orbits;  // by representative, lexicographically descending
    std::size_t total() const;
    std::vector<RationalVector> elements() const;
};

ExtremeDecomposition extreme_orbits(const CrownPolytope& p);

/// Independent vertex enumeration over all square subsystems of signed
/// constraints; rank <= 4 only.
std::vector<RationalVector> brute_force_vertices(const CrownPolytope& p);

/// Polytope of the doubly restricted roots for so(p,q) and so(n,C).
CrownPolytope xi0_polytope(std::string_view algebra);

}  // namespace xi
