#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xi/crown.hpp"
#include "xi/rootsys.hpp"

namespace xi {

/// The multiset {<a, Y> : a in roots} together with one extra 0, sorted.
struct SpectrumReport {
    std::vector<Rational> values;
    bool is_half_integral = true;
    bool is_involutive = true;  // values in {-1, 0, 1}
};

SpectrumReport ad_spectrum(const RootDatum& rd, const RationalVector& y);

struct ComponentFlags {
    bool symmetric = false;
    bool totally_real = false;
};

/// One entry per extreme orbit of the polytope, in orbit order. The spectrum
/// is taken over the Weyl system.
std::vector<ComponentFlags> component_flags(const CrownPolytope& p);
std::vector<ComponentFlags> component_flags(const RootDatum& rd);

/// A row of the reference table of non-compactly causal pairs, stored as
/// printed: g, h and the parameter range.
struct CausalTableRow {
    std::string g;
    std::string h;
    std::string range;
    bool cayley = false;
};

const std::vector<CausalTableRow>& causal_reference_table();
std::vector<CausalTableRow> cayley_rows();

/// Table entries h for a concrete g, instantiated (e.g. sl(4,R) gives
/// so(1,3), so(2,2), so(3,1)). Empty when g is not causal. Throws on names
/// outside the grammar.
std::vector<std::string> lookup_causal_pairs(std::string_view g_name);

/// Stabilizer algebras of the non-symmetric boundary components.
std::vector<std::string> non_symmetric_targets(std::string_view g_name);

/// Stabilizers on the boundary of the polytope of doubly restricted roots
/// (so(p,q), so(n,C) only).
std::vector<std::string> xi0_targets(std::string_view g_name);

}  // namespace xi
