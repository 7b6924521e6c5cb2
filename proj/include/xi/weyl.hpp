#pragma once

#include <cstdint>
#include <vector>

#include "xi/rootsys.hpp"

namespace xi {

struct WeylOrbit {
    RationalVector representative;       // the dominant element
    std::vector<RationalVector> elements;  // lexicographic order
    std::size_t size() const { return elements.size(); }
};

RationalVector reflect(const RationalVector& v, const RationalVector& alpha);

bool is_dominant(const RootDatum& rd, const RationalVector& v);

/// Closure of {v} under the simple reflections. A component of v orthogonal
/// to span(roots) is fixed by W and carried along unchanged.
WeylOrbit orbit(const RootDatum& rd, const RationalVector& v);

RationalVector dominant_representative(const RootDatum& rd, RationalVector v);

bool same_orbit(const RootDatum& rd, const RationalVector& u, const RationalVector& v);

/// Order of the stabilizer of v: the parabolic subgroup generated by the
/// simple reflections fixing the dominant representative.
std::uint64_t stabilizer_order(const RootDatum& rd, const RationalVector& v);

/// Splits a W-stable finite set into orbits, ordered by representative
/// (lexicographically descending).
std::vector<WeylOrbit> partition_into_orbits(const RootDatum& rd, std::vector<RationalVector> points);

/// A vector with <v, a> != 0 for every root.
RationalVector regular_vector(const RootDatum& rd);

}  // namespace xi
