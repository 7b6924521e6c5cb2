#include "xi/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace xi {

RationalVector reflect(const RationalVector& v, const RationalVector& alpha) {
    const Rational aa = dot(alpha, alpha);
    if (sgn(aa) == 0) throw Error("reflection in the zero vector");
    const Rational f = 2 * dot(v, alpha) / aa;
    if (sgn(f) == 0) return v;
    return v - f * alpha;
}

bool is_dominant(const RootDatum& rd, const RationalVector& v) {
    return std::all_of(rd.simple.begin(), rd.simple.end(), [&](const auto& a) { return sgn(dot(v, a)) >= 0; });
}

namespace {

std::vector<RationalVector> closure(const RationalVector& v, const std::vector<const RationalVector*>& generators) {
    std::unordered_set<RationalVector, RationalVectorHash> seen{v};
    std::deque<RationalVector> queue{v};
    while (!queue.empty()) {
        const RationalVector x = std::move(queue.front());
        queue.pop_front();
        for (const auto* a : generators) {
            if (sgn(dot(x, *a)) == 0) continue;
            RationalVector y = reflect(x, *a);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    std::vector<RationalVector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<const RationalVector*> simple_generators(const RootDatum& rd) {
    std::vector<const RationalVector*> g;
    for (const auto& a : rd.simple) g.push_back(&a);
    return g;
}

}  // namespace

WeylOrbit orbit(const RootDatum& rd, const RationalVector& v) {
    if (v.dim() != rd.ambient_dim) throw Error("orbit: vector has the wrong dimension");
    WeylOrbit o;
    o.elements = closure(v, simple_generators(rd));
    o.representative = dominant_representative(rd, v);
    return o;
}

RationalVector dominant_representative(const RootDatum& rd, RationalVector v) {
    if (v.dim() != rd.ambient_dim) throw Error("dominant_representative: vector has the wrong dimension");
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& a : rd.simple) {
            if (sgn(dot(v, a)) < 0) {
                v = reflect(v, a);
                changed = true;
            }
        }
    }
    return v;
}

bool same_orbit(const RootDatum& rd, const RationalVector& u, const RationalVector& v) {
    return dominant_representative(rd, u) == dominant_representative(rd, v);
}

std::uint64_t stabilizer_order(const RootDatum& rd, const RationalVector& v) {
    const RationalVector d = dominant_representative(rd, v);
    std::vector<const RationalVector*> gens;
    RationalVector probe(rd.ambient_dim);
    for (std::size_t j = 0; j < rd.simple.size(); ++j) {
        if (sgn(dot(d, rd.simple[j])) != 0) continue;
        gens.push_back(&rd.simple[j]);
        probe += rd.dual_basis[j];
    }
    // probe is regular for the parabolic subsystem, so its orbit is a torsor.
    return closure(probe, gens).size();
}

std::vector<WeylOrbit> partition_into_orbits(const RootDatum& rd, std::vector<RationalVector> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<WeylOrbit> orbits;
    std::vector<bool> used(points.size(), false);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (used[i]) continue;
        WeylOrbit o = orbit(rd, points[i]);
        for (const auto& x : o.elements) {
            auto it = std::lower_bound(points.begin(), points.end(), x);
            if (it == points.end() || *it != x) throw Error("partition_into_orbits: the point set is not W-stable");
            used[static_cast<std::size_t>(it - points.begin())] = true;
        }
        orbits.push_back(std::move(o));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const WeylOrbit& a, const WeylOrbit& b) { return b.representative < a.representative; });
    return orbits;
}

RationalVector regular_vector(const RootDatum& rd) {
    RationalVector v(rd.ambient_dim);
    for (const auto& w : rd.dual_basis) v += w;
    return v;
}

}  // namespace xi
