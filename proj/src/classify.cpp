#include "xi/classify.hpp"

#include <algorithm>
#include <map>

#include "xi/algebra_name.hpp"
#include "xi/chevalley.hpp"
#include "xi/crown.hpp"
#include "xi/realizations.hpp"

namespace xi {

std::string to_string(Verification v) { return v == Verification::computed ? "computed" : "reference-only"; }

bool BoundaryComponent::ok() const {
    return identified() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

bool Classification::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; }) &&
           std::all_of(components.begin(), components.end(), [](const BoundaryComponent& c) { return c.ok(); });
}

namespace {

const std::string kCaveat =
    "Lie-algebra level: h is the Lie algebra of the stabilizer; component groups and the choice of global group "
    "are not computed.";

std::vector<DenseMatrix<Rational>> replicate(const std::vector<DenseMatrix<Rational>>& action, std::size_t copies) {
    std::vector<DenseMatrix<Rational>> out;
    for (const auto& m : action) {
        const std::size_t n = m.size();
        DenseMatrix<Rational> big(n * copies, std::vector<Rational>(n * copies, Rational(0)));
        for (std::size_t c = 0; c < copies; ++c)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) big[c * n + i][c * n + j] = m[i][j];
        out.push_back(std::move(big));
    }
    return out;
}

/// Name with p <= q for the pair-parameter families.
SimpleAlgebraName normalized(std::string_view name) {
    SimpleAlgebraName s = parse_algebra_name(name).simple();
    if ((s.kind == AlgebraKind::so_pq || s.kind == AlgebraKind::su_pq || s.kind == AlgebraKind::sp_pq) && s.a > s.b)
        std::swap(s.a, s.b);
    return s;
}

bool is_reference_only(const SimpleAlgebraName& s) {
    return s.kind == AlgebraKind::e6_m26 || s.kind == AlgebraKind::e7_m25;
}

RestrictedSystem describe(const RootDatum& rd, std::vector<std::pair<Rational, std::size_t>> mult) {
    return {rd.label, family_name(rd.family), rd.rank, std::move(mult)};
}

Classification reference_only(const SimpleAlgebraName& s) {
    Classification c;
    c.algebra = to_string(s);
    c.caveat = kCaveat;
    RootDatum rd;
    if (s.kind == AlgebraKind::e6_m26) {
        rd = build_root_system(Family::A, 2);
        c.system = describe(rd, {{Rational(2), 8}});
    } else {
        rd = build_root_system(Family::C, 3);
        c.system = describe(rd, {{Rational(1, 2), 8}, {Rational(1), 1}});
    }
    const CrownPolytope poly = make_crown(rd);
    c.polytope = poly.constraint_system.label;
    const auto targets = lookup_causal_pairs(c.algebra);
    for (const auto& orbit : extreme_orbits(poly).orbits) {
        BoundaryComponent b;
        b.representative = orbit.representative;
        b.orbit_size = orbit.size();
        b.spectrum = ad_spectrum(rd, orbit.representative);
        b.symmetric = b.totally_real = b.spectrum.is_involutive;
        b.verification = Verification::reference_only;
        if (b.symmetric && !targets.empty()) b.h_name = targets.front();
        c.components.push_back(std::move(b));
    }
    return c;
}

BoundaryComponent analyze(const Realization& r, const RestrictedRoots& rr, const RootDatum& weyl, const WeylOrbit& orbit,
                          const std::vector<std::string>& candidates, std::size_t index) {
    BoundaryComponent b;
    b.representative = orbit.representative;
    b.orbit_size = orbit.size();
    b.spectrum = ad_spectrum(weyl, orbit.representative);
    b.symmetric = b.totally_real = b.spectrum.is_involutive;

    const Tau tau = tau_endomorphism(r, rr, orbit.representative);
    const auto h = stabilizer_subalgebra(tau);
    const bool closed = is_closed(r.algebra, h);
    b.checks.push_back({"h is a subalgebra", closed, "dim h = " + std::to_string(h.size())});
    const bool inv = tau.is_involution();
    b.checks.push_back({"tau is an involution iff the spectrum lies in {-1,0,1}", inv == b.symmetric,
                        std::string("tau^2 = id: ") + (inv ? "yes" : "no")});
    if (inv) {
        const auto q = minus_space(tau);
        b.checks.push_back({"g = h + q", h.size() + q.size() == r.algebra.dim(),
                            std::to_string(h.size()) + " + " + std::to_string(q.size())});
        b.checks.push_back({"[h,q] in q and [q,q] in h", symmetric_pair_relations(r.algebra, h, q), ""});
    }
    if (!closed) return b;

    const LieAlgebra hal = subalgebra(r.algebra, h);
    b.fingerprint = fingerprint(hal);
    std::vector<ComplexMatrix> hm;
    if (!r.matrices.empty())
        for (const auto& v : h) hm.push_back(combine(r.matrices, v));
    b.h_name = identify_real_form(hal, hm, candidates, index).name;
    return b;
}

Classification run(std::string_view name, bool xi0) {
    const SimpleAlgebraName s = normalized(name);
    if (is_reference_only(s)) {
        if (xi0) throw Error("the doubly restricted polytope is defined for so(p,q) and so(n,C) only");
        return reference_only(s);
    }
    Classification c;
    c.algebra = to_string(s);
    c.xi0 = xi0;
    c.caveat = kCaveat;
    const Realization r = realize(c.algebra);
    c.checks = verify_realization(r);
    const RestrictedRoots rr = restricted_roots(r);
    c.system = describe(*r.datum, rr.multiplicities());

    const CrownPolytope poly = xi0 ? xi0_polytope(c.algebra) : make_crown(*r.datum);
    if (poly.weyl_system.roots != r.datum->roots) throw Error(c.algebra + ": polytope and realization disagree on the roots");
    c.polytope = poly.constraint_system.label;

    std::vector<std::string> candidates;
    if (xi0) {
        candidates = xi0_targets(c.algebra);
    } else {
        candidates = lookup_causal_pairs(c.algebra);
        for (auto& t : non_symmetric_targets(c.algebra)) candidates.push_back(std::move(t));
    }
    const auto orbits = extreme_orbits(poly).orbits;
    for (std::size_t k = 0; k < orbits.size(); ++k)
        c.components.push_back(analyze(r, rr, poly.weyl_system, orbits[k], candidates, k));
    return c;
}

}  // namespace

Realization realize(std::string_view name) {
    const SimpleAlgebraName s = normalized(name);
    switch (s.kind) {
        case AlgebraKind::e6_split: return split_real_form(build_chevalley(build_root_system(Family::E6, 6)));
        case AlgebraKind::e7_split: return split_real_form(build_chevalley(build_root_system(Family::E7, 7)));
        case AlgebraKind::e6_C: return complex_as_real(build_chevalley(build_root_system(Family::E6, 6)));
        case AlgebraKind::e7_C: return complex_as_real(build_chevalley(build_root_system(Family::E7, 7)));
        case AlgebraKind::e6_m26:
        case AlgebraKind::e7_m25: throw Error(to_string(s) + " has no model here; its boundary is reference-only");
        default: return build_classical(s);
    }
}

Identification identify_real_form(const LieAlgebra& h, const std::vector<ComplexMatrix>& h_matrices,
                                  const std::vector<std::string>& candidates, std::size_t prefer) {
    Identification id;
    const Fingerprint fp = fingerprint(h);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (candidate_algebra(candidates[i]).fp == fp) hits.push_back(i);

    auto classes_of = [&](const std::vector<std::size_t>& idx) {
        std::map<std::string, std::vector<std::size_t>> by_class;
        for (std::size_t i : idx) by_class[candidate_algebra(candidates[i]).name.canonical().to_string()].push_back(i);
        return by_class;
    };
    auto by_class = classes_of(hits);
    if (by_class.size() > 1) {
        id.used_module = true;
        std::vector<std::size_t> kept = hits;
        if (!h_matrices.empty()) {
            kept.clear();
            const auto action = real_action(h_matrices);
            const std::size_t m = action.front().size();
            const Signature target = commutant_signature(action);
            for (std::size_t i : hits) {
                const auto& ca = candidate_algebra(candidates[i]);
                if (ca.action.empty()) continue;
                const std::size_t n = ca.action.front().size();
                if (m % n != 0) continue;
                if (commutant_signature(replicate(ca.action, m / n)) == target) kept.push_back(i);
            }
        }
        hits = kept;
        by_class = classes_of(hits);
    }
    for (std::size_t i : hits) id.matches.push_back(candidates[i]);
    if (by_class.size() != 1) {
        id.ambiguous = by_class.size() > 1;
        return id;
    }
    id.name = std::find(hits.begin(), hits.end(), prefer) != hits.end() ? candidates[prefer] : candidates[hits.front()];
    return id;
}

Classification classify_boundary(std::string_view name) { return run(name, false); }

Classification classify_xi0_boundary(std::string_view name) { return run(name, true); }

}  // namespace xi
