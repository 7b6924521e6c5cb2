#include "xi/causality.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "xi/algebra_name.hpp"

namespace xi {

SpectrumReport ad_spectrum(const RootDatum& rd, const RationalVector& y) {
    SpectrumReport s;
    s.values.emplace_back(0);
    for (const auto& a : rd.roots) s.values.push_back(dot(a, y));
    std::sort(s.values.begin(), s.values.end());
    for (const auto& v : s.values) {
        const Rational twice = 2 * v;
        if (twice.get_den() != 1) s.is_half_integral = false;
        if (v != 0 && v != 1 && v != -1) s.is_involutive = false;
    }
    return s;
}

std::vector<ComponentFlags> component_flags(const CrownPolytope& p) {
    std::vector<ComponentFlags> out;
    for (const auto& orbit : extreme_orbits(p).orbits) {
        const bool sym = ad_spectrum(p.weyl_system, orbit.representative).is_involutive;
        out.push_back({sym, sym});
    }
    return out;
}

std::vector<ComponentFlags> component_flags(const RootDatum& rd) { return component_flags(make_crown(rd)); }

namespace {

std::string num(int n) { return std::to_string(n); }

/// so(1,k) with the degenerate cases written out: so(1,0) = 0, so(1,1) = R.
std::string lorentz(int k) {
    if (k == 0) return "";
    if (k == 1) return "R";
    return "so(1," + num(k) + ")";
}

std::string compact_so(int n) { return n <= 1 ? "" : "so(" + num(n) + ")"; }

std::string join(std::vector<std::string> parts) {
    // Abelian summands go last, as in the tables.
    std::stable_partition(parts.begin(), parts.end(), [](const std::string& s) { return s != "R"; });
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "+";
        out += p;
    }
    return out;
}

/// (p, q) with p <= q.
std::pair<int, int> ordered(const SimpleAlgebraName& s) { return {std::min(s.a, s.b), std::max(s.a, s.b)}; }

using Instantiate = std::function<std::vector<std::string>(const SimpleAlgebraName&)>;

struct Row {
    CausalTableRow printed;
    AlgebraKind kind;
    Instantiate instantiate;  // empty result: outside the parameter range
};

const std::vector<Row>& rows() {
    static const std::vector<Row> table = [] {
        std::vector<Row> t;
        auto add = [&](std::string g, std::string h, std::string range, bool cayley, AlgebraKind k, Instantiate f) {
            t.push_back({{std::move(g), std::move(h), std::move(range), cayley}, k, std::move(f)});
        };
        using K = AlgebraKind;
        add("sp(n,R)", "gl(n,R)", "n >= 1", true, K::sp_R, [](const SimpleAlgebraName& s) {
            return s.a >= 1 ? std::vector<std::string>{"gl(" + num(s.a) + ",R)"} : std::vector<std::string>{};
        });
        add("su(n,n)", "sl(n,C)+R", "n >= 1", true, K::su_pq, [](const SimpleAlgebraName& s) {
            if (s.a != s.b || s.a < 1) return std::vector<std::string>{};
            return std::vector<std::string>{s.a == 1 ? "R" : "sl(" + num(s.a) + ",C)+R"};
        });
        add("so*(4n)", "sl(n,H)+R", "n >= 2", true, K::so_star, [](const SimpleAlgebraName& s) {
            if (s.a % 4 != 0 || s.a < 8) return std::vector<std::string>{};
            return std::vector<std::string>{"sl(" + num(s.a / 4) + ",H)+R"};
        });
        add("so(p,q)", "so(1,p-1)+so(1,q-1)", "1 <= p <= q, p + q >= 3, (p,q) != (2,2)", false, K::so_pq,
            [](const SimpleAlgebraName& s) {
                const auto [p, q] = ordered(s);
                if (p < 1 || p + q < 3 || (p == 2 && q == 2)) return std::vector<std::string>{};
                return std::vector<std::string>{join({lorentz(p - 1), lorentz(q - 1)})};
            });
        add("so(n,n)", "so(n,C)", "n >= 3", false, K::so_pq, [](const SimpleAlgebraName& s) {
            if (s.a != s.b || s.a < 3) return std::vector<std::string>{};
            return std::vector<std::string>{"so(" + num(s.a) + ",C)"};
        });
        add("sp(n,n)", "sp(n,C)", "n >= 1", false, K::sp_pq, [](const SimpleAlgebraName& s) {
            if (s.a != s.b || s.a < 1) return std::vector<std::string>{};
            return std::vector<std::string>{"sp(" + num(s.a) + ",C)"};
        });
        add("sl(n,R)", "so(q,n-q)", "1 <= q < n", false, K::sl_R, [](const SimpleAlgebraName& s) {
            std::vector<std::string> out;
            for (int q = 1; q < s.a; ++q) out.push_back("so(" + num(q) + "," + num(s.a - q) + ")");
            // so(1,1) is abelian
            if (s.a == 2) out = {"R"};
            return out;
        });
        add("sl(n,H)", "sp(q,n-q)", "1 <= q < n", false, K::sl_H, [](const SimpleAlgebraName& s) {
            std::vector<std::string> out;
            for (int q = 1; q < s.a; ++q) out.push_back("sp(" + num(q) + "," + num(s.a - q) + ")");
            return out;
        });
        add("so(2n,C)", "so*(2n)", "n >= 3", false, K::so_C, [](const SimpleAlgebraName& s) {
            if (s.a % 2 != 0 || s.a < 6) return std::vector<std::string>{};
            return std::vector<std::string>{"so*(" + num(s.a) + ")"};
        });
        add("so(n+2,C)", "so(2,n)", "n >= 3", false, K::so_C, [](const SimpleAlgebraName& s) {
            if (s.a < 5) return std::vector<std::string>{};
            return std::vector<std::string>{"so(2," + num(s.a - 2) + ")"};
        });
        add("sp(n,C)", "sp(n,R)", "n >= 1", false, K::sp_C, [](const SimpleAlgebraName& s) {
            return s.a >= 1 ? std::vector<std::string>{"sp(" + num(s.a) + ",R)"} : std::vector<std::string>{};
        });
        add("sl(n,C)", "su(q,n-q)", "1 <= q < n", false, K::sl_C, [](const SimpleAlgebraName& s) {
            std::vector<std::string> out;
            for (int q = 1; q < s.a; ++q) out.push_back("su(" + num(q) + "," + num(s.a - q) + ")");
            return out;
        });
        auto fixed = [](std::string h) {
            return [h = std::move(h)](const SimpleAlgebraName&) { return std::vector<std::string>{h}; };
        };
        add("e6(6)", "sp(2,2)", "", false, K::e6_split, fixed("sp(2,2)"));
        add("e6(-26)", "f4(-20)", "", false, K::e6_m26, fixed("f4(-20)"));
        add("e6", "e6(-14)", "", false, K::e6_C, fixed("e6(-14)"));
        add("e7(7)", "su*(8)", "", false, K::e7_split, fixed("su*(8)"));
        add("e7(-25)", "e6(-26)+R", "", true, K::e7_m25, fixed("e6(-26)+R"));
        add("e7", "e7(-25)", "", false, K::e7_C, fixed("e7(-25)"));
        return t;
    }();
    return table;
}

SimpleAlgebraName parse_simple_name(std::string_view g_name) { return parse_algebra_name(g_name).simple(); }

}  // namespace

const std::vector<CausalTableRow>& causal_reference_table() {
    static const std::vector<CausalTableRow> printed = [] {
        std::vector<CausalTableRow> out;
        for (const auto& r : rows()) out.push_back(r.printed);
        return out;
    }();
    return printed;
}

std::vector<CausalTableRow> cayley_rows() {
    std::vector<CausalTableRow> out;
    for (const auto& r : causal_reference_table())
        if (r.cayley) out.push_back(r);
    // The so(p,q) row at p = 2 is the Cayley row so(2,n) -> so(1,n-1)+R.
    out.insert(out.begin() + 3, CausalTableRow{"so(2,n)", "so(1,n-1)+R", "n >= 3", true});
    return out;
}

std::vector<std::string> lookup_causal_pairs(std::string_view g_name) {
    const SimpleAlgebraName s = parse_simple_name(g_name);
    std::vector<std::string> out;
    for (const auto& r : rows()) {
        if (r.kind != s.kind) continue;
        for (auto& h : r.instantiate(s))
            if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
    return out;
}

std::vector<std::string> non_symmetric_targets(std::string_view g_name) {
    const SimpleAlgebraName s = parse_simple_name(g_name);
    if (s.kind == AlgebraKind::so_pq) {
        const auto [p, q] = ordered(s);
        if (p >= 3 && p < q) return {join({"so(" + num(p) + ",C)", compact_so(q - p)})};
    }
    if (s.kind == AlgebraKind::so_C && s.a % 2 == 1 && s.a >= 7) return {"so*(" + num(s.a - 1) + ")"};
    return {};
}

std::vector<std::string> xi0_targets(std::string_view g_name) {
    const SimpleAlgebraName s = parse_simple_name(g_name);
    if (s.kind == AlgebraKind::so_pq) {
        const auto [p, q] = ordered(s);
        const std::string complex_part = p == 1 ? "" : "so(" + num(p) + ",C)";
        if (p == q) return {complex_part};
        return {join({complex_part, compact_so(q - p)})};
    }
    if (s.kind == AlgebraKind::so_C) return {"so*(" + num(s.a % 2 == 0 ? s.a : s.a - 1) + ")"};
    throw Error("the doubly restricted polytope is defined for so(p,q) and so(n,C) only, not " + std::string(g_name));
}

}  // namespace xi
