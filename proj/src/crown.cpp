#include "xi/crown.hpp"

#include <algorithm>
#include <optional>

#include "xi/algebra_name.hpp"

namespace xi {

std::string to_string(Membership m) {
    switch (m) {
        case Membership::interior: return "interior";
        case Membership::boundary: return "boundary";
        case Membership::exterior: return "exterior";
    }
    return "?";
}

CrownPolytope make_crown(const RootDatum& rd) { return {rd, rd}; }

Rational max_root_value(const CrownPolytope& p, const RationalVector& x) {
    if (x.dim() != p.constraint_system.ambient_dim) throw Error("crown: vector has the wrong dimension");
    Rational best = 0;
    for (const auto& a : p.constraints()) {
        Rational v = abs(dot(a, x));
        if (v > best) best = std::move(v);
    }
    return best;
}

Membership membership(const CrownPolytope& p, const RationalVector& x) {
    const int c = cmp(max_root_value(p, x), 1);
    if (c < 0) return Membership::interior;
    if (c == 0) return Membership::boundary;
    return Membership::exterior;
}

std::vector<RationalVector> extreme_candidates(const CrownPolytope& p) {
    const RootDatum& rd = p.constraint_system;
    if (!is_irreducible(rd)) throw Error(rd.label + ": extreme candidates need an irreducible root system");
    std::vector<RationalVector> out;
    for (std::size_t j = 0; j < rd.dual_basis.size(); ++j)
        out.push_back(ratio(1, rd.highest.coefficients[j]) * rd.dual_basis[j]);
    return out;
}

bool is_extreme_point(const CrownPolytope& p, const RationalVector& y) {
    const Membership m = membership(p, y);
    if (m == Membership::exterior) throw Error("is_extreme_point: " + y.to_string() + " lies outside the polytope");
    if (m == Membership::interior) return false;
    std::vector<QVector> active;
    for (const auto& a : p.constraints())
        if (abs(dot(a, y)) == 1) active.push_back(QVector::from_dense(a.coords()));
    return rank_of(active, y.dim()) == static_cast<std::size_t>(p.constraint_system.rank);
}

std::size_t ExtremeDecomposition::total() const {
    std::size_t n = 0;
    for (const auto& o : orbits) n += o.size();
    return n;
}

std::vector<RationalVector> ExtremeDecomposition::elements() const {
    std::vector<RationalVector> all;
    for (const auto& o : orbits) all.insert(all.end(), o.elements.begin(), o.elements.end());
    std::sort(all.begin(), all.end());
    return all;
}

ExtremeDecomposition extreme_orbits(const CrownPolytope& p) {
    std::vector<RationalVector> points;
    std::vector<RationalVector> seen_reps;
    for (const auto& c : extreme_candidates(p)) {
        if (!is_extreme_point(p, c)) continue;
        const RationalVector rep = dominant_representative(p.constraint_system, c);
        if (std::find(seen_reps.begin(), seen_reps.end(), rep) != seen_reps.end()) continue;
        seen_reps.push_back(rep);
        const WeylOrbit o = orbit(p.constraint_system, c);
        points.insert(points.end(), o.elements.begin(), o.elements.end());
    }
    return {partition_into_orbits(p.weyl_system, std::move(points))};
}

namespace {

std::optional<DenseMatrix<Rational>> inverse(DenseMatrix<Rational> a) {
    const std::size_t n = a.size();
    DenseMatrix<Rational> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(a[piv][k]) == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[k]);
        std::swap(inv[piv], inv[k]);
        const Rational f = Rational(1) / a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] *= f;
            inv[k][j] *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || sgn(a[i][k]) == 0) continue;
            const Rational g = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[k][j];
                inv[i][j] -= g * inv[k][j];
            }
        }
    }
    return inv;
}

}  // namespace

std::vector<RationalVector> brute_force_vertices(const CrownPolytope& p) {
    const RootDatum& rd = p.constraint_system;
    if (rd.rank > 4) throw Error("brute_force_vertices: rank " + std::to_string(rd.rank) + " exceeds the limit 4");
    const std::size_t dim = rd.ambient_dim;
    const auto r = static_cast<std::size_t>(rd.rank);
    const auto& cons = p.constraints();

    // Orthogonal complement of span(roots) pins the solution inside the span.
    Echelon<Rational> span(dim);
    for (const auto& a : rd.simple) span.insert(QVector::from_dense(a.coords()));
    std::vector<std::vector<Rational>> complement;
    for (const auto& v : span.nullspace()) complement.push_back(v.to_dense(dim));

    std::vector<RationalVector> vertices;
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        DenseMatrix<Rational> m;
        for (std::size_t i : pick) m.push_back(cons[i].coords());
        for (const auto& c : complement) m.push_back(c);
        if (auto inv = inverse(m)) {
            for (unsigned signs = 0; signs < (1U << r); ++signs) {
                RationalVector x(dim);
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t k = 0; k < r; ++k)
                        x[i] += (*inv)[i][k] * Rational(((signs >> k) & 1U) ? -1 : 1);
                if (membership(p, x) != Membership::exterior) vertices.push_back(std::move(x));
            }
        }
        // next combination
        std::size_t k = r;
        while (k > 0 && pick[k - 1] == cons.size() - r + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

namespace {

RootDatum long_root_c(int n) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<RationalVector> roots;
    std::vector<RationalVector> simple;
    auto e = [un](std::size_t i) { return RationalVector::unit(un, i); };
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = 0; j < un; ++j)
            if (i != j)
                for (int s : {1, -1})
                    for (int t : {1, -1}) roots.push_back(Rational(s) * e(i) + Rational(t) * e(j));
        roots.push_back(Rational(2) * e(i));
        roots.push_back(Rational(-2) * e(i));
    }
    for (std::size_t i = 0; i + 1 < un; ++i) simple.push_back(e(i) - e(i + 1));
    simple.push_back(Rational(2) * e(un - 1));
    return make_root_datum(Family::C, n, std::move(roots), std::move(simple), "C" + std::to_string(n) + "[long 2e_i]");
}

}  // namespace

CrownPolytope xi0_polytope(std::string_view algebra) {
    const AlgebraName name = parse_algebra_name(algebra);
    const SimpleAlgebraName s = name.simple();
    auto unsupported = [&] {
        return Error("xi0_polytope: unsupported algebra " + name.to_string() +
                     " (expected so(p,q) with 1 <= p <= q, p = q >= 3, or so(n,C) with n = 3 or n >= 5)");
    };
    if (s.kind == AlgebraKind::so_pq) {
        const int p = std::min(s.a, s.b);
        const int q = std::max(s.a, s.b);
        if (p < 1) throw unsupported();
        if (p == q) {
            if (p < 3) throw unsupported();
            return {build_root_system(Family::D, p), long_root_c(p)};
        }
        return {build_root_system(Family::B, p), build_root_system(Family::BC, p)};
    }
    if (s.kind == AlgebraKind::so_C) {
        const int n = s.a;
        if (n % 2 == 0) {
            if (n < 6) throw unsupported();
            return {build_root_system(Family::D, n / 2), long_root_c(n / 2)};
        }
        if (n < 3) throw unsupported();
        return {build_root_system(Family::B, n / 2), build_root_system(Family::BC, n / 2)};
    }
    throw unsupported();
}

}  // namespace xi
