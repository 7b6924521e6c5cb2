#include "xi/chevalley.hpp"

#include <algorithm>

namespace xi {

namespace {

std::vector<long> integer_coordinates(const RootDatum& rd, const RationalVector& v) {
    std::vector<long> c;
    for (const auto& x : rd.simple_coordinates(v)) c.push_back(x.get_num().get_si());
    return c;
}

}  // namespace

std::size_t ChevalleyAlgebra::root_index(const RationalVector& a) const {
    auto it = std::lower_bound(datum.roots.begin(), datum.roots.end(), a);
    if (it == datum.roots.end() || *it != a) throw Error("chevalley: " + a.to_string() + " is not a root");
    return rank() + static_cast<std::size_t>(it - datum.roots.begin());
}

long ChevalleyAlgebra::structure_constant(const RationalVector& a, const RationalVector& b) const {
    const RationalVector s = a + b;
    if (!datum.contains(s)) return 0;
    const QVector& v = algebra.bracket(root_index(a), root_index(b));
    return v.at(root_index(s)).get_num().get_si();
}

ChevalleyAlgebra build_chevalley(const RootDatum& rd) {
    if (!is_irreducible(rd)) throw Error("chevalley: " + rd.label + " is reducible");
    for (const auto& a : rd.roots)
        if (dot(a, a) != 2) throw Error("chevalley: " + rd.label + " is not simply laced with roots of length 2");
    const std::size_t r = rd.simple.size();
    const std::size_t nroots = rd.roots.size();

    std::vector<std::vector<long>> coords;
    std::vector<int> sign;
    for (const auto& a : rd.roots) {
        coords.push_back(integer_coordinates(rd, a));
        sign.push_back(std::binary_search(rd.positive.begin(), rd.positive.end(), a) ? 1 : -1);
    }
    // eps(a_i, a_j) = -1 iff i == j or (i < j and the nodes are joined).
    std::vector<std::vector<int>> odd(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) odd[i][j] = (i == j || sgn(dot(rd.simple[i], rd.simple[j])) != 0) ? 1 : 0;
    auto eps = [&](std::size_t x, std::size_t y) {
        long parity = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j)
                if (odd[i][j]) parity += coords[x][i] * coords[y][j];
        return parity % 2 == 0 ? 1 : -1;
    };

    ChevalleyAlgebra ca;
    ca.datum = rd;
    const std::size_t dim = r + nroots;
    ca.algebra = make_lie_algebra(dim, [&](std::size_t i, std::size_t j) {
        QVector out;
        if (j < r) return out;  // [h_i, h_j] = 0
        const std::size_t y = j - r;
        if (i < r) {
            const Rational c = dot(rd.roots[y], rd.simple[i]);
            out.push_back(j, c);
            return out;
        }
        const std::size_t x = i - r;
        const RationalVector s = rd.roots[x] + rd.roots[y];
        if (s.is_zero()) {
            // [f_a, f_-a] = h_a
            for (std::size_t k = 0; k < r; ++k) out.push_back(k, Rational(coords[x][k]));
            return out;
        }
        auto it = std::lower_bound(rd.roots.begin(), rd.roots.end(), s);
        if (it == rd.roots.end() || *it != s) return out;
        const std::size_t z = static_cast<std::size_t>(it - rd.roots.begin());
        out.push_back(r + z, Rational(sign[x] * sign[y] * sign[z] * eps(x, y)));
        return out;
    });
    return ca;
}

namespace {

std::vector<QVector> chevalley_chart(const ChevalleyAlgebra& ca) {
    const RootDatum& rd = ca.datum;
    std::vector<QVector> chart;
    for (std::size_t k = 0; k < rd.ambient_dim; ++k) {
        QVector h;
        for (std::size_t i = 0; i < rd.simple.size(); ++i) h.push_back(i, rd.dual_basis[i][k]);
        chart.push_back(std::move(h));
    }
    return chart;
}

QMatrix split_theta(const ChevalleyAlgebra& ca) {
    const std::size_t r = ca.rank();
    const std::size_t d = ca.algebra.dim();
    std::vector<QVector> cols(d);
    for (std::size_t i = 0; i < r; ++i) cols[i] = QVector::unit(i, Rational(-1));
    for (std::size_t x = 0; x < ca.datum.roots.size(); ++x)
        cols[r + x] = QVector::unit(ca.root_index(-ca.datum.roots[x]), Rational(-1));
    return QMatrix::from_columns(d, std::move(cols));
}

}  // namespace

Realization split_real_form(const ChevalleyAlgebra& ca) {
    Realization out;
    out.name = "split " + ca.datum.label;
    out.algebra = ca.algebra;
    out.theta = split_theta(ca);
    out.datum = ca.datum;
    out.chart = chevalley_chart(ca);
    return out;
}

Realization complex_as_real(const ChevalleyAlgebra& ca) {
    const LieAlgebra& g = ca.algebra;
    const std::size_t d = g.dim();
    auto shift = [&](const QVector& v, std::size_t off, const Rational& f) {
        QVector out;
        for (const auto& [k, c] : v) out.push_back(k + off, f * c);
        return out;
    };
    Realization out;
    out.name = "complex " + ca.datum.label;
    // Basis b_0..b_{d-1}, then J b_0..J b_{d-1}.
    out.algebra = make_lie_algebra(2 * d, [&](std::size_t i, std::size_t j) {
        if (j < d) return g.bracket(i, j);
        if (i < d) return shift(g.bracket(i, j - d), d, 1);
        if (i >= d) return shift(g.bracket(i - d, j - d), 0, -1);
        return QVector{};
    });
    const QMatrix th = split_theta(ca);
    std::vector<QVector> cols(2 * d);
    for (std::size_t j = 0; j < d; ++j) {
        cols[j] = th.column(j);
        cols[j + d] = shift(th.column(j), d, -1);
    }
    out.theta = QMatrix::from_columns(2 * d, std::move(cols));
    out.datum = ca.datum;
    out.chart = chevalley_chart(ca);
    return out;
}

LieAlgebra inner_real_form(const ChevalleyAlgebra& ca, std::size_t node) {
    const Realization c = complex_as_real(ca);
    const std::size_t r = ca.rank();
    const std::size_t d = ca.algebra.dim();
    if (node >= r) throw Error("inner real form: node out of range");
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < r; ++i) basis.push_back(QVector::unit(i + d));  // J h_i
    for (const auto& a : ca.datum.positive) {
        const std::size_t p = ca.root_index(a);
        const std::size_t m = ca.root_index(-a);
        const bool even = integer_coordinates(ca.datum, a)[node] % 2 == 0;
        auto pair = [](std::size_t x, std::size_t y, int s) {
            // e_x + s e_y with x, y in increasing order
            QVector v;
            if (x < y) {
                v.push_back(x, Rational(1));
                v.push_back(y, Rational(s));
            } else {
                v.push_back(y, Rational(s));
                v.push_back(x, Rational(1));
            }
            return v;
        };
        if (even) {
            basis.push_back(pair(p, m, -1));          // f_a - f_-a
            basis.push_back(pair(p + d, m + d, 1));   // J(f_a + f_-a)
        } else {
            basis.push_back(pair(p + d, m + d, -1));  // J(f_a - f_-a)
            basis.push_back(pair(p, m, 1));           // f_a + f_-a
        }
    }
    return subalgebra(c.algebra, basis);
}

}  // namespace xi
