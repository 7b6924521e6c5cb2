#include "xi/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace xi {

// ---------------------------------------------------------------- vectors

RationalVector RationalVector::unit(std::size_t dim, std::size_t i, Rational v) {
    RationalVector r(dim);
    r.c_.at(i) = std::move(v);
    return r;
}

bool RationalVector::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
    if (o.dim() != dim()) throw Error("vector dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
    if (o.dim() != dim()) throw Error("vector dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

RationalVector& RationalVector::operator*=(const Rational& f) {
    for (auto& x : c_) x *= f;
    return *this;
}

bool operator<(const RationalVector& a, const RationalVector& b) {
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::vector<std::string> RationalVector::to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& q : c_) out.push_back(xi::to_string(q));
    return out;
}

std::string RationalVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += xi::to_string(c_[i]);
    }
    return s + ")";
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.dim() != b.dim()) throw Error("dot: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
    return acc;
}

std::size_t RationalVectorHash::operator()(const RationalVector& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& q : v.coords()) {
        const mpz_srcptr num = q.get_num_mpz_t();
        const mpz_srcptr den = q.get_den_mpz_t();
        mix(static_cast<std::size_t>(mpz_getlimbn(num, 0)));
        mix(static_cast<std::size_t>(mpz_sgn(num) + 2));
        mix(static_cast<std::size_t>(mpz_getlimbn(den, 0)));
    }
    return h;
}

// ---------------------------------------------------------------- names

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::BC: return "BC";
        case Family::E6: return "E";
        case Family::E7: return "E";
    }
    return "?";
}

std::string datum_name(Family f, int rank) { return family_name(f) + std::to_string(rank); }

std::pair<Family, int> parse_datum_name(std::string_view label) {
    std::string s;
    for (char c : label)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    std::size_t k = 0;
    while (k < s.size() && std::isalpha(static_cast<unsigned char>(s[k]))) ++k;
    const std::string fam = s.substr(0, k);
    const std::string num = s.substr(k);
    const bool digits = !num.empty() && num.size() <= 3 &&
                        std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!digits) throw Error("invalid root system label '" + std::string(label) + "' (expected e.g. A3, B4, C3, D4, BC2, E6, E7)");
    const int n = std::stoi(num);
    if (fam == "A") return {Family::A, n};
    if (fam == "B") return {Family::B, n};
    if (fam == "C") return {Family::C, n};
    if (fam == "D") return {Family::D, n};
    if (fam == "BC") return {Family::BC, n};
    if (fam == "E" && n == 6) return {Family::E6, 6};
    if (fam == "E" && n == 7) return {Family::E7, 7};
    throw Error("invalid root system label '" + std::string(label) + "' (expected e.g. A3, B4, C3, D4, BC2, E6, E7)");
}

// ---------------------------------------------------------------- datum

namespace {

DenseMatrix<Rational> invert(DenseMatrix<Rational> a) {
    const std::size_t n = a.size();
    DenseMatrix<Rational> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a[p][k]) == 0) ++p;
        if (p == n) throw Error("singular matrix");
        std::swap(a[p], a[k]);
        std::swap(inv[p], inv[k]);
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

std::size_t expected_root_count(Family f, int n) {
    switch (f) {
        case Family::A: return static_cast<std::size_t>((n + 1) * n);
        case Family::B:
        case Family::C: return static_cast<std::size_t>(2 * n * n);
        case Family::D: return static_cast<std::size_t>(2 * n * (n - 1));
        case Family::BC: return static_cast<std::size_t>(2 * n * n + 2 * n);
        case Family::E6: return 72;
        case Family::E7: return 126;
    }
    return 0;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

std::uint64_t weyl_order(Family family, int rank) {
    std::uint64_t fact = 1;
    const int m = family == Family::A ? rank + 1 : rank;
    for (int k = 2; k <= m; ++k) fact *= static_cast<std::uint64_t>(k);
    switch (family) {
        case Family::A: return fact;
        case Family::B:
        case Family::C:
        case Family::BC: return (std::uint64_t{1} << rank) * fact;
        case Family::D: return (std::uint64_t{1} << (rank - 1)) * fact;
        case Family::E6: return 51840;
        case Family::E7: return 2903040;
    }
    return 0;
}

bool RootDatum::contains(const RationalVector& v) const { return std::binary_search(roots.begin(), roots.end(), v); }

std::vector<Rational> RootDatum::simple_coordinates(const RationalVector& v) const {
    std::vector<Rational> c;
    c.reserve(dual_basis.size());
    for (const auto& w : dual_basis) c.push_back(dot(w, v));
    return c;
}

RationalVector RootDatum::project(const RationalVector& v) const {
    RationalVector p(ambient_dim);
    for (std::size_t i = 0; i < simple.size(); ++i) p += dot(dual_basis[i], v) * simple[i];
    return p;
}

std::vector<Rational> RootDatum::root_lengths() const {
    std::set<Rational> lengths;
    for (const auto& a : roots) lengths.insert(dot(a, a));
    return {lengths.begin(), lengths.end()};
}

std::vector<RationalVector> dual_basis(const RootDatum& rd) {
    const std::size_t n = rd.simple.size();
    DenseMatrix<Rational> gram(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram[i][j] = dot(rd.simple[i], rd.simple[j]);
    const auto inv = invert(gram);
    std::vector<RationalVector> omega;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector w(rd.ambient_dim);
        for (std::size_t j = 0; j < n; ++j) w += inv[i][j] * rd.simple[j];
        omega.push_back(std::move(w));
    }
    return omega;
}

HighestRoot highest_root(const RootDatum& rd) {
    const RationalVector* best = nullptr;
    Rational best_height = -1;
    for (const auto& a : rd.positive) {
        Rational h = 0;
        for (const auto& c : rd.simple_coordinates(a)) h += c;
        if (h > best_height) {
            best_height = h;
            best = &a;
        }
    }
    if (best == nullptr) throw Error("highest root of an empty system");
    HighestRoot hr{*best, {}};
    for (const auto& c : rd.simple_coordinates(*best)) hr.coefficients.push_back(c.get_num().get_si());
    for (const auto& a : rd.positive)
        for (const auto& c : rd.simple_coordinates(hr.root - a))
            if (sgn(c) < 0) throw Error(rd.label + ": the system has no unique highest root (reducible?)");
    return hr;
}

std::uint64_t weyl_order(const RootDatum& rd) { return weyl_order(rd.family, rd.rank); }

RootDatum make_root_datum(Family family, int rank, std::vector<RationalVector> roots,
                          std::vector<RationalVector> simple, std::string label) {
    if (simple.size() != static_cast<std::size_t>(rank)) throw Error(label + ": simple root count differs from rank");
    RootDatum rd;
    rd.family = family;
    rd.rank = rank;
    rd.label = std::move(label);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    rd.roots = std::move(roots);
    rd.simple = std::move(simple);
    rd.ambient_dim = rd.simple.front().dim();
    for (const auto& a : rd.roots) {
        if (a.dim() != rd.ambient_dim) throw Error(rd.label + ": inconsistent ambient dimension");
        if (a.is_zero()) throw Error(rd.label + ": zero is not a root");
        if (!rd.contains(-a)) throw Error(rd.label + ": root set is not symmetric");
    }
    for (const auto& a : rd.simple)
        if (!rd.contains(a)) throw Error(rd.label + ": simple root not in the root set");
    rd.dual_basis = dual_basis(rd);
    for (const auto& a : rd.roots) {
        if (!rd.in_span(a)) throw Error(rd.label + ": root outside the span of the simple roots");
        const auto c = rd.simple_coordinates(a);
        bool nonneg = true;
        bool nonpos = true;
        for (const auto& x : c) {
            if (!is_integer(x)) throw Error(rd.label + ": non-integral simple coordinates for " + a.to_string());
            nonneg = nonneg && sgn(x) >= 0;
            nonpos = nonpos && sgn(x) <= 0;
        }
        if (!nonneg && !nonpos) throw Error(rd.label + ": root with mixed-sign simple coordinates");
        if (nonneg) rd.positive.push_back(a);
    }
    if (rd.positive.size() * 2 != rd.roots.size()) throw Error(rd.label + ": positive system is not half of the roots");
    if (is_irreducible(rd)) rd.highest = highest_root(rd);
    rd.weyl_order = weyl_order(family, rank);
    return rd;
}

RootDatum build_root_system(Family family, int n) {
    const std::string label = datum_name(family, n);
    auto bad = [&] { return Error("invalid root system " + label + " (A,B,C,BC: rank >= 1; D: rank >= 2; E6; E7; rank <= 12)"); };
    if (n < 1 || n > 12) throw bad();
    if (family == Family::D && n < 2) throw bad();
    if (family == Family::E6 && n != 6) throw bad();
    if (family == Family::E7 && n != 7) throw bad();

    std::vector<RationalVector> roots;
    std::vector<RationalVector> simple;
    const Rational half(1, 2);

    auto e = [](std::size_t dim, std::size_t i) { return RationalVector::unit(dim, i); };
    auto add_pm_pairs = [&](std::size_t dim, std::size_t count, const Rational& scale) {
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j)
                if (i != j)
                    for (int s : {1, -1})
                        for (int t : {1, -1}) roots.push_back(scale * (Rational(s) * e(dim, i) + Rational(t) * e(dim, j)));
    };
    auto add_singles = [&](std::size_t dim, std::size_t count, const Rational& scale) {
        for (std::size_t i = 0; i < count; ++i)
            for (int s : {1, -1}) roots.push_back(Rational(s) * scale * e(dim, i));
    };

    const auto un = static_cast<std::size_t>(n);
    switch (family) {
        case Family::A: {
            const std::size_t dim = un + 1;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    if (i != j) roots.push_back(e(dim, i) - e(dim, j));
            for (std::size_t i = 0; i + 1 < dim; ++i) simple.push_back(e(dim, i) - e(dim, i + 1));
            break;
        }
        case Family::B:
        case Family::BC: {
            add_pm_pairs(un, un, 1);
            add_singles(un, un, 1);
            if (family == Family::BC) add_singles(un, un, 2);
            for (std::size_t i = 0; i + 1 < un; ++i) simple.push_back(e(un, i) - e(un, i + 1));
            simple.push_back(e(un, un - 1));
            break;
        }
        case Family::C: {
            // 1/2(+-e_i +- e_j) with i = j allowed gives the long roots +-e_i.
            add_pm_pairs(un, un, half);
            add_singles(un, un, 1);
            for (std::size_t i = 0; i + 1 < un; ++i) simple.push_back(half * (e(un, i) - e(un, i + 1)));
            simple.push_back(e(un, un - 1));
            break;
        }
        case Family::D: {
            add_pm_pairs(un, un, 1);
            for (std::size_t i = 0; i + 1 < un; ++i) simple.push_back(e(un, i) - e(un, i + 1));
            simple.push_back(e(un, un - 2) + e(un, un - 1));
            break;
        }
        case Family::E6:
        case Family::E7: {
            const std::size_t dim = 8;
            const std::size_t integral = family == Family::E6 ? 5 : 6;
            add_pm_pairs(dim, integral, 1);
            if (family == Family::E7) {
                roots.push_back(e(dim, 6) - e(dim, 7));
                roots.push_back(e(dim, 7) - e(dim, 6));
            }
            for (unsigned mask = 0; mask < 256; ++mask) {
                RationalVector v(dim);
                int minus = 0;
                for (std::size_t j = 0; j < dim; ++j) {
                    const bool neg = (mask >> j) & 1U;
                    minus += neg ? 1 : 0;
                    v[j] = neg ? -half : half;
                }
                if (minus % 2 != 0) continue;
                // E6: v6 = v7 = -v8; E7: v7 = -v8 (1-based).
                if (v[6] != -v[7]) continue;
                if (family == Family::E6 && v[5] != v[6]) continue;
                roots.push_back(std::move(v));
            }
            RationalVector a1(dim);
            for (std::size_t j = 0; j < dim; ++j) a1[j] = (j == 0 || j == 7) ? half : -half;
            simple.push_back(a1);
            simple.push_back(e(dim, 0) + e(dim, 1));
            for (std::size_t i = 1; i < integral; ++i) simple.push_back(e(dim, i) - e(dim, i - 1));
            break;
        }
    }
    RootDatum rd = make_root_datum(family, n, std::move(roots), std::move(simple), label);
    if (rd.roots.size() != expected_root_count(family, n))
        throw Error(label + ": root count " + std::to_string(rd.roots.size()) + " differs from the family count");
    return rd;
}

RootDatum build_root_system(std::string_view label) {
    const auto [f, n] = parse_datum_name(label);
    return build_root_system(f, n);
}

std::vector<std::vector<long>> cartan_matrix(const RootDatum& rd) {
    const std::size_t n = rd.simple.size();
    std::vector<std::vector<long>> c(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational x = 2 * dot(rd.simple[i], rd.simple[j]) / dot(rd.simple[j], rd.simple[j]);
            if (!is_integer(x)) throw Error(rd.label + ": non-integral Cartan integer");
            c[i][j] = x.get_num().get_si();
        }
    return c;
}

bool is_irreducible(const RootDatum& rd) {
    const std::size_t n = rd.simple.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (!seen[j] && sgn(dot(rd.simple[i], rd.simple[j])) != 0) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace xi
