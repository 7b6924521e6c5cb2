#include "xi/jordan.hpp"

#include <algorithm>
#include <cctype>

#include "xi/classify.hpp"
#include "xi/realizations.hpp"
#include "xi/weyl.hpp"

namespace xi {

JordanAlgebra::JordanAlgebra(JordanKind kind, std::size_t n) : kind_(kind), n_(n) {
    if (n < 1 || n > 8) throw Error("Jordan algebra: need 1 <= n <= 8");
}

std::string JordanAlgebra::name() const {
    const std::string n = std::to_string(n_);
    return kind_ == JordanKind::symmetric_real ? "Symm(" + n + ",R)" : "Herm(" + n + ",C)";
}

bool JordanAlgebra::contains(const ComplexMatrix& x) const {
    if (x.size() != n_) return false;
    for (const auto& row : x)
        if (row.size() != n_) return false;
    if (kind_ == JordanKind::symmetric_real && !is_real(x)) return false;
    return adjoint(x) == x;
}

ComplexMatrix JordanAlgebra::product(const ComplexMatrix& x, const ComplexMatrix& y) const {
    ComplexMatrix s = x * y;
    const ComplexMatrix t = y * x;
    const Gaussian half(Rational(1, 2));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s[i][j] = half * (s[i][j] + t[i][j]);
    return s;
}

ComplexMatrix JordanAlgebra::unit() const { return frame_point(*this, n_); }

std::vector<ComplexMatrix> JordanAlgebra::frame() const {
    std::vector<ComplexMatrix> out;
    for (std::size_t j = 0; j < n_; ++j) {
        ComplexMatrix c = zero_complex(n_);
        c[j][j] = Gaussian(1);
        out.push_back(std::move(c));
    }
    return out;
}

JordanKind parse_jordan_kind(std::string_view text) {
    std::string s;
    for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "symm") return JordanKind::symmetric_real;
    if (s == "herm") return JordanKind::hermitian_complex;
    throw Error("unknown Jordan algebra '" + std::string(text) + "'; expected symm or herm");
}

namespace {

void require_member(const JordanAlgebra& v, const ComplexMatrix& x) {
    if (!v.contains(x)) throw Error("element is not in " + v.name());
}

}  // namespace

Rational jordan_det(const JordanAlgebra& v, const ComplexMatrix& x) {
    require_member(v, x);
    ComplexMatrix a = x;
    const std::size_t n = a.size();
    Gaussian det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && is_zero(a[piv][k])) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(a[i][k])) continue;
            const Gaussian f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    if (!det.is_real()) throw Error("determinant of a Hermitian matrix is not real");
    return det.re;
}

Polynomial characteristic_polynomial(const JordanAlgebra& v, const ComplexMatrix& x) {
    require_member(v, x);
    // Faddeev-LeVerrier: M_k = x M_(k-1) + c_(n-k+1) I, c_(n-k) = -tr(x M_k) / k.
    const std::size_t n = x.size();
    std::vector<Gaussian> c(n + 1, Gaussian(0));
    c[n] = Gaussian(1);
    ComplexMatrix m = zero_complex(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = x * m;
        for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
        const ComplexMatrix xm = x * m;
        Gaussian tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += xm[i][i];
        c[n - k] = -tr / Gaussian(Rational(static_cast<long>(k)));
    }
    std::vector<Rational> coeffs;
    for (const auto& z : c) {
        if (!z.is_real()) throw Error("characteristic polynomial of a Hermitian matrix is not real");
        coeffs.push_back(z.re);
    }
    return Polynomial(std::move(coeffs));
}

StratumLabel signature_stratum(const JordanAlgebra& v, const ComplexMatrix& x) {
    const Polynomial f = characteristic_polynomial(v, x);
    return {count_positive_roots(f), f(Rational(0)) != 0};
}

Signature inertia(const JordanAlgebra& v, const ComplexMatrix& x) {
    require_member(v, x);
    return congruence_signature(x);
}

ComplexMatrix frame_point(const JordanAlgebra& v, std::size_t p) {
    const std::size_t n = v.rank();
    if (p > n) throw Error("frame point: p = " + std::to_string(p) + " exceeds the rank " + std::to_string(n));
    ComplexMatrix z = zero_complex(n);
    for (std::size_t j = 0; j < n; ++j) z[j][j] = Gaussian(j < p ? 1 : -1);
    return z;
}

std::size_t positive_count(const RationalVector& signs) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < signs.dim(); ++i)
        if (sgn(signs[i]) > 0) ++k;
    return k;
}

ExtremeDecomposition xi0_extreme_orbits(const JordanAlgebra& v) {
    const std::size_t n = v.rank();
    std::vector<RationalVector> points;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < n; ++i) c.emplace_back((mask >> i) & 1 ? -1 : 1);
        points.emplace_back(std::move(c));
    }
    ExtremeDecomposition out;
    if (n == 1) {
        // S_1 is trivial.
        std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return b < a; });
        for (auto& pt : points) out.orbits.push_back({pt, {pt}});
        return out;
    }
    out.orbits = partition_into_orbits(build_root_system(Family::A, static_cast<int>(n) - 1), std::move(points));
    return out;
}

StratumStabilizer stratum_stabilizer_algebra(const JordanAlgebra& v, std::size_t p) {
    const std::size_t n = v.rank();
    const ComplexMatrix z = frame_point(v, p);
    const bool real = v.kind() == JordanKind::symmetric_real;
    std::vector<MatrixMap> conditions{[z](const ComplexMatrix& a) {
        ComplexMatrix s = a * z;
        const ComplexMatrix t = z * adjoint(a);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) s[i][j] += t[i][j];
        return s;
    }};
    if (!real)
        // i R I acts trivially on V; remove it.
        conditions.push_back([](const ComplexMatrix& a) {
            Rational im = 0;
            for (std::size_t i = 0; i < a.size(); ++i) im += a[i][i].im;
            return ComplexMatrix{{Gaussian(im)}};
        });

    StratumStabilizer s;
    s.p = p;
    s.basis = solve_matrix_conditions(n, real, conditions);
    const std::string family = real ? "so" : "su";
    const bool definite = p == 0 || p == n;
    s.expected = definite ? family + "(" + std::to_string(n) + ")"
                          : family + "(" + std::to_string(p) + "," + std::to_string(n - p) + ")";
    const LieAlgebra h = s.basis.empty() ? make_lie_algebra(0, [](std::size_t, std::size_t) { return QVector{}; })
                                         : matrix_lie_algebra(s.basis);
    s.fingerprint = fingerprint(h);
    // Negative definite trace form Re tr(XY): detects so(2) as compact, unlike the Killing form.
    DenseMatrix<Rational> form(s.basis.size(), std::vector<Rational>(s.basis.size(), Rational(0)));
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        for (std::size_t j = 0; j < s.basis.size(); ++j) {
            const ComplexMatrix xy = s.basis[i] * s.basis[j];
            for (std::size_t k = 0; k < n; ++k) form[i][j] += xy[k][k].re;
        }
    s.compact = congruence_signature(form).minus == s.basis.size();
    s.name = identify_real_form(h, s.basis, {s.expected}).name;
    return s;
}

bool stratum_transitivity_check(const JordanAlgebra& v, std::size_t p, const std::vector<ComplexMatrix>& samples) {
    const Signature target = inertia(v, frame_point(v, p));
    return std::all_of(samples.begin(), samples.end(), [&](const ComplexMatrix& x) {
        return v.contains(x) && jordan_det(v, x) != 0 && inertia(v, x) == target;
    });
}

}  // namespace xi
