#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "xi/jordan.hpp"

using namespace xi;
using xi::testing::small_gaussian;
using xi::testing::small_rational;
using xi::testing::uniform;

namespace {

ComplexMatrix random_element(const JordanAlgebra& v) {
    const std::size_t n = v.rank();
    ComplexMatrix x = zero_complex(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i][i] = Gaussian(small_rational());
        for (std::size_t j = i + 1; j < n; ++j) {
            x[i][j] = v.kind() == JordanKind::symmetric_real ? Gaussian(small_rational()) : small_gaussian();
            x[j][i] = conj(x[i][j]);
        }
    }
    return x;
}

ComplexMatrix add(ComplexMatrix a, const ComplexMatrix& b, const Gaussian& f = Gaussian(1)) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += f * b[i][j];
    return a;
}

ComplexMatrix identity(std::size_t n) {
    ComplexMatrix e = zero_complex(n);
    for (std::size_t i = 0; i < n; ++i) e[i][i] = Gaussian(1);
    return e;
}

/// Gauss-Jordan inverse; the inputs here are always invertible.
ComplexMatrix inverse(ComplexMatrix a) {
    const std::size_t n = a.size();
    ComplexMatrix b = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (a[piv][k] == Gaussian(0)) ++piv;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        const Gaussian inv = Gaussian(1) / a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] *= inv;
            b[k][j] *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == Gaussian(0)) continue;
            const Gaussian f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                b[i][j] -= f * b[k][j];
            }
        }
    }
    return b;
}

/// Leibniz expansion, as an independent determinant.
Gaussian leibniz_det(const ComplexMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Gaussian total(0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Gaussian term(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Cayley transform (1 - a)(1 + a)^-1 of a random skew-adjoint a: orthogonal or unitary.
ComplexMatrix random_isometry(const JordanAlgebra& v) {
    const std::size_t n = v.rank();
    ComplexMatrix a = zero_complex(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v.kind() == JordanKind::hermitian_complex) a[i][i] = Gaussian(0, small_rational(2, 2));
        for (std::size_t j = i + 1; j < n; ++j) {
            a[i][j] = v.kind() == JordanKind::symmetric_real ? Gaussian(small_rational(2, 2)) : small_gaussian(2, 2);
            a[j][i] = -conj(a[i][j]);
        }
    }
    return add(identity(n), a, Gaussian(-1)) * inverse(add(identity(n), a));
}

/// Copies the first row and column into the last one, making x singular when n > 1.
ComplexMatrix with_repeated_row(ComplexMatrix x) {
    const std::size_t n = x.size();
    if (n < 2) return x;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        x[n - 1][j] = x[0][j];
        x[j][n - 1] = x[j][0];
    }
    x[n - 1][n - 1] = x[0][0];
    x[0][n - 1] = x[0][0];
    x[n - 1][0] = x[0][0];
    return x;
}

std::vector<JordanAlgebra> small_algebras() {
    std::vector<JordanAlgebra> out;
    for (std::size_t n = 1; n <= 5; ++n) {
        out.emplace_back(JordanKind::symmetric_real, n);
        out.emplace_back(JordanKind::hermitian_complex, n);
    }
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("Jordan algebra basics") {
    const JordanAlgebra s(JordanKind::symmetric_real, 3);
    const JordanAlgebra h(JordanKind::hermitian_complex, 2);
    CHECK(s.name() == "Symm(3,R)");
    CHECK(h.name() == "Herm(2,C)");
    CHECK(parse_jordan_kind("HERM") == JordanKind::hermitian_complex);
    CHECK_THROWS_AS(parse_jordan_kind("quat"), Error);
    CHECK_THROWS_AS(JordanAlgebra(JordanKind::symmetric_real, 0), Error);
    CHECK_THROWS_AS(JordanAlgebra(JordanKind::symmetric_real, 9), Error);
    CHECK(s.frame().size() == 3);
    ComplexMatrix skew = zero_complex(2);
    skew[0][1] = Gaussian(1);
    skew[1][0] = Gaussian(-1);
    CHECK_FALSE(h.contains(skew));
    skew[1][0] = Gaussian(1);
    CHECK(h.contains(skew));
    CHECK_FALSE(s.contains(ComplexMatrix{{Gaussian(0, 1)}}));
}

TEST_CASE("Jordan identity, commutativity and unit") {
    for (const auto& v : small_algebras()) {
        for (int k = 0; k < 5; ++k) {
            const auto x = random_element(v);
            const auto y = random_element(v);
            CHECK(v.contains(x));
            CHECK(v.product(x, y) == v.product(y, x));
            CHECK(v.contains(v.product(x, y)));
            CHECK(v.product(v.unit(), x) == x);
            const auto x2 = v.product(x, x);
            CHECK(v.product(v.product(x2, y), x) == v.product(x2, v.product(y, x)));
        }
    }
}

TEST_CASE("frame idempotents are orthogonal and sum to the unit") {
    for (const auto& v : small_algebras()) {
        const auto c = v.frame();
        ComplexMatrix sum = zero_complex(v.rank());
        for (std::size_t i = 0; i < c.size(); ++i) {
            sum = add(sum, c[i]);
            CHECK(v.product(c[i], c[i]) == c[i]);
            for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(v.product(c[i], c[j]) == zero_complex(v.rank()));
        }
        CHECK(sum == v.unit());
    }
}

TEST_CASE("determinant and characteristic polynomial") {
    for (const auto& v : small_algebras()) {
        const std::size_t n = v.rank();
        for (std::size_t p = 0; p <= n; ++p)
            CHECK(jordan_det(v, frame_point(v, p)) == ((n - p) % 2 ? -1 : 1));
        if (n > 4) continue;
        for (int k = 0; k < 10; ++k) {
            const auto x = random_element(v);
            const Rational d = jordan_det(v, x);
            CHECK(Gaussian(d) == leibniz_det(x));
            const Polynomial chi = characteristic_polynomial(v, x);
            CHECK(chi.degree() == static_cast<long>(n));
            CHECK(chi.leading() == 1);
            CHECK(chi(0) == (n % 2 ? -d : d));
        }
    }
}

TEST_CASE("Sturm count agrees with inertia") {
    for (const auto& v : small_algebras()) {
        CAPTURE(v.name());
        for (int k = 0; k < 100; ++k) {
            auto x = random_element(v);
            if (k % 4 == 0) x = with_repeated_row(x);
            REQUIRE(v.contains(x));
            const Signature s = inertia(v, x);
            const StratumLabel l = signature_stratum(v, x);
            CHECK(l.p == s.plus);
            CHECK(l.regular == (s.zero == 0));
            CHECK(l.regular == (jordan_det(v, x) != 0));
        }
    }
}

TEST_CASE("frame points label their strata") {
    for (const auto& v : small_algebras())
        for (std::size_t p = 0; p <= v.rank(); ++p)
            CHECK(signature_stratum(v, frame_point(v, p)) == StratumLabel{p, true});
}

TEST_CASE("sign vector orbits are binomial") {
    for (const auto& v : small_algebras()) {
        const std::size_t n = v.rank();
        const auto d = xi0_extreme_orbits(v);
        REQUIRE(d.orbits.size() == n + 1);
        CHECK(d.total() == (std::size_t{1} << n));
        for (std::size_t k = 0; k <= n; ++k) {
            const std::size_t p = n - k;
            CHECK(positive_count(d.orbits[k].representative) == p);
            CHECK(d.orbits[k].size() == binomial(n, p));
        }
    }
}

TEST_CASE("stratum stabilizers") {
    for (const auto& v : small_algebras()) {
        const std::size_t n = v.rank();
        for (std::size_t p = 0; p <= n; ++p) {
            CAPTURE(v.name());
            CAPTURE(p);
            const auto st = stratum_stabilizer_algebra(v, p);
            const std::size_t dim = v.kind() == JordanKind::symmetric_real ? n * (n - 1) / 2 : n * n - 1;
            CHECK(st.basis.size() == dim);
            CHECK(st.fingerprint.dim == dim);
            if (dim > 1) CHECK(st.name == st.expected);
            CHECK(st.compact == (p == 0 || p == n || dim == 0));
        }
    }
    CHECK(stratum_stabilizer_algebra(JordanAlgebra(JordanKind::symmetric_real, 4), 2).expected == "so(2,2)");
    CHECK(stratum_stabilizer_algebra(JordanAlgebra(JordanKind::hermitian_complex, 3), 3).expected == "su(3)");
    CHECK(stratum_stabilizer_algebra(JordanAlgebra(JordanKind::symmetric_real, 3), 0).expected == "so(3)");
}

TEST_CASE("strata are orbits of the structure group") {
    for (const auto& v : small_algebras()) {
        const std::size_t n = v.rank();
        for (std::size_t p = 0; p <= n; ++p) {
            std::vector<ComplexMatrix> samples;
            for (int k = 0; k < 4; ++k) {
                const auto g = testing::random_invertible(n);
                ComplexMatrix gc = zero_complex(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        gc[i][j] = v.kind() == JordanKind::symmetric_real ? Gaussian(g[i][j])
                                                                          : Gaussian(g[i][j], uniform(0, 1));
                if (leibniz_det(gc) == Gaussian(0)) continue;
                samples.push_back(gc * frame_point(v, p) * adjoint(gc));
            }
            CHECK(stratum_transitivity_check(v, p, samples));
            if (n > 0 && p < n) CHECK_FALSE(stratum_transitivity_check(v, p, {frame_point(v, p + 1)}));
        }
    }
}

TEST_CASE("isometries preserve det and strata") {
    for (const auto& v : small_algebras()) {
        for (int k = 0; k < 5; ++k) {
            const auto o = random_isometry(v);
            CHECK(o * adjoint(o) == identity(v.rank()));
            const auto x = random_element(v);
            const auto y = o * x * adjoint(o);
            CHECK(v.contains(y));
            CHECK(jordan_det(v, y) == jordan_det(v, x));
            CHECK(signature_stratum(v, y) == signature_stratum(v, x));
        }
    }
}
