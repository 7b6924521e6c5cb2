#include "xi/realizations.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "xi/chevalley.hpp"

namespace xi {

namespace {

using LinearMap = MatrixMap;

ComplexMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, Gaussian v = Gaussian(1)) {
    ComplexMatrix m = zero_complex(n);
    m[i][j] = std::move(v);
    return m;
}

ComplexMatrix diagonal(const std::vector<Rational>& d) {
    ComplexMatrix m = zero_complex(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = Gaussian(d[i]);
    return m;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix t = zero_complex(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
    return t;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (auto& row : c)
        for (auto& z : row) z = conj(z);
    return c;
}

ComplexMatrix sum(const ComplexMatrix& a, const ComplexMatrix& b, const Gaussian& f = Gaussian(1)) {
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += f * b[i][j];
    return c;
}

ComplexMatrix scaled(const ComplexMatrix& a, const Gaussian& f) {
    ComplexMatrix c = a;
    for (auto& row : c)
        for (auto& z : row) z *= f;
    return c;
}

LinearMap trace_map() {
    return [](const ComplexMatrix& x) {
        Gaussian t(0);
        for (std::size_t i = 0; i < x.size(); ++i) t += x[i][i];
        return ComplexMatrix{{t}};
    };
}

/// X^T K + K X (bilinear form K) or X^dagger K + K X (sesquilinear form K).
LinearMap form_map(ComplexMatrix k, bool hermitian) {
    return [k = std::move(k), hermitian](const ComplexMatrix& x) {
        const ComplexMatrix xt = hermitian ? adjoint(x) : transpose(x);
        return sum(xt * k, k * x);
    };
}

/// X J - J conj(X): commuting with the quaternionic structure.
LinearMap quaternionic_map(std::size_t m) {
    ComplexMatrix j = zero_complex(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        j[i][m + i] = Gaussian(-1);
        j[m + i][i] = Gaussian(1);
    }
    return [j](const ComplexMatrix& x) { return sum(x * j, j * conjugate(x), Gaussian(-1)); };
}

ComplexMatrix signature_form(std::size_t p, std::size_t q, std::size_t copies = 1) {
    std::vector<Rational> d;
    for (std::size_t c = 0; c < copies; ++c) {
        for (std::size_t i = 0; i < p; ++i) d.emplace_back(1);
        for (std::size_t i = 0; i < q; ++i) d.emplace_back(-1);
    }
    return diagonal(d);
}

ComplexMatrix symplectic_form(std::size_t n) {
    ComplexMatrix j = zero_complex(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j[i][n + i] = Gaussian(1);
        j[n + i][i] = Gaussian(-1);
    }
    return j;
}

ComplexMatrix identity_complex(std::size_t n) {
    ComplexMatrix m = zero_complex(n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Gaussian(1);
    return m;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(msg);
}

/// Matrix basis of a simple algebra name, without chart data.
std::vector<ComplexMatrix> matrix_basis(const SimpleAlgebraName& s) {
    const auto a = static_cast<std::size_t>(s.a);
    const auto b = static_cast<std::size_t>(s.b);
    const std::string label = to_string(s);
    const std::size_t guard = 8;    // n for sl, gl
    const std::size_t pq_guard = 10;  // p + q for so, su; n for so(n,C)
    switch (s.kind) {
        case AlgebraKind::sl_R:
            require(a >= 2 && a <= guard, label + ": need 2 <= n <= 8");
            return solve_matrix_conditions(a, true, {trace_map()});
        case AlgebraKind::sl_C:
            require(a >= 2 && a <= guard, label + ": need 2 <= n <= 8");
            return solve_matrix_conditions(a, false, {trace_map()});
        case AlgebraKind::sl_H:
            require(a >= 1 && a <= 5, label + ": need 1 <= n <= 5");
            return solve_matrix_conditions(2 * a, false, {quaternionic_map(a), trace_map()});
        case AlgebraKind::gl_R:
            require(a >= 1 && a <= guard, label + ": need 1 <= n <= 8");
            return solve_matrix_conditions(a, true, {});
        case AlgebraKind::abelian: return {ComplexMatrix{{Gaussian(1)}}};
        case AlgebraKind::so_pq:
            require(a + b >= 2 && a + b <= pq_guard, label + ": need 2 <= p + q <= 10");
            return solve_matrix_conditions(a + b, true, {form_map(signature_form(a, b), false)});
        case AlgebraKind::so_C:
            require(a >= 2 && a <= pq_guard, label + ": need 2 <= n <= 10");
            return solve_matrix_conditions(a, false, {form_map(identity_complex(a), false)});
        case AlgebraKind::so_star:
            require(a >= 2 && a % 2 == 0 && a <= pq_guard, label + ": need so*(2n) with 1 <= n <= 5");
            return solve_matrix_conditions(a, false, {form_map(identity_complex(a), false), quaternionic_map(a / 2)});
        case AlgebraKind::sp_R:
            require(a >= 1 && 2 * a <= pq_guard, label + ": need 1 <= n <= 5");
            return solve_matrix_conditions(2 * a, true, {form_map(symplectic_form(a), false)});
        case AlgebraKind::sp_C:
            require(a >= 1 && 2 * a <= pq_guard, label + ": need 1 <= n <= 5");
            return solve_matrix_conditions(2 * a, false, {form_map(symplectic_form(a), false)});
        case AlgebraKind::sp_pq:
            require(a + b >= 1 && 2 * (a + b) <= pq_guard, label + ": need 1 <= p + q <= 5");
            return solve_matrix_conditions(2 * (a + b), false,
                                  {quaternionic_map(a + b), form_map(signature_form(a, b, 2), true)});
        case AlgebraKind::su_pq:
            require(a + b >= 2 && a + b <= pq_guard, label + ": need 2 <= p + q <= 10");
            return solve_matrix_conditions(a + b, false, {form_map(signature_form(a, b), true), trace_map()});
        default: break;
    }
    throw Error(label + ": no matrix model");
}

QMatrix theta_of(const std::string& name, const std::vector<ComplexMatrix>& basis) {
    const std::size_t n = basis.front().size();
    std::vector<QVector> coords;
    for (const auto& m : basis) coords.push_back(real_coordinates(m));
    const SubspaceBasis<Rational> sb(2 * n * n, coords);
    std::vector<QVector> cols;
    for (const auto& m : basis) {
        auto c = sb.coordinates(real_coordinates(scaled(adjoint(m), Gaussian(-1))));
        if (!c) throw Error(name + ": -X^dagger leaves the algebra");
        cols.push_back(std::move(*c));
    }
    return QMatrix::from_columns(basis.size(), std::move(cols));
}

/// Symmetric matrix E_{j, n-1-j} + E_{n-1-j, j}.
ComplexMatrix antidiagonal_pair(std::size_t n, std::size_t j) {
    ComplexMatrix m = zero_complex(n);
    m[j][n - 1 - j] = Gaussian(1);
    m[n - 1 - j][j] = Gaussian(1);
    return m;
}

ComplexMatrix block_diag2(const ComplexMatrix& x, const ComplexMatrix& y) {
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    ComplexMatrix out = zero_complex(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = x[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out[n + i][n + j] = y[i][j];
    return out;
}

}  // namespace

std::vector<ComplexMatrix> solve_matrix_conditions(std::size_t n, bool real_entries, const std::vector<MatrixMap>& constraints) {
    std::vector<ComplexMatrix> unknowns;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            unknowns.push_back(unit_matrix(n, i, j));
            if (!real_entries) unknowns.push_back(unit_matrix(n, i, j, Gaussian::i()));
        }
    std::vector<QVector> cols;
    for (const auto& u : unknowns) {
        QVector col;
        std::size_t offset = 0;
        for (const auto& c : constraints) {
            const ComplexMatrix img = c(u);
            for (const auto& [k, v] : real_coordinates(img)) col.push_back(offset + k, v);
            offset += 2 * img.size() * img.size();
        }
        cols.push_back(std::move(col));
    }
    std::size_t rows = 0;
    for (const auto& c : constraints) {
        const auto img = c(unknowns.front());
        rows += 2 * img.size() * img.size();
    }
    const QMatrix m = QMatrix::from_columns(rows, std::move(cols));
    std::vector<ComplexMatrix> basis;
    for (const auto& v : kernel(m)) basis.push_back(combine(unknowns, v));
    return basis;
}

Realization build_classical(const SimpleAlgebraName& s) {
    const std::string label = to_string(s);
    const auto a = static_cast<std::size_t>(s.a);
    const auto b = static_cast<std::size_t>(s.b);
    const Rational half(1, 2);
    std::vector<ComplexMatrix> chart;
    std::optional<RootDatum> datum;

    auto sl_chart = [&](std::size_t n, bool doubled) {
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Rational> d(n, Rational(-1, static_cast<long>(n)));
            d[k] += 1;
            ComplexMatrix m = diagonal(d);
            chart.push_back(doubled ? block_diag2(m, m) : m);
        }
        datum = build_root_system(Family::A, static_cast<int>(n) - 1);
    };
    // B_p for p < q (BC_p if bc), D_p or C_p for p = q.
    auto rank_p_datum = [&](std::size_t p, bool equal, Family unequal, Family eq) {
        datum = build_root_system(equal ? eq : unequal, static_cast<int>(p));
    };

    switch (s.kind) {
        case AlgebraKind::sl_R: sl_chart(a, false); break;
        case AlgebraKind::sl_C: sl_chart(a, false); break;
        case AlgebraKind::sl_H: sl_chart(a, true); break;
        case AlgebraKind::so_pq: {
            if (a > b) throw Error(label + ": write so(p,q) with p <= q");
            if (a == 0) throw Error(label + ": compact algebras have no crown boundary");
            if (a == b && a < 2) throw Error(label + ": so(1,1) is abelian");
            for (std::size_t j = 0; j < a; ++j) chart.push_back(antidiagonal_pair(a + b, j));
            rank_p_datum(a, a == b, Family::B, Family::D);
            break;
        }
        case AlgebraKind::so_C: {
            if (a < 3) throw Error(label + ": need n >= 3");
            for (std::size_t j = 0; j < a / 2; ++j) {
                ComplexMatrix m = zero_complex(a);
                m[2 * j][2 * j + 1] = Gaussian::i();
                m[2 * j + 1][2 * j] = -Gaussian::i();
                chart.push_back(m);
            }
            rank_p_datum(a / 2, a % 2 == 0, Family::B, Family::D);
            break;
        }
        case AlgebraKind::so_star: {
            const std::size_t n = a / 2;
            if (n < 2) throw Error(label + ": need n >= 2");
            const Gaussian f = n % 2 == 0 ? Gaussian(half) : Gaussian(1);
            for (std::size_t k = 0; k < n / 2; ++k) {
                ComplexMatrix blk = zero_complex(n);
                blk[2 * k][2 * k + 1] = Gaussian::i();
                blk[2 * k + 1][2 * k] = -Gaussian::i();
                chart.push_back(scaled(block_diag2(blk, scaled(blk, Gaussian(-1))), f));
            }
            rank_p_datum(n / 2, n % 2 == 0, Family::BC, Family::C);
            break;
        }
        case AlgebraKind::sp_R:
        case AlgebraKind::sp_C: {
            for (std::size_t k = 0; k < a; ++k) {
                std::vector<Rational> d(2 * a, Rational(0));
                d[k] = half;
                d[a + k] = -half;
                chart.push_back(diagonal(d));
            }
            datum = build_root_system(Family::C, static_cast<int>(a));
            break;
        }
        case AlgebraKind::sp_pq:
        case AlgebraKind::su_pq: {
            if (a > b) throw Error(label + ": write the form with p <= q");
            if (a == 0) throw Error(label + ": compact algebras have no crown boundary");
            const std::size_t n = a + b;
            const Gaussian f = a == b ? Gaussian(half) : Gaussian(1);
            for (std::size_t j = 0; j < a; ++j) {
                const ComplexMatrix sj = scaled(antidiagonal_pair(n, j), f);
                chart.push_back(s.kind == AlgebraKind::sp_pq ? block_diag2(sj, sj) : sj);
            }
            rank_p_datum(a, a == b, Family::BC, Family::C);
            break;
        }
        default: throw Error(label + ": not a classical matrix algebra with a crown boundary");
    }

    Realization r;
    r.name = label;
    r.matrices = matrix_basis(s);
    r.algebra = matrix_lie_algebra(r.matrices);
    r.theta = theta_of(label, r.matrices);
    r.datum = std::move(datum);
    for (const auto& h : chart) {
        auto c = r.coordinates(h);
        if (!c) throw Error(label + ": chart element outside the algebra");
        r.chart.push_back(std::move(*c));
    }
    return r;
}

Realization build_classical(std::string_view name) { return build_classical(parse_algebra_name(name).simple()); }

std::vector<DenseMatrix<Rational>> real_action(const std::vector<ComplexMatrix>& matrices) {
    bool all_real = true;
    for (const auto& m : matrices) all_real = all_real && is_real(m);
    std::vector<DenseMatrix<Rational>> out;
    for (const auto& m : matrices) {
        const std::size_t n = m.size();
        const std::size_t k = all_real ? n : 2 * n;
        DenseMatrix<Rational> r(k, std::vector<Rational>(k, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                r[i][j] = m[i][j].re;
                if (all_real) continue;
                r[n + i][n + j] = m[i][j].re;
                r[i][n + j] = -m[i][j].im;
                r[n + i][j] = m[i][j].im;
            }
        out.push_back(std::move(r));
    }
    return out;
}

Signature commutant_signature(const std::vector<DenseMatrix<Rational>>& action) {
    if (action.empty()) throw Error("commutant: empty family");
    const std::size_t m = action.front().size();
    // Unknown X with index i * m + j; equations (XA - AX)_{rc} = 0.
    Echelon<Rational> e(m * m);
    for (const auto& a : action)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                std::vector<std::pair<std::size_t, Rational>> row;
                for (std::size_t k = 0; k < m; ++k) {
                    if (!is_zero(a[k][c])) row.emplace_back(r * m + k, a[k][c]);    // X_rk A_kc
                    if (!is_zero(a[r][k])) row.emplace_back(k * m + c, -a[r][k]);   // -A_rk X_kc
                }
                std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                QVector v;
                for (std::size_t i = 0; i < row.size(); ++i) {
                    Rational acc = row[i].second;
                    while (i + 1 < row.size() && row[i + 1].first == row[i].first) acc += row[++i].second;
                    v.push_back(row[i].first, acc);
                }
                e.insert(v);
            }
    const auto basis = e.nullspace();
    const std::size_t n = basis.size();
    std::vector<DenseMatrix<Rational>> mats;
    for (const auto& v : basis) {
        DenseMatrix<Rational> x(m, std::vector<Rational>(m, Rational(0)));
        for (const auto& [idx, c] : v) x[idx / m][idx % m] = c;
        mats.push_back(std::move(x));
    }
    DenseMatrix<Rational> form(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s; t < n; ++t) {
            Rational tr = 0;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < m; ++k) tr += mats[s][i][k] * mats[t][k][i];
            form[s][t] = tr;
            form[t][s] = tr;
        }
    return congruence_signature(form);
}

namespace {

CandidateAlgebra exceptional_candidate(const SimpleAlgebraName& s) {
    CandidateAlgebra c;
    switch (s.kind) {
        case AlgebraKind::e6_split: c.algebra = build_chevalley(build_root_system(Family::E6, 6)).algebra; break;
        case AlgebraKind::e7_split: c.algebra = build_chevalley(build_root_system(Family::E7, 7)).algebra; break;
        case AlgebraKind::e6_C: c.algebra = complex_as_real(build_chevalley(build_root_system(Family::E6, 6))).algebra; break;
        case AlgebraKind::e7_C: c.algebra = complex_as_real(build_chevalley(build_root_system(Family::E7, 7))).algebra; break;
        case AlgebraKind::e6_m14: c.algebra = inner_real_form(build_chevalley(build_root_system(Family::E6, 6)), 0); break;
        case AlgebraKind::e7_m25: c.algebra = inner_real_form(build_chevalley(build_root_system(Family::E7, 7)), 6); break;
        default: throw Error(to_string(s) + ": no model available (reference-only)");
    }
    return c;
}

bool is_exceptional(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::e6_split:
        case AlgebraKind::e6_m14:
        case AlgebraKind::e6_m26:
        case AlgebraKind::e6_C:
        case AlgebraKind::e7_split:
        case AlgebraKind::e7_m25:
        case AlgebraKind::e7_C:
        case AlgebraKind::f4_m20: return true;
        default: return false;
    }
}

DenseMatrix<Rational> block_diag_real(const std::vector<DenseMatrix<Rational>>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    DenseMatrix<Rational> out(n, std::vector<Rational>(n, Rational(0)));
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[off + i][off + j] = b[i][j];
        off += b.size();
    }
    return out;
}

CandidateAlgebra build_candidate(const std::string& display) {
    const AlgebraName name = parse_algebra_name(display);
    std::vector<CandidateAlgebra> parts;
    for (const auto& s : name.summands) {
        if (real_dimension(s) == 0) continue;
        if (is_exceptional(s.kind)) {
            parts.push_back(exceptional_candidate(s));
            continue;
        }
        CandidateAlgebra c;
        const auto mats = matrix_basis(s);
        c.algebra = matrix_lie_algebra(mats);
        c.action = real_action(mats);
        parts.push_back(std::move(c));
    }
    CandidateAlgebra out;
    out.display = display;
    out.name = name;
    std::vector<const LieAlgebra*> algs;
    bool all_modules = true;
    for (const auto& p : parts) {
        algs.push_back(&p.algebra);
        all_modules = all_modules && !p.action.empty();
    }
    out.algebra = direct_sum(algs);
    if (all_modules && !parts.empty()) {
        // Block-diagonal action of the direct sum.
        std::vector<std::size_t> sizes;
        for (const auto& p : parts) sizes.push_back(p.action.front().size());
        for (std::size_t k = 0; k < parts.size(); ++k)
            for (const auto& m : parts[k].action) {
                std::vector<DenseMatrix<Rational>> blocks;
                for (std::size_t l = 0; l < parts.size(); ++l)
                    blocks.push_back(l == k ? m : DenseMatrix<Rational>(sizes[l], std::vector<Rational>(sizes[l], Rational(0))));
                out.action.push_back(block_diag_real(blocks));
            }
    }
    out.fp = fingerprint(out.algebra);
    return out;
}

}  // namespace

const CandidateAlgebra& candidate_algebra(const std::string& display) {
    static std::mutex lock;
    static std::map<std::string, CandidateAlgebra> cache;
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find(display);
        if (it != cache.end()) return it->second;
    }
    CandidateAlgebra c = build_candidate(display);
    std::lock_guard<std::mutex> g(lock);
    return cache.emplace(display, std::move(c)).first->second;
}

}  // namespace xi
