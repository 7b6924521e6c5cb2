#include "xi/liealg.hpp"

#include <map>
#include <set>

namespace xi {

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<std::vector<QVector>>& upper)
    : dim_(dim), table_(dim * dim) {
    if (upper.size() != dim) throw Error("lie algebra: bracket table has the wrong size");
    for (std::size_t i = 0; i < dim; ++i) {
        if (upper[i].size() != dim - i - 1) throw Error("lie algebra: bracket table has the wrong size");
        for (std::size_t j = i + 1; j < dim; ++j) {
            const QVector& v = upper[i][j - i - 1];
            for (const auto& [k, c] : v) {
                if (k >= dim) throw Error("lie algebra: bracket outside the algebra");
                integral_ = integral_ && c.get_den() == 1;
            }
            table_[i * dim + j] = v;
            table_[j * dim + i] = -v;
        }
    }
}

QVector LieAlgebra::bracket(const QVector& x, const QVector& y) const {
    Accumulator<Rational> acc(dim_);
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            if (i != j) acc.add_scaled(table_[i * dim_ + j], a * b);
    return acc.take();
}

QMatrix LieAlgebra::ad(const QVector& x) const {
    std::vector<QVector> cols(dim_);
    Accumulator<Rational> acc(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        for (const auto& [i, a] : x)
            if (i != j) acc.add_scaled(table_[i * dim_ + j], a);
        cols[j] = acc.take();
    }
    return QMatrix::from_columns(dim_, std::move(cols));
}

QMatrix LieAlgebra::ad_basis(std::size_t i) const {
    std::vector<QVector> cols(table_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                              table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
    return QMatrix::from_columns(dim_, std::move(cols));
}

namespace {

/// Jacobi check over a scalar type S with the table converted once.
template <class S, class Convert>
std::size_t count_jacobi(const LieAlgebra& g, Convert convert) {
    const std::size_t d = g.dim();
    std::vector<std::vector<std::pair<std::size_t, S>>> t(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : g.bracket(i, j)) t[i * d + j].emplace_back(k, convert(c));
    std::vector<S> acc(d, S(0));
    std::vector<std::size_t> touched;
    std::size_t bad = 0;
    auto add_double = [&](std::size_t i, std::size_t j, std::size_t k) {
        // [[e_i, e_j], e_k]
        for (const auto& [l, c] : t[i * d + j])
            for (const auto& [m, e] : t[l * d + k]) {
                if (acc[m] == S(0)) touched.push_back(m);
                acc[m] += c * e;
            }
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                add_double(i, j, k);
                add_double(j, k, i);
                add_double(k, i, j);
                bool ok = true;
                for (std::size_t m : touched) {
                    if (acc[m] != S(0)) ok = false;
                    acc[m] = S(0);
                }
                touched.clear();
                if (!ok) ++bad;
            }
    return bad;
}

}  // namespace

std::size_t jacobi_violations(const LieAlgebra& g) {
    if (g.integral()) {
        // Structure constants of the in-scope algebras are tiny; a 64-bit
        // accumulator cannot overflow here.
        return count_jacobi<long long>(g, [](const Rational& c) { return c.get_num().get_si(); });
    }
    return count_jacobi<Rational>(g, [](const Rational& c) { return c; });
}

DenseMatrix<Rational> killing_matrix(const LieAlgebra& g) {
    const std::size_t d = g.dim();
    // back[l * d + k] lists (i, c) with c = coefficient of e_k in [e_i, e_l].
    std::vector<std::vector<std::pair<std::size_t, Rational>>> back(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t l = 0; l < d; ++l)
            for (const auto& [k, c] : g.bracket(i, l)) back[l * d + k].emplace_back(i, c);
    DenseMatrix<Rational> kill(d, std::vector<Rational>(d, Rational(0)));
    // K(e_i, e_j) = sum_k coefficient of e_k in [e_i, [e_j, e_k]].
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
            for (const auto& [l, c1] : g.bracket(j, k))
                for (const auto& [i, c2] : back[l * d + k]) kill[i][j] += c1 * c2;
    return kill;
}

Signature killing_signature(const LieAlgebra& g) { return congruence_signature(killing_matrix(g)); }

Signature killing_signature_on(const LieAlgebra& g, const std::vector<QVector>& subspace) {
    const auto kill = killing_matrix(g);
    std::vector<std::vector<Rational>> kv;
    for (const auto& v : subspace) {
        std::vector<Rational> row(g.dim(), Rational(0));
        for (const auto& [i, a] : v)
            for (std::size_t j = 0; j < g.dim(); ++j)
                if (!is_zero(kill[i][j])) row[j] += a * kill[i][j];
        kv.push_back(std::move(row));
    }
    const std::size_t n = subspace.size();
    DenseMatrix<Rational> b(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            for (const auto& [j, c] : subspace[s]) b[r][s] += kv[r][j] * c;
    return congruence_signature(b);
}

std::vector<QVector> center(const LieAlgebra& g) {
    Echelon<Rational> e(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (const auto& r : g.ad_basis(i).row_vectors()) e.insert(r);
    return e.nullspace();
}

std::size_t derived_dimension(const LieAlgebra& g) {
    Echelon<Rational> e(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) e.insert(g.bracket(i, j));
    return e.rank();
}

std::string to_string(const Fingerprint& f) {
    return "dim " + std::to_string(f.dim) + ", center " + std::to_string(f.center_dim) + ", Killing " +
           to_string(f.killing) + ", derived " + std::to_string(f.derived_dim);
}

Fingerprint fingerprint(const LieAlgebra& g) {
    Fingerprint f;
    f.dim = g.dim();
    f.killing = killing_signature(g);
    if (f.killing.zero == 0) {
        // Semisimple: no center and [g, g] = g.
        f.derived_dim = g.dim();
        return f;
    }
    f.center_dim = center(g).size();
    f.derived_dim = derived_dimension(g);
    return f;
}

LieAlgebra subalgebra(const LieAlgebra& g, const std::vector<QVector>& basis) {
    const SubspaceBasis<Rational> sb(g.dim(), basis);
    return make_lie_algebra(basis.size(), [&](std::size_t i, std::size_t j) {
        auto c = sb.coordinates(g.bracket(basis[i], basis[j]));
        if (!c) throw Error("subalgebra: span is not closed under the bracket");
        return *c;
    });
}

bool is_closed(const LieAlgebra& g, const std::vector<QVector>& basis) {
    Echelon<Rational> e(g.dim());
    for (const auto& b : basis) e.insert(b);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!e.contains(g.bracket(basis[i], basis[j]))) return false;
    return true;
}

LieAlgebra direct_sum(const std::vector<const LieAlgebra*>& parts) {
    std::vector<std::size_t> offset;
    std::vector<std::size_t> owner;
    std::size_t total = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        offset.push_back(total);
        for (std::size_t i = 0; i < parts[p]->dim(); ++i) owner.push_back(p);
        total += parts[p]->dim();
    }
    return make_lie_algebra(total, [&](std::size_t i, std::size_t j) {
        QVector out;
        if (owner[i] != owner[j]) return out;
        const std::size_t o = offset[owner[i]];
        for (const auto& [k, c] : parts[owner[i]]->bracket(i - o, j - o)) out.push_back(k + o, c);
        return out;
    });
}

bool is_automorphism(const LieAlgebra& g, const QMatrix& phi) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            if (phi.apply(g.bracket(i, j)) != g.bracket(phi.column(i), phi.column(j))) return false;
    return true;
}

ComplexMatrix zero_complex(std::size_t n) { return ComplexMatrix(n, std::vector<Gaussian>(n, Gaussian(0))); }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.size();
    ComplexMatrix c = zero_complex(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!is_zero(b[k][j])) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix ab = a * b;
    const ComplexMatrix ba = b * a;
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix t = zero_complex(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = conj(a[i][j]);
    return t;
}

ComplexMatrix combine(const std::vector<ComplexMatrix>& ms, const QVector& coeffs) {
    ComplexMatrix out = zero_complex(ms.empty() ? 0 : ms.front().size());
    for (const auto& [k, c] : coeffs)
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < out.size(); ++j)
                if (!is_zero(ms[k][i][j])) out[i][j] += Gaussian(c) * ms[k][i][j];
    return out;
}

bool is_real(const ComplexMatrix& a) {
    for (const auto& row : a)
        for (const auto& z : row)
            if (!z.is_real()) return false;
    return true;
}

QVector real_coordinates(const ComplexMatrix& a) {
    const std::size_t n = a.size();
    // Imaginary parts interleave with real parts so indices stay increasing.
    QVector out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.push_back(2 * (i * n + j), a[i][j].re);
            out.push_back(2 * (i * n + j) + 1, a[i][j].im);
        }
    return out;
}

LieAlgebra matrix_lie_algebra(const std::vector<ComplexMatrix>& basis) {
    if (basis.empty()) return {};
    const std::size_t n = basis.front().size();
    std::vector<QVector> coords;
    for (const auto& m : basis) coords.push_back(real_coordinates(m));
    const SubspaceBasis<Rational> sb(2 * n * n, coords);
    return make_lie_algebra(basis.size(), [&](std::size_t i, std::size_t j) {
        auto c = sb.coordinates(real_coordinates(commutator(basis[i], basis[j])));
        if (!c) throw Error("matrix algebra: span is not closed under commutators");
        return *c;
    });
}

QVector Realization::cartan_element(const RationalVector& y) const {
    if (y.dim() != chart.size()) throw Error(name + ": point has the wrong ambient dimension");
    Accumulator<Rational> acc(algebra.dim());
    for (std::size_t k = 0; k < chart.size(); ++k) acc.add_scaled(chart[k], y[k]);
    return acc.take();
}

std::optional<QVector> Realization::coordinates(const ComplexMatrix& m) const {
    if (matrices.empty()) throw Error(name + ": no matrix realization");
    const std::size_t n = matrices.front().size();
    std::vector<QVector> coords;
    for (const auto& b : matrices) coords.push_back(real_coordinates(b));
    const SubspaceBasis<Rational> sb(2 * n * n, coords);
    return sb.coordinates(real_coordinates(m));
}

std::size_t RestrictedRoots::multiplicity(const RationalVector& w) const {
    for (const auto& s : spaces)
        if (s.weight == w) return s.basis.size();
    return 0;
}

std::vector<RationalVector> RestrictedRoots::roots() const {
    std::vector<RationalVector> out;
    for (const auto& s : spaces)
        if (!s.weight.is_zero()) out.push_back(s.weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Rational, std::size_t>> RestrictedRoots::multiplicities() const {
    std::map<Rational, std::size_t> by_length;
    for (const auto& s : spaces) {
        if (s.weight.is_zero()) continue;
        const Rational len = dot(s.weight, s.weight);
        auto [it, fresh] = by_length.emplace(len, s.basis.size());
        if (!fresh && it->second != s.basis.size())
            throw Error("restricted roots: roots of equal length with different multiplicities");
    }
    return {by_length.begin(), by_length.end()};
}

namespace {

/// Weight of v under the chart if v is a joint eigenvector.
std::optional<RationalVector> joint_weight(const std::vector<QMatrix>& ads, const QVector& v) {
    RationalVector w(ads.size());
    const auto& [lead, lead_value] = v.entries().front();
    for (std::size_t k = 0; k < ads.size(); ++k) {
        const QVector image = ads[k].apply(v);
        const Rational lambda = image.at(lead) / lead_value;
        if (image != lambda * v) return std::nullopt;
        w[k] = lambda;
    }
    return w;
}

RestrictedRoots sorted_spaces(std::map<RationalVector, std::vector<QVector>> by_weight, std::size_t ambient) {
    RestrictedRoots rr;
    const RationalVector zero(ambient);
    auto z = by_weight.find(zero);
    if (z != by_weight.end()) {
        rr.spaces.push_back({zero, std::move(z->second)});
        by_weight.erase(z);
    } else {
        rr.spaces.push_back({zero, {}});
    }
    for (auto& [w, basis] : by_weight) rr.spaces.push_back({w, std::move(basis)});
    return rr;
}

}  // namespace

RestrictedRoots restricted_roots(const Realization& r) {
    if (!r.datum) throw Error(r.name + ": no restricted root datum declared");
    const std::size_t d = r.algebra.dim();
    const std::size_t ambient = r.chart.size();
    std::vector<QMatrix> ads;
    for (const auto& h : r.chart) ads.push_back(r.algebra.ad(h));

    // Fast path: the basis already consists of joint eigenvectors.
    std::map<RationalVector, std::vector<QVector>> by_weight;
    bool fast = true;
    for (std::size_t j = 0; j < d && fast; ++j) {
        const auto w = joint_weight(ads, QVector::unit(j));
        if (!w) {
            fast = false;
            break;
        }
        by_weight[*w].push_back(QVector::unit(j));
    }
    if (fast) return sorted_spaces(std::move(by_weight), ambient);

    // Generic element separating all candidate weights.
    by_weight.clear();
    RationalVector gen(ambient);
    Rational g = 1;
    for (std::size_t k = 0; k < ambient; ++k) {
        gen[k] = g;
        g *= 17;
    }
    const QMatrix ad_gen = r.algebra.ad(r.cartan_element(gen));
    std::set<RationalVector> candidates{RationalVector(ambient)};
    for (const auto& a : r.datum->roots) {
        candidates.insert(a);
        candidates.insert(Rational(2) * a);
        candidates.insert(Rational(1, 2) * a);
    }
    std::size_t found = 0;
    for (const auto& w : candidates) {
        const QMatrix shifted = ad_gen - dot(w, gen) * QMatrix::identity(d);
        auto space = kernel(shifted);
        if (space.empty()) continue;
        for (const auto& v : space) {
            const auto jw = joint_weight(ads, v);
            if (!jw || *jw != w) throw Error(r.name + ": chart mismatch, eigenvector is not a joint eigenvector");
        }
        found += space.size();
        by_weight[w] = std::move(space);
    }
    if (found != d) throw Error(r.name + ": chart mismatch, root spaces span only " + std::to_string(found) + " of " +
                                std::to_string(d) + " dimensions");
    return sorted_spaces(std::move(by_weight), ambient);
}

bool Tau::is_involution() const {
    return im.is_zero_matrix() && re * re == QMatrix::identity(re.cols());
}

Tau tau_endomorphism(const Realization& r, const RestrictedRoots& rr, const RationalVector& y) {
    const std::size_t d = r.algebra.dim();
    std::vector<QVector> eigen;
    std::vector<int> phase;  // exp(i pi s) = i^phase
    bool unit_basis = true;
    for (const auto& s : rr.spaces) {
        const Rational v = 2 * dot(s.weight, y);
        if (v.get_den() != 1) throw Error(r.name + ": unsupported spectrum, ad(Y) has eigenvalue " + to_string(v / 2));
        long ph = v.get_num().get_si() % 4;
        if (ph < 0) ph += 4;
        for (const auto& b : s.basis) {
            unit_basis = unit_basis && b.nnz() == 1 && b.entries().front().second == 1;
            eigen.push_back(b);
            phase.push_back(static_cast<int>(ph));
        }
    }
    if (eigen.size() != d) throw Error(r.name + ": root spaces do not span the algebra");

    std::vector<std::size_t> slot_of_index(d);
    std::optional<SubspaceBasis<Rational>> sb;
    if (unit_basis) {
        for (std::size_t m = 0; m < d; ++m) slot_of_index[eigen[m].leading_index()] = m;
    } else {
        sb.emplace(d, eigen);
    }
    std::vector<QVector> re_cols(d);
    std::vector<QVector> im_cols(d);
    Accumulator<Rational> re(d);
    Accumulator<Rational> im(d);
    for (std::size_t j = 0; j < d; ++j) {
        const QVector& th = r.theta.column(j);
        QVector coords;
        if (unit_basis) {
            std::vector<std::pair<std::size_t, Rational>> c;
            for (const auto& [i, x] : th) c.emplace_back(slot_of_index[i], x);
            std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [m, x] : c) coords.push_back(m, x);
        } else {
            coords = *sb->coordinates(th);
        }
        for (const auto& [m, c] : coords) {
            switch (phase[m]) {
                case 0: re.add_scaled(eigen[m], c); break;
                case 1: im.add_scaled(eigen[m], c); break;
                case 2: re.add_scaled(eigen[m], -c); break;
                default: im.add_scaled(eigen[m], -c); break;
            }
        }
        re_cols[j] = re.take();
        im_cols[j] = im.take();
    }
    return {QMatrix::from_columns(d, std::move(re_cols)), QMatrix::from_columns(d, std::move(im_cols))};
}

std::vector<QVector> stabilizer_subalgebra(const Tau& t) {
    const std::size_t d = t.re.cols();
    Echelon<Rational> e(d);
    for (const auto& row : (t.re - QMatrix::identity(d)).row_vectors()) e.insert(row);
    for (const auto& row : t.im.row_vectors()) e.insert(row);
    return e.nullspace();
}

std::vector<QVector> minus_space(const Tau& t) {
    const std::size_t d = t.re.cols();
    return kernel(t.re + QMatrix::identity(d));
}

bool symmetric_pair_relations(const LieAlgebra& g, const std::vector<QVector>& h, const std::vector<QVector>& q) {
    Echelon<Rational> eh(g.dim());
    Echelon<Rational> eq(g.dim());
    for (const auto& v : h) eh.insert(v);
    for (const auto& v : q) eq.insert(v);
    for (const auto& x : h)
        for (const auto& y : q)
            if (!eq.contains(g.bracket(x, y))) return false;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (!eh.contains(g.bracket(q[i], q[j]))) return false;
    return true;
}

std::vector<CheckResult> verify_realization(const Realization& r) {
    std::vector<CheckResult> out;
    const LieAlgebra& g = r.algebra;
    const std::size_t d = g.dim();

    const std::size_t bad = jacobi_violations(g);
    out.push_back({"Jacobi identity", bad == 0, std::to_string(bad) + " violating triples of " + std::to_string(d) + "-dim basis"});

    const bool inv = r.theta * r.theta == QMatrix::identity(d);
    out.push_back({"theta is an involution", inv, ""});
    out.push_back({"theta is an automorphism", is_automorphism(g, r.theta), ""});

    const auto k = kernel(r.theta - QMatrix::identity(d));
    const auto p = kernel(r.theta + QMatrix::identity(d));
    const Signature sk = killing_signature_on(g, k);
    const Signature sp = killing_signature_on(g, p);
    out.push_back({"Killing form negative definite on k", sk.minus == k.size(),
                   "dim k = " + std::to_string(k.size()) + ", signature " + to_string(sk)});
    out.push_back({"Killing form positive definite on p", sp.plus == p.size(),
                   "dim p = " + std::to_string(p.size()) + ", signature " + to_string(sp)});

    bool in_p = true;
    bool abelian = true;
    for (std::size_t i = 0; i < r.chart.size(); ++i) {
        in_p = in_p && r.theta.apply(r.chart[i]) == -r.chart[i];
        for (std::size_t j = i + 1; j < r.chart.size(); ++j) abelian = abelian && g.bracket(r.chart[i], r.chart[j]).empty();
    }
    out.push_back({"a is an abelian subspace of p", in_p && abelian, ""});

    // Centralizer of a in p.
    Echelon<Rational> e(d);
    for (const auto& row : (r.theta + QMatrix::identity(d)).row_vectors()) e.insert(row);
    for (const auto& h : r.chart)
        for (const auto& row : g.ad(h).row_vectors()) e.insert(row);
    const std::size_t cent = d - e.rank();
    const std::size_t dim_a = rank_of(r.chart, d);
    out.push_back({"a is maximal abelian in p", cent == dim_a,
                   "dim a = " + std::to_string(dim_a) + ", centralizer in p = " + std::to_string(cent)});

    if (r.datum) {
        try {
            const RestrictedRoots rr = restricted_roots(r);
            const bool match = rr.roots() == r.datum->roots;
            std::string mult;
            for (const auto& [len, m] : rr.multiplicities()) mult += " |a|^2=" + to_string(len) + ":" + std::to_string(m);
            out.push_back({"restricted roots = " + r.datum->label, match, "multiplicities" + mult});
        } catch (const Error& err) {
            out.push_back({"restricted roots = " + r.datum->label, false, err.what()});
        }
    }
    return out;
}

}  // namespace xi
