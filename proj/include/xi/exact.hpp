#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xi {

using Rational = mpq_class;

/// Raised for invalid input, unsupported data, and failed internal checks.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// p/q in lowest terms (mpq_class(p, q) does not reduce).
inline Rational ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Exact element of Q(i).
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

    static Gaussian i() { return {Rational(0), Rational(1)}; }

    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    bool is_real() const { return sgn(im) == 0; }
    Rational norm() const { return re * re + im * im; }
};

std::string to_string(const Gaussian& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Gaussian& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }
inline Rational conj(const Rational& q) { return q; }
inline Gaussian conj(const Gaussian& z) { return {z.re, -z.im}; }

/// Sparse vector with strictly increasing indices and no stored zeros.
template <class T>
class SparseVector {
public:
    using Entry = std::pair<std::size_t, T>;

    SparseVector() = default;

    static SparseVector unit(std::size_t i, T v = T(1)) {
        SparseVector s;
        s.push_back(i, std::move(v));
        return s;
    }

    static SparseVector from_dense(const std::vector<T>& dense) {
        SparseVector s;
        for (std::size_t i = 0; i < dense.size(); ++i) s.push_back(i, dense[i]);
        return s;
    }

    std::vector<T> to_dense(std::size_t n) const {
        std::vector<T> d(n, T(0));
        for (const auto& [i, v] : entries_) d.at(i) = v;
        return d;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Appends (i, v); indices must increase. Zero values are dropped.
    void push_back(std::size_t i, T v) {
        if (!is_zero(v)) entries_.emplace_back(i, std::move(v));
    }

    T at(std::size_t i) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                                   [](const Entry& e, std::size_t k) { return e.first < k; });
        if (it != entries_.end() && it->first == i) return it->second;
        return T(0);
    }

    /// this += f * other
    void add_scaled(const SparseVector& other, const T& f) {
        if (is_zero(f) || other.empty()) return;
        std::vector<Entry> out;
        out.reserve(entries_.size() + other.entries_.size());
        auto a = entries_.begin();
        auto b = other.entries_.begin();
        while (a != entries_.end() || b != other.entries_.end()) {
            if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
                out.push_back(std::move(*a));
                ++a;
            } else if (a == entries_.end() || b->first < a->first) {
                out.emplace_back(b->first, f * b->second);
                ++b;
            } else {
                T v = a->second + f * b->second;
                if (!is_zero(v)) out.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        entries_ = std::move(out);
    }

    SparseVector& operator*=(const T& f) {
        if (is_zero(f)) {
            entries_.clear();
        } else {
            for (auto& e : entries_) e.second *= f;
        }
        return *this;
    }

    friend SparseVector operator*(const T& f, SparseVector v) { return v *= f; }
    friend SparseVector operator+(SparseVector a, const SparseVector& b) {
        a.add_scaled(b, T(1));
        return a;
    }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) {
        a.add_scaled(b, T(-1));
        return a;
    }
    friend SparseVector operator-(SparseVector a) { return a *= T(-1); }
    friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }

    T dot(const SparseVector& o) const {
        T acc(0);
        auto a = entries_.begin();
        auto b = o.entries_.begin();
        while (a != entries_.end() && b != o.entries_.end()) {
            if (a->first < b->first) {
                ++a;
            } else if (b->first < a->first) {
                ++b;
            } else {
                acc += a->second * b->second;
                ++a;
                ++b;
            }
        }
        return acc;
    }

    std::size_t leading_index() const { return entries_.front().first; }

private:
    std::vector<Entry> entries_;
};

using QVector = SparseVector<Rational>;
using GVector = SparseVector<Gaussian>;

/// Dense scratch accumulator producing sparse vectors.
template <class T>
class Accumulator {
public:
    explicit Accumulator(std::size_t n) : values_(n, T(0)), touched_(n, false) {}

    void add(std::size_t i, const T& v) {
        if (!touched_[i]) {
            touched_[i] = true;
            index_.push_back(i);
        }
        values_[i] += v;
    }

    void add_scaled(const SparseVector<T>& v, const T& f) {
        for (const auto& [i, x] : v) add(i, f * x);
    }

    SparseVector<T> take() {
        std::sort(index_.begin(), index_.end());
        SparseVector<T> out;
        for (std::size_t i : index_) {
            out.push_back(i, values_[i]);
            values_[i] = T(0);
            touched_[i] = false;
        }
        index_.clear();
        return out;
    }

private:
    std::vector<T> values_;
    std::vector<bool> touched_;
    std::vector<std::size_t> index_;
};

/// Linear map stored by columns: column j is the image of basis vector j.
template <class T>
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(std::size_t n) {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.columns_[i] = SparseVector<T>::unit(i);
        return m;
    }

    static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector<T>> columns) {
        SparseMatrix m;
        m.rows_ = rows;
        m.cols_ = columns.size();
        m.columns_ = std::move(columns);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SparseVector<T>& column(std::size_t j) const { return columns_.at(j); }
    void set_column(std::size_t j, SparseVector<T> c) { columns_.at(j) = std::move(c); }
    const std::vector<SparseVector<T>>& columns() const { return columns_; }

    T at(std::size_t i, std::size_t j) const { return columns_.at(j).at(i); }

    SparseVector<T> apply(const SparseVector<T>& x) const {
        Accumulator<T> acc(rows_);
        for (const auto& [j, v] : x) acc.add_scaled(columns_.at(j), v);
        return acc.take();
    }

    SparseMatrix transpose() const {
        std::vector<SparseVector<T>> cols(rows_);
        for (std::size_t j = 0; j < cols_; ++j)
            for (const auto& [i, v] : columns_[j]) cols[i].push_back(j, v);
        return from_columns(cols_, std::move(cols));
    }

    /// Row vectors of the matrix (as sparse vectors over column indices).
    std::vector<SparseVector<T>> row_vectors() const { return transpose().columns_; }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
        SparseMatrix out(a.rows_, b.cols_);
        Accumulator<T> acc(a.rows_);
        for (std::size_t j = 0; j < b.cols_; ++j) {
            for (const auto& [k, v] : b.columns_[j]) acc.add_scaled(a.columns_[k], v);
            out.columns_[j] = acc.take();
        }
        return out;
    }

    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) {
        for (std::size_t j = 0; j < a.cols_; ++j) a.columns_[j].add_scaled(b.columns_.at(j), T(1));
        return a;
    }

    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) {
        for (std::size_t j = 0; j < a.cols_; ++j) a.columns_[j].add_scaled(b.columns_.at(j), T(-1));
        return a;
    }

    friend SparseMatrix operator*(const T& f, SparseMatrix m) {
        for (auto& c : m.columns_) c *= f;
        return m;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
    }

    bool is_zero_matrix() const {
        return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector<T>> columns_ = std::vector<SparseVector<T>>(cols_);
};

using QMatrix = SparseMatrix<Rational>;

/// Incremental fully reduced row echelon form.
/// With tracking enabled, each stored row also records which combination of
/// inserted vectors produced it.
template <class T>
class Echelon {
public:
    explicit Echelon(std::size_t ncols, bool track = false)
        : ncols_(ncols), track_(track), row_of_col_(ncols, npos) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }
    const std::vector<SparseVector<T>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after elimination against the stored rows.
    SparseVector<T> reduce(const SparseVector<T>& v) const {
        SparseVector<T> r = v;
        for (const auto& [c, x] : v) {
            if (c >= ncols_) throw Error("echelon: index out of range");
            std::size_t k = row_of_col_[c];
            if (k != npos) r.add_scaled(rows_[k], -x);
        }
        return r;
    }

    bool contains(const SparseVector<T>& v) const { return reduce(v).empty(); }

    /// Inserts v; returns true iff the rank grew.
    bool insert(const SparseVector<T>& v) {
        SparseVector<T> r = v;
        SparseVector<T> combo;
        if (track_) combo = SparseVector<T>::unit(inserted_);
        ++inserted_;
        for (const auto& [c, x] : v) {
            std::size_t k = row_of_col_.at(c);
            if (k == npos) continue;
            r.add_scaled(rows_[k], -x);
            if (track_) combo.add_scaled(combos_[k], -x);
        }
        if (r.empty()) return false;
        const std::size_t p = r.leading_index();
        const T inv = T(1) / r.entries().front().second;
        r *= inv;
        if (track_) combo *= inv;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            T f = rows_[k].at(p);
            if (is_zero(f)) continue;
            rows_[k].add_scaled(r, -f);
            if (track_) combos_[k].add_scaled(combo, -f);
        }
        row_of_col_[p] = rows_.size();
        pivots_.push_back(p);
        rows_.push_back(std::move(r));
        if (track_) combos_.push_back(std::move(combo));
        return true;
    }

    /// Basis of {x : row·x = 0 for all rows}, one vector per free column in
    /// increasing order; each has coordinate 1 at its free column.
    std::vector<SparseVector<T>> nullspace() const {
        std::vector<std::vector<std::pair<std::size_t, T>>> extra(ncols_);
        for (std::size_t k = 0; k < rows_.size(); ++k)
            for (const auto& [c, x] : rows_[k])
                if (c != pivots_[k]) extra[c].emplace_back(pivots_[k], -x);
        std::vector<SparseVector<T>> basis;
        for (std::size_t f = 0; f < ncols_; ++f) {
            if (row_of_col_[f] != npos) continue;
            auto entries = extra[f];
            entries.emplace_back(f, T(1));
            std::sort(entries.begin(), entries.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            SparseVector<T> v;
            for (auto& [i, x] : entries) v.push_back(i, std::move(x));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Coefficients c with v = sum c_k inserted_k, if v lies in the span.
    /// Requires tracking.
    std::optional<SparseVector<T>> express(const SparseVector<T>& v) const {
        if (!track_) throw Error("echelon: express requires tracking");
        SparseVector<T> r = v;
        Accumulator<T> acc(inserted_);
        for (const auto& [c, x] : v) {
            std::size_t k = row_of_col_.at(c);
            if (k == npos) continue;
            r.add_scaled(rows_[k], -x);
            acc.add_scaled(combos_[k], x);
        }
        if (!r.empty()) return std::nullopt;
        return acc.take();
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t ncols_;
    bool track_;
    std::size_t inserted_ = 0;
    std::vector<SparseVector<T>> rows_;
    std::vector<SparseVector<T>> combos_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> row_of_col_;
};

/// Coordinates with respect to a fixed linearly independent family.
template <class T>
class SubspaceBasis {
public:
    SubspaceBasis(std::size_t ambient, std::vector<SparseVector<T>> basis)
        : basis_(std::move(basis)), echelon_(ambient, true) {
        for (const auto& b : basis_)
            if (!echelon_.insert(b)) throw Error("subspace basis: vectors are linearly dependent");
    }

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient() const { return echelon_.ncols(); }
    const std::vector<SparseVector<T>>& vectors() const { return basis_; }
    bool contains(const SparseVector<T>& v) const { return echelon_.contains(v); }
    std::optional<SparseVector<T>> coordinates(const SparseVector<T>& v) const { return echelon_.express(v); }

    SparseVector<T> combine(const SparseVector<T>& coords) const {
        Accumulator<T> acc(ambient());
        for (const auto& [k, c] : coords) acc.add_scaled(basis_.at(k), c);
        return acc.take();
    }

private:
    std::vector<SparseVector<T>> basis_;
    Echelon<T> echelon_;
};

template <class T>
std::size_t rank_of(const std::vector<SparseVector<T>>& rows, std::size_t ncols) {
    Echelon<T> e(ncols);
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

/// Kernel of a column-stored matrix.
template <class T>
std::vector<SparseVector<T>> kernel(const SparseMatrix<T>& m) {
    Echelon<T> e(m.cols());
    for (const auto& r : m.row_vectors()) e.insert(r);
    return e.nullspace();
}

/// Kernel of several maps with a common domain.
template <class T>
std::vector<SparseVector<T>> common_kernel(const std::vector<const SparseMatrix<T>*>& maps, std::size_t domain) {
    Echelon<T> e(domain);
    for (const auto* m : maps)
        for (const auto& r : m->row_vectors()) e.insert(r);
    return e.nullspace();
}

/// Inertia (n+, n0, n-) of a symmetric or Hermitian form.
struct Signature {
    std::size_t plus = 0;
    std::size_t zero = 0;
    std::size_t minus = 0;

    std::size_t total() const { return plus + zero + minus; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

/// Sylvester inertia by symmetric elimination. For T = Gaussian the input
/// must be Hermitian.
template <class T>
Signature congruence_signature(DenseMatrix<T> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw Error("signature: matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j] != conj(a[j][i])) throw Error("signature: matrix is not self-adjoint");

    Signature s;
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n && piv == n; ++i)
            if (!is_zero(a[i][i])) piv = i;
        if (piv == n) {
            std::size_t pi = n;
            std::size_t pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!is_zero(a[i][j])) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                s.zero += n - k;
                return s;
            }
            // row_i += c row_j, col_i += conj(c) col_j makes a_ii = 2|a_ij|^2.
            const T c = a[pi][pj];
            for (std::size_t j = 0; j < n; ++j) a[pi][j] += c * a[pj][j];
            for (std::size_t i = 0; i < n; ++i) a[i][pi] += conj(c) * a[i][pj];
            piv = pi;
        }
        if (piv != k) {
            std::swap(a[piv], a[k]);
            for (auto& row : a) std::swap(row[piv], row[k]);
        }
        const T p = a[k][k];
        const bool positive = [&] {
            if constexpr (std::is_same_v<T, Gaussian>) {
                return sgn(p.re) > 0;
            } else {
                return sgn(p) > 0;
            }
        }();
        (positive ? s.plus : s.minus) += 1;
        nz.clear();
        for (std::size_t j = k + 1; j < n; ++j)
            if (!is_zero(a[k][j])) nz.push_back(j);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(a[i][k])) continue;
            const T f = a[i][k] / p;
            for (std::size_t j : nz) a[i][j] -= f * a[k][j];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            a[i][k] = T(0);
            a[k][i] = T(0);
        }
    }
    return s;
}

}  // namespace xi
