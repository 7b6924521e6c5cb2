#include "xi/poly.hpp"

#include <sstream>

namespace xi {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, Rational c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return {};
    return (Rational(1) / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& f, const Polynomial& p) {
    std::vector<Rational> c = p.c_;
    for (auto& x : c) x *= f;
    return Polynomial(std::move(c));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> r = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    if (r.size() <= dd) return {Polynomial(), *this};
    std::vector<Rational> q(r.size() - dd, Rational(0));
    const Rational lead = divisor.leading();
    for (std::size_t k = r.size(); k-- > dd;) {
        if (sgn(r[k]) == 0) continue;
        Rational f = r[k] / lead;
        for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] -= f * divisor.c_[j];
        q[k - dd] = std::move(f);
    }
    r.resize(dd);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (sgn(c_[k]) == 0) continue;
        if (!first) os << " + ";
        os << xi::to_string(c_[k]);
        if (k > 0) os << "*x^" << k;
        first = false;
    }
    return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<Polynomial, std::size_t>> squarefree_decomposition(const Polynomial& p) {
    // Yun's algorithm (characteristic zero).
    std::vector<std::pair<Polynomial, std::size_t>> out;
    if (p.degree() < 1) return out;
    const Polynomial dp = p.derivative();
    Polynomial a = gcd(p, dp);
    Polynomial b = p.divmod(a).quotient;
    Polynomial c = dp.divmod(a).quotient;
    Polynomial d = c - b.derivative();
    for (std::size_t k = 1; b.degree() >= 1; ++k) {
        Polynomial g = gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(g, k);
        b = b.divmod(g).quotient;
        c = d.divmod(g).quotient;
        d = c - b.derivative();
    }
    return out;
}

namespace {

int sign_at_infinity(const Polynomial& p) { return sgn(p.leading()); }

std::size_t variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

std::size_t sturm_roots_above(const Polynomial& squarefree, const Rational& a) {
    if (squarefree.degree() < 1) return 0;
    if (sgn(squarefree(a)) == 0) throw Error("Sturm count: the lower endpoint is a root");
    std::vector<Polynomial> chain{squarefree, squarefree.derivative()};
    while (!chain.back().is_zero()) {
        Polynomial r = chain[chain.size() - 2].divmod(chain.back()).remainder;
        if (r.is_zero()) break;
        chain.push_back(Rational(-1) * r);
    }
    std::vector<int> at_a;
    std::vector<int> at_inf;
    for (const auto& q : chain) {
        at_a.push_back(sgn(q(a)));
        at_inf.push_back(sign_at_infinity(q));
    }
    return variations(at_a) - variations(at_inf);
}

std::size_t count_positive_roots(const Polynomial& p) {
    if (p.is_zero()) throw Error("positive-root count of the zero polynomial");
    std::size_t total = 0;
    for (const auto& [f, k] : squarefree_decomposition(p)) {
        // Strip the root at 0 so the Sturm count at 0 is well defined.
        Polynomial g = f;
        while (g.degree() >= 1 && sgn(g.coefficient(0)) == 0) {
            std::vector<Rational> c(g.coefficients().begin() + 1, g.coefficients().end());
            g = Polynomial(std::move(c));
        }
        total += k * sturm_roots_above(g, Rational(0));
    }
    return total;
}

}  // namespace xi
