#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xi/exact.hpp"

namespace xi {

/// Univariate polynomial over Q; coefficients stored from the constant term up.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial monomial(std::size_t degree, Rational c = 1);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& f, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    struct DivMod;
    DivMod divmod(const Polynomial& divisor) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct Polynomial::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

Polynomial gcd(Polynomial a, Polynomial b);

/// Square-free factors: p = c * prod f_k^k, returned as (f_k, k) with f_k non-constant.
std::vector<std::pair<Polynomial, std::size_t>> squarefree_decomposition(const Polynomial& p);

/// Distinct real roots in (a, +inf) of a square-free polynomial with p(a) != 0, by Sturm chain.
std::size_t sturm_roots_above(const Polynomial& squarefree, const Rational& a);

/// Real roots in (0, +inf) counted with multiplicity.
std::size_t count_positive_roots(const Polynomial& p);

}  // namespace xi
