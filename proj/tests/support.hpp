#pragma once

// Hand-rolled generators for property tests.

#include <random>
#include <vector>

#include "doctest.h"
#include "xi/exact.hpp"
#include "xi/rootsys.hpp"

namespace doctest {
template <>
struct StringMaker<xi::RationalVector> {
    static String convert(const xi::RationalVector& v) { return v.to_string().c_str(); }
};
}  // namespace doctest

namespace xi::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed1234ULL);
    return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational small_rational(long range = 5, long max_den = 4) {
    Rational q(uniform(-range, range), uniform(1, max_den));
    q.canonicalize();
    return q;
}

inline Gaussian small_gaussian(long range = 5, long max_den = 3) {
    return {small_rational(range, max_den), small_rational(range, max_den)};
}

template <class T>
DenseMatrix<T> zero_matrix(std::size_t n) {
    return DenseMatrix<T>(n, std::vector<T>(n, T(0)));
}

/// Unit lower triangular times unit upper triangular: always invertible.
inline DenseMatrix<Rational> random_invertible(std::size_t n) {
    auto l = zero_matrix<Rational>(n);
    auto u = zero_matrix<Rational>(n);
    for (std::size_t i = 0; i < n; ++i) {
        l[i][i] = 1;
        u[i][i] = uniform(0, 1) ? 1 : -1;
        for (std::size_t j = 0; j < i; ++j) l[i][j] = small_rational(3, 2);
        for (std::size_t j = i + 1; j < n; ++j) u[i][j] = small_rational(3, 2);
    }
    auto p = zero_matrix<Rational>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) p[i][j] += l[i][k] * u[k][j];
    return p;
}

}  // namespace xi::testing
