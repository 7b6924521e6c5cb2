#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "xi/exact.hpp"

namespace xi {

/// Point of the ambient Euclidean space, in crown units: the stored value is
/// (2/pi) times the geometric vector, so crown boundaries sit at |<a, X>| = 1.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : c_(dim, Rational(0)) {}
    explicit RationalVector(std::vector<Rational> coords) : c_(std::move(coords)) {}
    RationalVector(std::initializer_list<Rational> coords) : c_(coords) {}

    static RationalVector unit(std::size_t dim, std::size_t i, Rational v = 1);

    std::size_t dim() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }
    bool is_zero() const;

    RationalVector& operator+=(const RationalVector& o);
    RationalVector& operator-=(const RationalVector& o);
    RationalVector& operator*=(const Rational& f);
    friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
    friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
    friend RationalVector operator-(RationalVector a) { return a *= Rational(-1); }
    friend RationalVector operator*(const Rational& f, RationalVector v) { return v *= f; }
    friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RationalVector& a, const RationalVector& b) { return !(a == b); }
    /// Lexicographic order on coordinates.
    friend bool operator<(const RationalVector& a, const RationalVector& b);

    std::vector<std::string> to_strings() const;
    std::string to_string() const;

private:
    std::vector<Rational> c_;
};

Rational dot(const RationalVector& a, const RationalVector& b);

struct RationalVectorHash {
    std::size_t operator()(const RationalVector& v) const;
};

enum class Family { A, B, C, D, BC, E6, E7 };

std::string family_name(Family f);
std::string datum_name(Family f, int rank);
/// Parses labels such as "A3", "BC2", "E7".
std::pair<Family, int> parse_datum_name(std::string_view label);

struct HighestRoot {
    RationalVector root;
    std::vector<long> coefficients;
};

struct RootDatum {
    Family family = Family::A;
    int rank = 0;
    std::size_t ambient_dim = 0;
    std::vector<RationalVector> roots;     // canonical (lexicographic) order
    std::vector<RationalVector> simple;    // alpha_1 .. alpha_n
    std::vector<RationalVector> positive;  // canonical order
    std::vector<RationalVector> dual_basis;
    HighestRoot highest;  // empty for reducible data (D2)
    std::uint64_t weyl_order = 0;
    std::string label;  // e.g. "E6"; distinguishes non-default normalizations

    std::string name() const { return label; }
    bool contains(const RationalVector& v) const;
    /// Coefficients of v in the simple roots; v must lie in span(roots).
    std::vector<Rational> simple_coordinates(const RationalVector& v) const;
    /// Orthogonal projection onto span(roots).
    RationalVector project(const RationalVector& v) const;
    bool in_span(const RationalVector& v) const { return project(v) == v; }
    /// Squared lengths of the roots, ascending, without repetition.
    std::vector<Rational> root_lengths() const;
};

/// Assembles a datum from explicit roots and simple roots, deriving the
/// positive system, dual basis and highest root and validating invariants.
RootDatum make_root_datum(Family family, int rank, std::vector<RationalVector> roots,
                          std::vector<RationalVector> simple, std::string label);

RootDatum build_root_system(Family family, int rank);
RootDatum build_root_system(std::string_view label);

std::vector<RationalVector> dual_basis(const RootDatum& rd);
HighestRoot highest_root(const RootDatum& rd);
std::uint64_t weyl_order(const RootDatum& rd);
std::uint64_t weyl_order(Family family, int rank);

/// Cartan matrix entries 2<a_i, a_j>/<a_j, a_j>.
std::vector<std::vector<long>> cartan_matrix(const RootDatum& rd);

/// True iff the simple roots form a connected Dynkin diagram.
bool is_irreducible(const RootDatum& rd);

}  // namespace xi
