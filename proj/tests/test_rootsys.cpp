#include "doctest.h"
#include "support.hpp"
#include "xi/rootsys.hpp"
#include "xi/weyl.hpp"

using namespace xi;

namespace {

const Rational half(1, 2);

RationalVector v8(std::initializer_list<Rational> c) { return RationalVector(std::vector<Rational>(c)); }

std::vector<std::pair<Family, int>> small_data() {
    return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 1}, {Family::B, 2},
            {Family::B, 3}, {Family::B, 4}, {Family::C, 1}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
            {Family::D, 2}, {Family::D, 3}, {Family::D, 4}, {Family::BC, 1}, {Family::BC, 2}, {Family::BC, 3},
            {Family::BC, 4}};
}

std::vector<RootDatum> all_data() {
    std::vector<RootDatum> out;
    for (auto [f, n] : small_data()) out.push_back(build_root_system(f, n));
    out.push_back(build_root_system(Family::E6, 6));
    out.push_back(build_root_system(Family::E7, 7));
    return out;
}

}  // namespace

TEST_CASE("A3 has the twelve roots e_i - e_j") {
    const RootDatum rd = build_root_system(Family::A, 3);
    CHECK(rd.ambient_dim == 4);
    CHECK(rd.roots.size() == 12);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            ++pairs;
            CHECK(rd.contains(RationalVector::unit(4, i) - RationalVector::unit(4, j)));
        }
    CHECK(pairs == rd.roots.size());
}

TEST_CASE("root counts per family") {
    // Independent counts: ordered pairs, sign patterns, and the defining families.
    for (int n = 1; n <= 6; ++n) {
        CHECK(build_root_system(Family::A, n).roots.size() == static_cast<std::size_t>((n + 1) * n));
        CHECK(build_root_system(Family::B, n).roots.size() == static_cast<std::size_t>(4 * n * (n - 1) / 2 + 2 * n));
        CHECK(build_root_system(Family::C, n).roots.size() == static_cast<std::size_t>(4 * n * (n - 1) / 2 + 2 * n));
        CHECK(build_root_system(Family::BC, n).roots.size() == static_cast<std::size_t>(4 * n * (n - 1) / 2 + 4 * n));
        if (n >= 2) CHECK(build_root_system(Family::D, n).roots.size() == static_cast<std::size_t>(4 * n * (n - 1) / 2));
    }
    // E6: 4*C(5,2) integral roots plus 2^5 half-integral ones.
    CHECK(build_root_system(Family::E6, 6).roots.size() == 40 + 32);
    // E7: 4*C(6,2) + 2 + 2^6.
    CHECK(build_root_system(Family::E7, 7).roots.size() == 60 + 2 + 64);
}

TEST_CASE("D2 is +-e1 +- e2") {
    const RootDatum rd = build_root_system(Family::D, 2);
    CHECK(rd.roots.size() == 4);
    CHECK(rd.contains(RationalVector{1, 1}));
    CHECK(rd.contains(RationalVector{1, -1}));
    CHECK(rd.contains(RationalVector{-1, 1}));
    CHECK(rd.contains(RationalVector{-1, -1}));
    CHECK_FALSE(is_irreducible(rd));
    CHECK(weyl_order(rd) == 4);
}

TEST_CASE("E6 roots all have squared length 2 and lie in the six-dimensional subspace") {
    const RootDatum rd = build_root_system(Family::E6, 6);
    for (const auto& a : rd.roots) {
        CHECK(dot(a, a) == 2);
        CHECK(a[5] == a[6]);
        CHECK(a[6] == -a[7]);
    }
    CHECK(rd.highest.coefficients == std::vector<long>{1, 2, 2, 3, 2, 1});
}

TEST_CASE("E6 fundamental weights") {
    const RootDatum rd = build_root_system(Family::E6, 6);
    const Rational t(1, 3);
    // (e8 - e7 - e6) has coordinates (0,...,0,-1,-1,1).
    auto tail = [](const Rational& c) { return std::vector<Rational>{-c, -c, c}; };
    auto make = [&](std::vector<Rational> head, const Rational& c) {
        auto t3 = tail(c);
        head.insert(head.end(), t3.begin(), t3.end());
        return RationalVector(head);
    };
    CHECK(rd.dual_basis[0] == make({0, 0, 0, 0, 0}, 2 * t));
    CHECK(rd.dual_basis[1] == make({half, half, half, half, half}, half));
    CHECK(rd.dual_basis[2] == make({-half, half, half, half, half}, Rational(5, 6)));
    CHECK(rd.dual_basis[3] == make({0, 0, 1, 1, 1}, 1));
    CHECK(rd.dual_basis[4] == make({0, 0, 0, 1, 1}, 2 * t));
    CHECK(rd.dual_basis[5] == make({0, 0, 0, 0, 1}, t));
}

TEST_CASE("E7 data") {
    const RootDatum rd = build_root_system(Family::E7, 7);
    CHECK(rd.highest.coefficients == std::vector<long>{2, 2, 3, 4, 3, 2, 1});
    CHECK(rd.dual_basis[6] == v8({0, 0, 0, 0, 0, 1, -half, half}));
    CHECK(rd.dual_basis[0] == v8({0, 0, 0, 0, 0, 0, -1, 1}));
    CHECK(rd.dual_basis[3] == v8({0, 0, 1, 1, 1, 1, -2, 2}));
    CHECK(rd.weyl_order == 2903040);
    for (const auto& a : rd.roots) CHECK(a[6] == -a[7]);
}

TEST_CASE("A1 dual basis in the trace-zero line") {
    const RootDatum rd = build_root_system(Family::A, 1);
    CHECK(rd.dual_basis[0] == RationalVector{half, -half});
}

TEST_CASE("highest roots of B2 and C3 by brute-force dominance") {
    for (const auto& [f, n, expect] : {std::tuple{Family::B, 2, RationalVector{1, 1}},
                                       std::tuple{Family::C, 3, RationalVector{1, 0, 0}}}) {
        const RootDatum rd = build_root_system(f, n);
        // Oracle: the positive root beta with beta - alpha a nonnegative
        // combination of simple roots for all alpha, searched exhaustively.
        std::vector<RationalVector> winners;
        for (const auto& b : rd.positive) {
            bool dominates = true;
            for (const auto& a : rd.positive)
                for (const auto& c : rd.simple_coordinates(b - a)) dominates = dominates && sgn(c) >= 0;
            if (dominates) winners.push_back(b);
        }
        REQUIRE(winners.size() == 1);
        CHECK(winners.front() == expect);
        CHECK(rd.highest.root == expect);
    }
    CHECK(build_root_system(Family::C, 3).roots.size() == 18);
}

TEST_CASE("datum invariants hold for every family instance") {
    for (const auto& rd : all_data()) {
        CAPTURE(rd.label);
        // Sigma = Sigma+ u -Sigma+
        CHECK(rd.positive.size() * 2 == rd.roots.size());
        for (const auto& a : rd.positive) CHECK_FALSE(std::binary_search(rd.positive.begin(), rd.positive.end(), -a));
        // dual basis
        for (std::size_t i = 0; i < rd.simple.size(); ++i)
            for (std::size_t j = 0; j < rd.simple.size(); ++j)
                CHECK(dot(rd.dual_basis[i], rd.simple[j]) == (i == j ? 1 : 0));
        if (!is_irreducible(rd)) {
            CHECK(rd.highest.coefficients.empty());
            CHECK_THROWS_AS(highest_root(rd), Error);
            continue;
        }
        // highest root dominates
        CHECK(rd.contains(rd.highest.root));
        for (const auto& a : rd.positive)
            for (const auto& c : rd.simple_coordinates(rd.highest.root - a)) CHECK(sgn(c) >= 0);
        for (long m : rd.highest.coefficients) CHECK(m > 0);
    }
}

TEST_CASE("reflections preserve the root set and Cartan integers are bounded") {
    for (const auto& rd : all_data()) {
        CAPTURE(rd.label);
        for (const auto& a : rd.roots)
            for (const auto& b : rd.roots) {
                CHECK(rd.contains(reflect(b, a)));
                const Rational c = 2 * dot(a, b) / dot(b, b);
                CHECK(c.get_den() == 1);
                CHECK(abs(c) <= 4);
            }
    }
}

TEST_CASE("re-expanding simple roots in the dual basis gives Cartan columns") {
    for (const auto& rd : all_data()) {
        CAPTURE(rd.label);
        const auto cm = cartan_matrix(rd);
        for (std::size_t j = 0; j < rd.simple.size(); ++j) {
            RationalVector back(rd.ambient_dim);
            for (std::size_t i = 0; i < rd.simple.size(); ++i)
                back += (Rational(cm[i][j]) * dot(rd.simple[j], rd.simple[j]) / 2) * rd.dual_basis[i];
            CHECK(back == rd.simple[j]);
        }
    }
}

TEST_CASE("closed-form Weyl orders agree with BFS on a regular vector") {
    for (auto [f, n] : small_data()) {
        const RootDatum rd = build_root_system(f, n);
        CAPTURE(rd.label);
        const RationalVector reg = regular_vector(rd);
        for (const auto& a : rd.roots) REQUIRE(sgn(dot(a, reg)) != 0);
        CHECK(orbit(rd, reg).size() == weyl_order(rd));
    }
    CHECK(weyl_order(build_root_system(Family::B, 3)) == 48);
    CHECK(weyl_order(build_root_system(Family::A, 3)) == 24);
}

TEST_CASE("invalid family and rank combinations are rejected") {
    CHECK_THROWS_AS(build_root_system(Family::D, 1), Error);
    CHECK_THROWS_AS(build_root_system(Family::A, 0), Error);
    CHECK_THROWS_AS(build_root_system(Family::E6, 5), Error);
    CHECK_THROWS_AS(build_root_system("F4"), Error);
    CHECK(build_root_system("bc2").roots.size() == 12);
    CHECK(parse_datum_name("E7") == std::pair{Family::E7, 7});
}
