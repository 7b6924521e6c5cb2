#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "xi/causality.hpp"
#include "xi/classify.hpp"

using namespace xi;
using xi::testing::small_rational;

namespace {

const Rational half(1, 2);

std::vector<Rational> negated(std::vector<Rational> v) {
    for (auto& x : v) x = -x;
    std::sort(v.begin(), v.end());
    return v;
}

bool has_value(const SpectrumReport& s, const Rational& v) {
    return std::find(s.values.begin(), s.values.end(), v) != s.values.end();
}

std::vector<bool> symmetric_flags(const RootDatum& rd) {
    std::vector<bool> out;
    for (const auto& f : component_flags(rd)) out.push_back(f.symmetric);
    return out;
}

}  // namespace

TEST_CASE("spectrum at the C_n vertex") {
    for (int n = 2; n <= 5; ++n) {
        const RootDatum rd = build_root_system(Family::C, n);
        const auto s = ad_spectrum(rd, RationalVector(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))));
        CHECK(s.is_involutive);
        CHECK(s.is_half_integral);
        CHECK(has_value(s, 1));
        CHECK(has_value(s, -1));
        CHECK(has_value(s, 0));
        CHECK(s.values.size() == rd.roots.size() + 1);
    }
}

TEST_CASE("spectrum at the E6 vertices") {
    const RootDatum e6 = build_root_system(Family::E6, 6);
    const auto orbits = extreme_orbits(make_crown(e6)).orbits;
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].representative == e6.dual_basis[5]);
    CHECK(orbits[1].representative == e6.dual_basis[0]);
    for (const auto& o : orbits) CHECK(ad_spectrum(e6, o.representative).is_involutive);
}

TEST_CASE("spectrum at the short B_p vertex contains 1/2") {
    for (int p = 3; p <= 6; ++p) {
        const RootDatum rd = build_root_system(Family::B, p);
        const auto s = ad_spectrum(rd, RationalVector(std::vector<Rational>(static_cast<std::size_t>(p), half)));
        CHECK(has_value(s, half));
        CHECK(has_value(s, -half));
        CHECK(s.is_half_integral);
        CHECK_FALSE(s.is_involutive);
    }
}

TEST_CASE("spectrum at zero") {
    const RootDatum rd = build_root_system(Family::D, 4);
    const auto s = ad_spectrum(rd, RationalVector(4));
    CHECK(std::all_of(s.values.begin(), s.values.end(), [](const Rational& v) { return v == 0; }));
    CHECK(s.is_involutive);
}

TEST_CASE("spectra are symmetric about zero and involutive implies half-integral") {
    for (auto label : {"A3", "B3", "C3", "D4", "BC2", "E6"}) {
        const RootDatum rd = build_root_system(label);
        for (int k = 0; k < 40; ++k) {
            RationalVector y(rd.ambient_dim);
            for (const auto& w : rd.dual_basis) y += small_rational(2, 4) * w;
            const auto s = ad_spectrum(rd, y);
            CHECK(s.values == negated(s.values));
            if (s.is_involutive) CHECK(s.is_half_integral);
        }
    }
}

TEST_CASE("involutivity is constant on Weyl orbits") {
    for (auto label : {"A2", "A3", "B2", "B3", "C3", "D4", "BC2", "BC3", "E6"}) {
        const RootDatum rd = build_root_system(label);
        for (const auto& orbit : extreme_orbits(make_crown(rd)).orbits) {
            const bool flag = ad_spectrum(rd, orbit.representative).is_involutive;
            for (const auto& y : orbit.elements) CHECK(ad_spectrum(rd, y).is_involutive == flag);
        }
    }
}

TEST_CASE("component flags") {
    for (int p = 3; p <= 6; ++p) CHECK(symmetric_flags(build_root_system(Family::B, p)) == std::vector<bool>{true, false});
    CHECK(symmetric_flags(build_root_system(Family::B, 2)) == std::vector<bool>{true});
    for (int n = 2; n <= 6; ++n)
        CHECK(symmetric_flags(build_root_system(Family::A, n - 1)) ==
              std::vector<bool>(static_cast<std::size_t>(n - 1), true));
    CHECK(symmetric_flags(build_root_system(Family::E6, 6)) == std::vector<bool>{true, true});
    // E7 has a second vertex orbit at omega_2/2 (see README); only the omega_7 orbit is symmetric.
    CHECK(symmetric_flags(build_root_system(Family::E7, 7)) == std::vector<bool>{false, true});
    for (const auto& f : component_flags(build_root_system(Family::D, 5))) CHECK(f.totally_real == f.symmetric);
}

TEST_CASE("non-symmetric vertices among A, B, C, D occur exactly for B_p, p >= 3") {
    auto has_nonsymmetric = [](const RootDatum& rd) {
        const auto f = symmetric_flags(rd);
        return std::find(f.begin(), f.end(), false) != f.end();
    };
    for (int r = 1; r <= 6; ++r) CHECK_FALSE(has_nonsymmetric(build_root_system(Family::A, r)));
    for (int r = 2; r <= 6; ++r) CHECK(has_nonsymmetric(build_root_system(Family::B, r)) == (r >= 3));
    for (int r = 2; r <= 5; ++r) CHECK_FALSE(has_nonsymmetric(build_root_system(Family::C, r)));
    for (int r = 3; r <= 6; ++r) CHECK_FALSE(has_nonsymmetric(build_root_system(Family::D, r)));
    // BC_n: the short roots evaluate to 1/2 at every vertex (su(p,q), p != q, is not causal).
    for (int r = 1; r <= 4; ++r) CHECK(symmetric_flags(build_root_system(Family::BC, r)) == std::vector<bool>{false});
}

TEST_CASE("every classical table entry has a symmetric vertex orbit") {
    for (auto name : {"sp(3,R)", "su(2,2)", "so*(8)", "so(3,5)", "so(4,4)", "sp(2,2)", "sl(4,R)", "sl(3,H)", "so(6,C)",
                      "so(7,C)", "sp(2,C)", "sl(4,C)", "so(2,5)"}) {
        CAPTURE(name);
        REQUIRE_FALSE(lookup_causal_pairs(name).empty());
        const auto f = symmetric_flags(*realize(name).datum);
        CHECK(std::find(f.begin(), f.end(), true) != f.end());
    }
}

TEST_CASE("reference table is stored verbatim") {
    const auto& t = causal_reference_table();
    REQUIRE(t.size() == 18);
    const std::vector<std::pair<std::string, std::string>> rows{
        {"sp(n,R)", "gl(n,R)"},    {"su(n,n)", "sl(n,C)+R"},        {"so*(4n)", "sl(n,H)+R"},
        {"so(p,q)", "so(1,p-1)+so(1,q-1)"}, {"so(n,n)", "so(n,C)"}, {"sp(n,n)", "sp(n,C)"},
        {"sl(n,R)", "so(q,n-q)"},  {"sl(n,H)", "sp(q,n-q)"},        {"so(2n,C)", "so*(2n)"},
        {"so(n+2,C)", "so(2,n)"},  {"sp(n,C)", "sp(n,R)"},          {"sl(n,C)", "su(q,n-q)"},
        {"e6(6)", "sp(2,2)"},      {"e6(-26)", "f4(-20)"},          {"e6", "e6(-14)"},
        {"e7(7)", "su*(8)"},       {"e7(-25)", "e6(-26)+R"},        {"e7", "e7(-25)"}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(t[i].g == rows[i].first);
        CHECK(t[i].h == rows[i].second);
    }
    std::vector<std::string> cayley;
    for (const auto& r : cayley_rows()) cayley.push_back(r.g);
    CHECK(cayley == std::vector<std::string>{"sp(n,R)", "su(n,n)", "so*(4n)", "so(2,n)", "e7(-25)"});
}

TEST_CASE("lookup of causal pairs") {
    CHECK(lookup_causal_pairs("sl(4,R)") == std::vector<std::string>{"so(1,3)", "so(2,2)", "so(3,1)"});
    CHECK(lookup_causal_pairs("sl(3,H)") == std::vector<std::string>{"sp(1,2)", "sp(2,1)"});
    CHECK(lookup_causal_pairs("sl(3,C)") == std::vector<std::string>{"su(1,2)", "su(2,1)"});
    CHECK(lookup_causal_pairs("e7(7)") == std::vector<std::string>{"su*(8)"});
    CHECK(lookup_causal_pairs("e6C") == std::vector<std::string>{"e6(-14)"});
    CHECK(lookup_causal_pairs("su(3,3)") == std::vector<std::string>{"sl(3,C)+R"});
    CHECK(lookup_causal_pairs("so*(8)") == std::vector<std::string>{"sl(2,H)+R"});
    CHECK(lookup_causal_pairs("so(4,4)") == std::vector<std::string>{"so(1,3)+so(1,3)", "so(4,C)"});
    CHECK(lookup_causal_pairs("so(5,3)") == lookup_causal_pairs("so(3,5)"));
    CHECK(lookup_causal_pairs("so(2,5)") == std::vector<std::string>{"so(1,4)+R"});
    CHECK(lookup_causal_pairs("so(1,4)") == std::vector<std::string>{"so(1,3)"});
    CHECK(lookup_causal_pairs("so(6,C)") == std::vector<std::string>{"so*(6)", "so(2,4)"});
    CHECK(lookup_causal_pairs("so(5,C)") == std::vector<std::string>{"so(2,3)"});
    CHECK(lookup_causal_pairs("sp(2,C)") == std::vector<std::string>{"sp(2,R)"});
    CHECK(lookup_causal_pairs("sp(2,R)") == std::vector<std::string>{"gl(2,R)"});
    CHECK(lookup_causal_pairs("sl(2,R)") == std::vector<std::string>{"R"});
    CHECK(lookup_causal_pairs("su(2,3)").empty());
    CHECK(lookup_causal_pairs("so*(10)").empty());
    CHECK(lookup_causal_pairs("su(4)").empty());
    CHECK(lookup_causal_pairs("e6(-14)").empty());
    CHECK_THROWS_AS(lookup_causal_pairs("xyz(3)"), Error);
    CHECK_THROWS_AS(lookup_causal_pairs("sl(3,R)+R"), Error);
}

TEST_CASE("non-symmetric and doubly restricted targets") {
    CHECK(non_symmetric_targets("so(3,7)") == std::vector<std::string>{"so(3,C)+so(4)"});
    CHECK(non_symmetric_targets("so(3,4)") == std::vector<std::string>{"so(3,C)"});
    CHECK(non_symmetric_targets("so(7,C)") == std::vector<std::string>{"so*(6)"});
    CHECK(non_symmetric_targets("so(2,7)").empty());
    CHECK(non_symmetric_targets("so(4,4)").empty());
    CHECK(xi0_targets("so(4,4)") == std::vector<std::string>{"so(4,C)"});
    CHECK(xi0_targets("so(3,5)") == std::vector<std::string>{"so(3,C)+so(2)"});
    CHECK(xi0_targets("so(6,C)") == std::vector<std::string>{"so*(6)"});
    CHECK(xi0_targets("so(7,C)") == std::vector<std::string>{"so*(6)"});
    CHECK_THROWS_AS(xi0_targets("sl(3,R)"), Error);
}
