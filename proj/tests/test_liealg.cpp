#include <string>

#include "doctest.h"
#include "support.hpp"
#include "xi/algebra_name.hpp"
#include "xi/classify.hpp"
#include "xi/realizations.hpp"

using namespace xi;
using xi::testing::random_invertible;

namespace {

bool all_ok(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        if (!c.ok) {
            MESSAGE(c.name << ": " << c.detail);
            return false;
        }
    }
    return true;
}

QMatrix square(const QMatrix& a) { return a * a; }

/// (re + i im)^2 as a pair.
std::pair<QMatrix, QMatrix> complex_square(const std::pair<QMatrix, QMatrix>& t) {
    return {t.first * t.first - t.second * t.second, t.first * t.second + t.second * t.first};
}

std::vector<std::string> h_names(const Classification& c) {
    std::vector<std::string> out;
    for (const auto& comp : c.components) out.push_back(comp.h_name);
    return out;
}

std::vector<QVector> dense_columns(const DenseMatrix<Rational>& p) {
    std::vector<QVector> out(p.size());
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i][j] != 0) out[j].push_back(i, p[i][j]);
    return out;
}

}  // namespace

TEST_CASE("algebra names parse and normalize") {
    CHECK(parse_algebra_name("so(5,3)").canonical().to_string() == "so(3,5)");
    CHECK(parse_algebra_name("so(1,3)+R").to_string() == "so(1,3)+R");
    CHECK(parse_algebra_name("R+so(3,1)").canonical() == parse_algebra_name("so(1,3)+R").canonical());
    CHECK(real_dimension(parse_algebra_name("sl(3,H)")) == 35);
    CHECK(real_dimension(parse_algebra_name("so*(10)")) == 45);
    CHECK(real_dimension(parse_algebra_name("e7(7)")) == 133);
    CHECK(real_dimension(parse_algebra_name("e6C")) == 156);
    CHECK(real_dimension(parse_algebra_name("gl(3,R)")) == 9);
    CHECK_THROWS_AS(parse_algebra_name("so(3"), Error);
    CHECK_THROWS_AS(parse_algebra_name("qq(2,R)"), Error);
}

TEST_CASE("classical realizations pass their own checks") {
    for (auto name : {"sl(2,R)", "sl(4,R)", "sl(3,C)", "sl(2,H)", "so(1,3)", "so(2,3)", "so(3,5)", "so(4,4)", "so(5,C)",
                      "so(6,C)", "so*(8)", "so*(6)", "sp(2,R)", "sp(2,C)", "sp(1,2)", "sp(2,2)", "su(1,3)", "su(2,2)"}) {
        CAPTURE(name);
        const Realization r = build_classical(name);
        CHECK(all_ok(verify_realization(r)));
        CHECK(r.algebra.dim() == static_cast<std::size_t>(real_dimension(parse_algebra_name(name))));
        CHECK(jacobi_violations(r.algebra) == 0);
        CHECK(is_automorphism(r.algebra, r.theta));
        CHECK(square(r.theta) == QMatrix::identity(r.algebra.dim()));
    }
}

TEST_CASE("realizations outside the supported sizes are rejected") {
    CHECK_THROWS_AS(build_classical("sl(9,R)"), Error);
    CHECK_THROWS_AS(build_classical("so(5,6)"), Error);
    CHECK_THROWS_AS(build_classical("so(3)"), Error);
}

TEST_CASE("Killing signatures") {
    CHECK(killing_signature(build_classical("sl(3,R)").algebra) == Signature{5, 0, 3});
    CHECK(killing_signature(build_classical("sl(2,R)").algebra) == Signature{2, 0, 1});
    CHECK(killing_signature(build_classical("so(1,3)").algebra) == Signature{3, 0, 3});
    CHECK(killing_signature(build_classical("sp(1,2)").algebra) == Signature{8, 0, 13});
    CHECK(killing_signature(build_classical("sl(2,H)").algebra) == Signature{5, 0, 10});
    // p q noncompact directions, the rest compact
    for (auto [p, q] : {std::pair{2, 3}, {3, 4}, {2, 6}}) {
        const auto s = killing_signature(build_classical("so(" + std::to_string(p) + "," + std::to_string(q) + ")").algebra);
        CHECK(s.plus == static_cast<std::size_t>(p * q));
        CHECK(s.zero == 0);
    }
}

TEST_CASE("restricted root multiplicities") {
    using M = std::vector<std::pair<Rational, std::size_t>>;
    for (int q = 3; q <= 6; ++q) {
        const auto rr = restricted_roots(build_classical("so(2," + std::to_string(q) + ")"));
        CHECK(rr.multiplicities() == M{{1, static_cast<std::size_t>(q - 2)}, {2, 1}});
    }
    CHECK(restricted_roots(build_classical("so(3,3)")).multiplicities() == M{{2, 1}});
    CHECK(restricted_roots(build_classical("sl(3,H)")).multiplicities() == M{{2, 4}});
    CHECK(restricted_roots(build_classical("sl(3,C)")).multiplicities() == M{{2, 2}});
    CHECK(restricted_roots(build_classical("sl(4,R)")).multiplicities() == M{{2, 1}});
    const auto su = restricted_roots(build_classical("su(1,3)")).multiplicities();
    REQUIRE(su.size() == 2);
    CHECK(su[0].second == 4);
    CHECK(su[1].second == 1);
    CHECK(su[1].first == 4 * su[0].first);
    // zero weight space is a + m
    const auto rr = restricted_roots(build_classical("so(2,5)"));
    CHECK(rr.spaces.front().weight.is_zero());
    CHECK(rr.spaces.front().basis.size() == 2 + 3);
}

TEST_CASE("tau at Y = 0 is theta") {
    const Realization r = build_classical("su(2,2)");
    const auto rr = restricted_roots(r);
    const Tau t = tau_endomorphism(r, rr, RationalVector(r.datum->ambient_dim));
    CHECK(t.re == r.theta);
    CHECK(t.im.is_zero_matrix());
    CHECK(t.is_involution());
}

TEST_CASE("tau at the short B_p vertex") {
    const Realization r = build_classical("so(3,5)");
    const auto rr = restricted_roots(r);
    const RationalVector y(std::vector<Rational>(3, Rational(1, 2)));
    const Tau t = tau_endomorphism(r, rr, y);
    const std::size_t d = r.algebra.dim();
    // tau does not preserve g, but it is still an involution of the complexification
    CHECK_FALSE(t.is_involution());
    CHECK_FALSE(t.im.is_zero_matrix());
    const auto t2 = complex_square({t.re, t.im});
    CHECK(t2.first == QMatrix::identity(d));
    CHECK(t2.second.is_zero_matrix());
    // sigma = tau o theta has eigenvalues +-i on the short root spaces
    const std::pair<QMatrix, QMatrix> sigma{t.re * r.theta, t.im * r.theta};
    const auto s2 = complex_square(sigma);
    const auto s4 = complex_square(s2);
    CHECK_FALSE((s2.first == QMatrix::identity(d) && s2.second.is_zero_matrix()));
    CHECK(s4.first == QMatrix::identity(d));
    CHECK(s4.second.is_zero_matrix());
    CHECK(is_closed(r.algebra, stabilizer_subalgebra(t)));
}

TEST_CASE("tau rejects points with non-half-integral spectrum") {
    const Realization r = build_classical("sl(3,R)");
    const auto rr = restricted_roots(r);
    CHECK_THROWS_AS(tau_endomorphism(r, rr, RationalVector({Rational(1, 3), 0, Rational(-1, 3)})), Error);
}

TEST_CASE("symmetric vertices give symmetric pairs") {
    const Realization r = build_classical("sp(3,R)");
    const auto rr = restricted_roots(r);
    for (const auto& o : extreme_orbits(make_crown(*r.datum)).orbits) {
        const Tau t = tau_endomorphism(r, rr, o.representative);
        REQUIRE(t.is_involution());
        const auto h = stabilizer_subalgebra(t);
        const auto q = minus_space(t);
        CHECK(h.size() + q.size() == r.algebra.dim());
        CHECK(symmetric_pair_relations(r.algebra, h, q));
        CHECK(fingerprint(subalgebra(r.algebra, h)) == candidate_algebra("gl(3,R)").fp);
    }
}

TEST_CASE("fingerprints of small algebras") {
    const auto so3 = candidate_algebra("so(3)").fp;
    CHECK(so3 == Fingerprint{3, 0, {0, 0, 3}, 3});
    const auto so11 = candidate_algebra("so(1,1)").fp;
    CHECK(so11 == Fingerprint{1, 1, {0, 1, 0}, 0});
    CHECK(candidate_algebra("R").fp == so11);
    const auto gl = candidate_algebra("gl(3,R)").fp;
    CHECK(gl.center_dim == 1);
    CHECK(gl.derived_dim == 8);
    CHECK(gl.killing == Signature{5, 1, 3});
    CHECK(candidate_algebra("so(1,3)").fp == candidate_algebra("sl(2,C)").fp);
    CHECK(candidate_algebra("so(2,4)").fp == candidate_algebra("su(2,2)").fp);
    CHECK(candidate_algebra("so*(6)").fp == candidate_algebra("su(1,3)").fp);
}

TEST_CASE("fingerprints are invariant under change of basis") {
    for (auto name : {"sl(2,R)", "su(1,2)", "gl(2,R)", "so(1,3)"}) {
        CAPTURE(name);
        const auto& g = candidate_algebra(name);
        for (int k = 0; k < 5; ++k) {
            const auto basis = dense_columns(random_invertible(g.algebra.dim()));
            const LieAlgebra moved = subalgebra(g.algebra, basis);
            CHECK(jacobi_violations(moved) == 0);
            CHECK(fingerprint(moved) == g.fp);
        }
    }
}

TEST_CASE("direct sums") {
    const auto& a = candidate_algebra("sl(2,R)");
    const auto& b = candidate_algebra("so(3)");
    const LieAlgebra s = direct_sum({&a.algebra, &b.algebra});
    CHECK(fingerprint(s) == Fingerprint{6, 0, {2, 0, 4}, 6});
    CHECK(candidate_algebra("sl(2,R)+so(3)").fp == fingerprint(s));
}

TEST_CASE("identification among isomorphic candidates") {
    const auto& so13 = candidate_algebra("so(1,3)");
    const auto id = identify_real_form(so13.algebra, {}, {"so(1,3)", "so(2,2)", "so(4)"});
    CHECK(id.name == "so(1,3)");
    CHECK_FALSE(id.ambiguous);
    const auto none = identify_real_form(so13.algebra, {}, {"so(2,2)", "so(4)"});
    CHECK_FALSE(none.matches.size());
    CHECK(none.name == "unidentified");
    const auto same = identify_real_form(so13.algebra, {}, {"so(1,3)", "so(3,1)"}, 1);
    CHECK(same.name == "so(3,1)");
    CHECK(same.matches.size() == 2);
    CHECK_FALSE(same.ambiguous);
    // isomorphic but different names, and no module to tell them apart
    const auto tie = identify_real_form(so13.algebra, {}, {"sl(2,C)", "so(1,3)"});
    CHECK(tie.ambiguous);
    CHECK(tie.matches.size() == 2);
    CHECK(tie.name == "unidentified");
}

TEST_CASE("classification of small examples") {
    CHECK(h_names(classify_boundary("sl(2,R)")) == std::vector<std::string>{"R"});
    CHECK(h_names(classify_boundary("so(1,4)")) == std::vector<std::string>{"so(1,3)"});
    CHECK(h_names(classify_boundary("so(2,5)")) == std::vector<std::string>{"so(1,4)+R"});
    CHECK(h_names(classify_boundary("sp(2,R)")) == std::vector<std::string>{"gl(2,R)"});
    CHECK(h_names(classify_boundary("su(2,2)")) == std::vector<std::string>{"sl(2,C)+R"});
    CHECK(h_names(classify_boundary("sl(3,R)")) == std::vector<std::string>{"so(1,2)", "so(2,1)"});
    const auto c = classify_boundary("so(3,4)");
    CHECK(h_names(c) == std::vector<std::string>{"so(1,2)+so(1,3)", "so(3,C)"});
    CHECK(c.components[0].symmetric);
    CHECK_FALSE(c.components[1].symmetric);
    CHECK(c.ok());
    const auto su = classify_boundary("su(2,3)");
    REQUIRE(su.components.size() == 1);
    CHECK_FALSE(su.components[0].symmetric);
    CHECK_FALSE(su.ok());
}

TEST_CASE("identified names come from the reference lookup on symmetric components") {
    for (auto name : {"sl(4,R)", "sl(2,H)", "sp(3,R)", "so(2,4)", "so(3,3)", "so*(8)", "sp(2,C)", "so(5,C)"}) {
        CAPTURE(name);
        const auto targets = lookup_causal_pairs(name);
        const auto c = classify_boundary(name);
        CHECK(c.ok());
        for (const auto& comp : c.components) {
            REQUIRE(comp.symmetric);
            const auto canon = parse_algebra_name(comp.h_name).canonical();
            bool found = false;
            for (const auto& t : targets) found = found || parse_algebra_name(t).canonical() == canon;
            CHECK(found);
        }
    }
}
