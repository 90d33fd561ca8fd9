#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace ezd;

TEST_CASE("complex dimensions and vanishing differential composition") {
    RingPtr r = tu::load("ex2_gf7.ring").ring;
    auto xs = tu::parse_elems(r, {"x1", "x2"});
    KoszulComplex cx = koszul_complex(r, xs);
    CHECK(cx.p() == 2);
    CHECK(cx.module_dim(0) == 4);
    CHECK(cx.module_dim(1) == 8);
    CHECK(cx.module_dim(2) == 4);
    // d1 . d2 = 0 (also verified internally at construction)
    Matrix comp = cx.diff[1] * cx.diff[2];
    CHECK(comp.is_zero());
}

TEST_CASE("one-element complex: homology is the quotient and the annihilator") {
    RingPtr r = tu::load("ex2_gf7.ring").ring;
    KoszulComplex cx = koszul_complex(r, {r->variable(0)});
    HomologyModule h0 = homology(cx, 0);
    // H0 = R/(x1), length 2, free of rank 1 over itself
    CHECK(h0.length == 2);
    CHECK(h0.quotient_len == 2);
    CHECK(h0.free_of_expected_rank());
    // H1 = (0:x1) = (x2), also length 2 and free of rank 1 over R/(x1)
    HomologyModule h1 = homology(cx, 1);
    CHECK(h1.length == 2);
    CHECK(h1.mu == 1);
    CHECK(h1.free_of_expected_rank());
}

TEST_CASE("non-zero-divisor style failure: annihilator too small to be free") {
    RingPtr r = tu::load("nc1_gf7.ring").ring;  // x1 has non-principal annihilator
    KoszulComplex cx = koszul_complex(r, {r->variable(0)});
    HomologyModule h1 = homology(cx, 1);
    // (0:x1) = m has length 3 and mu = 2, but R/(x1) has length 3: 3 != 2*3
    CHECK(h1.length == 3);
    CHECK(h1.mu == 2);
    CHECK_FALSE(h1.free);
    T2Report rep = t2_check(r, {r->variable(0)});
    CHECK_FALSE(rep.koszul_verdict);
    CHECK_FALSE(rep.sequential_verdict);
    CHECK(rep.agree);
}

TEST_CASE("rank-and-freeness criterion agrees with the sequential test") {
    RingPtr ex2 = tu::load("ex2_gf7.ring").ring;
    T2Report good = t2_check(ex2, tu::parse_elems(ex2, {"x1", "x2"}));
    CHECK(good.koszul_verdict);
    CHECK(good.sequential_verdict);
    CHECK(good.agree);
    for (auto& entry : good.prefixes) {
        CHECK(entry.ok);
        for (auto& h : entry.homology) CHECK(h.free_of_expected_rank());
    }

    RingPtr ex1 = tu::load("ex1_gf7.ring").ring;
    T2Report pass = t2_check(ex1, tu::parse_elems(ex1, {"x1", "x2", "x3"}));
    CHECK(pass.koszul_verdict);
    CHECK(pass.agree);
    T2Report fail = t2_check(ex1, tu::parse_elems(ex1, {"x2", "x1", "x3"}));
    CHECK_FALSE(fail.koszul_verdict);
    CHECK(fail.agree);
}

TEST_CASE("membership condition: repeating an element breaks the criterion") {
    RingPtr r = tu::load("diag2_gf7.ring").ring;
    T2Report rep = t2_check(r, tu::parse_elems(r, {"x1", "x1"}));
    CHECK_FALSE(rep.prefixes[1].membership_ok);
    CHECK_FALSE(rep.koszul_verdict);
    CHECK(rep.agree);  // the sequential test also rejects x1 on R/(x1)
}

TEST_CASE("guards and preconditions") {
    RingPtr r = tu::load("diag2_gf7.ring").ring;
    std::vector<RingElement> too_long(5, r->variable(0));
    CHECK_THROWS_AS(t2_check(r, too_long), Error);
    try {
        t2_check(r, too_long);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLong);
        CHECK(e.is_guard());
    }
    CHECK_THROWS_AS(t2_check(r, {}), Error);
    KoszulComplex cx = koszul_complex(r, {r->variable(0)});
    CHECK_THROWS_AS(homology(cx, 5), Error);
}

TEST_CASE("binomial bookkeeping for expected ranks") {
    RingPtr r = tu::load("diag3_gf7.ring").ring;
    auto xs = tu::parse_elems(r, {"x1", "x2", "x3"});
    T2Report rep = t2_check(r, xs);
    CHECK(rep.koszul_verdict);
    REQUIRE(rep.prefixes.size() == 3);
    const auto& h = rep.prefixes[2].homology;
    REQUIRE(h.size() == 4);
    CHECK(h[0].rank_expected == 1);
    CHECK(h[1].rank_expected == 3);
    CHECK(h[2].rank_expected == 3);
    CHECK(h[3].rank_expected == 1);
}
