#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace ezd;

TEST_CASE("quadric ring classification, fully hand-derived") {
    ClassifyReport c = classify(tu::load("ex2_gf7.ring").ring);
    CHECK(c.length == 4);
    CHECK(c.hilbert_function == std::vector<std::size_t>{1, 2, 1});
    CHECK(c.socle_dim == 1);
    CHECK(c.gorenstein);
    CHECK(c.graded);
    CHECK(c.ci_status == CiStatus::computed);
    CHECK(c.mu_ideal == 2);
    CHECK(c.generator_degrees == std::vector<int>{2});
    CHECK(c.ci);
    CHECK(c.quadratic);
    CHECK(c.koszul_ci);
    CHECK(c.e == 4);
    CHECK(c.log2_bound == 2);
}

TEST_CASE("non-complete-intersection rings are recognized") {
    // (x1^2, x1*x2, x2^3): three minimal generators in two variables
    ClassifyReport c = classify(tu::load("nc1_gf7.ring").ring);
    CHECK(c.hilbert_function == std::vector<std::size_t>{1, 2, 1});
    CHECK(c.mu_ideal == 3);
    CHECK(c.generator_degrees == std::vector<int>{2, 3});
    CHECK_FALSE(c.ci);
    CHECK_FALSE(c.koszul_ci);
    CHECK_FALSE(c.gorenstein);  // socle contains x1 and x2^2

    ClassifyReport g = classify(tu::load("nc2_gf7.ring").ring);
    CHECK(g.hilbert_function == std::vector<std::size_t>{1, 3, 1});
    CHECK(g.gorenstein);
    CHECK(g.mu_ideal == 5);
    CHECK_FALSE(g.ci);
}

TEST_CASE("complete intersection with a non-quadratic generator") {
    ClassifyReport c = classify(tu::load("x4diag_gf7.ring").ring);  // (x1^2, x2^4)
    CHECK(c.length == 8);
    CHECK(c.ci);
    CHECK(c.generator_degrees == std::vector<int>{2, 4});
    CHECK_FALSE(c.quadratic);
    CHECK_FALSE(c.koszul_ci);
    CHECK(c.gorenstein);
}

TEST_CASE("three-variable diagonal ring is a Koszul complete intersection") {
    ClassifyReport c = classify(tu::load("diag3_gf7.ring").ring);
    CHECK(c.length == 8);
    CHECK(c.hilbert_function == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(c.mu_ideal == 3);
    CHECK(c.koszul_ci);
    CHECK(c.log2_bound == 3);
}

TEST_CASE("ungraded and non-minimally-embedded presentations are flagged") {
    ClassifyReport ng = classify(tu::load("ngrad_gf7.ring").ring);
    CHECK_FALSE(ng.graded);
    CHECK(ng.ci_status == CiStatus::not_graded);
    // a linear generator means the embedding is not minimal
    FieldSpec f = FieldSpec::gf(7);
    std::vector<std::string> vars{"x1", "x2"};
    std::vector<Polynomial> gens{parse_polynomial("x1 - x2", vars, f),
                                 parse_polynomial("x2^2", vars, f)};
    RingPtr r = build_ring(f, vars, gens, MonomialOrder::grevlex);
    ClassifyReport c = classify(r);
    CHECK(c.ci_status == CiStatus::not_minimally_embedded);
    CHECK(c.length == 2);  // structural invariants still computed
}

TEST_CASE("substituted quotient eliminates one variable per linear form") {
    RingPtr r = tu::load("ex2_gf7.ring").ring;
    // R/(x1 + x2) = K[x2]/(x2^2): length 2
    auto q = substituted_quotient(r, {tu::parse_elem(r, "x1 + x2")});
    REQUIRE(q.has_value());
    CHECK((*q)->length() == 2);
    CHECK((*q)->nvars() == 1);
    // quotient length matches the subspace computation
    CHECK((*q)->length() ==
          r->length() - ideal_of(r, {tu::parse_elem(r, "x1 + x2")}).space.dim());
    // dividing by a full system of variables leaves the field
    CHECK_FALSE(substituted_quotient(r, tu::parse_elems(r, {"x1", "x2"})).has_value());
    CHECK_THROWS_AS(substituted_quotient(r, {tu::parse_elem(r, "x1^2")}), Error);
}

TEST_CASE("prefix-quotient complete-intersection criterion tracks the sequence test") {
    RingPtr ex2 = tu::load("ex2_gf7.ring").ring;
    T5Report good = t5_check(ex2, tu::parse_elems(ex2, {"x1", "x2"}));
    CHECK(good.applicable);
    CHECK(good.all_ci);
    CHECK(good.sequential_verdict);
    CHECK(good.consistent);
    REQUIRE(good.quotient_ci.size() == 3);
    for (bool b : good.quotient_ci) CHECK(b);

    RingPtr nc = tu::load("nc1_gf7.ring").ring;
    T5Report bad = t5_check(nc, tu::parse_elems(nc, {"x1", "x2"}));
    CHECK(bad.applicable);
    CHECK_FALSE(bad.all_ci);           // R itself is not a complete intersection
    CHECK_FALSE(bad.sequential_verdict);
    CHECK(bad.consistent);

    // both arguments must minimally generate the maximal ideal
    CHECK_THROWS_AS(t5_check(ex2, tu::parse_elems(ex2, {"x1", "x1"})), Error);
    CHECK_THROWS_AS(t5_check(ex2, {ex2->variable(0)}), Error);
}

TEST_CASE("socle-degree-length criterion on the diagonal ring") {
    RingPtr r = tu::load("diag2_gf7.ring").ring;
    auto xs = tu::parse_elems(r, {"x1", "x2"});
    StrongC13Report c13 = strong_test_c13(r, xs, sequence_test(r, xs).twins);
    REQUIRE(c13.verdict);
    C21Report rep = c21_check(r, xs, c13.adjusted_twins);
    CHECK(rep.applicable);  // n = 2 = socle degree
    CHECK(rep.generates_m);
    CHECK(rep.ci);
    CHECK(rep.ok);
    for (bool b : rep.twin_outside_m2) CHECK(b);

    // not applicable when the sequence is shorter than the socle degree
    RingPtr big = tu::load("diag3_gf7.ring").ring;
    auto ys = tu::parse_elems(big, {"x1"});
    StrongC13Report one = strong_test_c13(big, ys, sequence_test(big, ys).twins);
    C21Report na = c21_check(big, ys, one.adjusted_twins);
    CHECK_FALSE(na.applicable);
}

TEST_CASE("socle-degree-2 search equivalence across the graded corpus") {
    std::size_t kci = 0, non_kci = 0;
    for (auto name : {"ex2_gf7.ring", "diag2_gf7.ring", "twist2_gf7.ring", "nc1_gf7.ring",
                      "nc2_gf7.ring", "nc3_gf7.ring"}) {
        RingPtr r = tu::load(name).ring;
        P15Report rep = p15_check(r);
        CHECK(rep.socle_degree == 2);
        REQUIRE(rep.part_i_equivalence.has_value());
        CHECK(*rep.part_i_equivalence);
        if (rep.koszul_ci)
            ++kci;
        else
            ++non_kci;
        if (rep.search_found) {
            CHECK(rep.part_ii_ok.has_value());
            CHECK(*rep.part_ii_ok);
            SequenceReport seq = sequence_test(r, rep.witness);
            CHECK(seq.is_sequence);
            CHECK(seq.minimal);
        }
    }
    CHECK(kci >= 2);
    CHECK(non_kci >= 2);
    CHECK_THROWS_AS(p15_check(tu::load("ngrad_gf7.ring").ring), Error);
}

TEST_CASE("socle-degree-3 reports stay evidence-only") {
    P15Report rep = p15_check(tu::load("diag3_gf7.ring").ring);
    CHECK(rep.socle_degree == 3);
    CHECK(rep.evidence_only);
    CHECK_FALSE(rep.part_i_equivalence.has_value());
    CHECK(rep.search_found);  // (x1, x2, x3) works here
}
