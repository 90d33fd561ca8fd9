#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace ezd;

namespace {

RingPtr quadric_ring() {  // GF(7)[x1,x2]/(x1^2 + x2^2, x1*x2), length 4
    return tu::load("ex2_gf7.ring").ring;
}

}  // namespace

TEST_CASE("quadric ring structure, derived by hand") {
    RingPtr r = quadric_ring();
    CHECK(r->length() == 4);
    CHECK(r->socle_degree == 2);
    // staircase ascending: 1, x2, x1, x2^2
    std::vector<std::string> names;
    for (auto& m : r->basis)
        names.push_back(Polynomial::term(r->field, m, Scalar::one(r->field), r->order)
                            .str(r->var_names));
    CHECK(names == std::vector<std::string>{"1", "x2", "x1", "x2^2"});
    // filtration dims 4 > 3 > 1 > 0
    REQUIRE(r->filtration.size() == 4);
    CHECK(r->filtration[0].dim() == 4);
    CHECK(r->filtration[1].dim() == 3);
    CHECK(r->filtration[2].dim() == 1);
    CHECK(r->filtration[3].dim() == 0);
}

TEST_CASE("multiplication matrices act as hand-computed") {
    RingPtr r = quadric_ring();
    RingElement x1 = r->variable(0), x2 = r->variable(1), one = r->one();
    // x1*x1 = -x2^2, x1*x2 = 0, x2*x2 = x2^2, x2*x2^2 = 0
    RingElement x2sq = tu::parse_elem(r, "x2^2");
    CHECK(x1 * x1 == r->scale(x2sq, -Scalar::one(r->field)));
    CHECK((x1 * x2).is_zero());
    CHECK(x2 * x2 == x2sq);
    CHECK((x2 * x2sq).is_zero());
    CHECK(x1 * one == x1);
    CHECK((x1 + x2) * (x1 + x2) == r->zero());  // x1^2 + 2x1x2 + x2^2 = 0
}

TEST_CASE("unit detection and element round trips") {
    RingPtr r = quadric_ring();
    CHECK(r->is_unit(r->one()));
    CHECK(r->is_unit(tu::parse_elem(r, "3 + x1")));
    CHECK_FALSE(r->is_unit(r->variable(0)));
    CHECK_FALSE(r->is_unit(r->zero()));
    for (auto src : {"x1 + 2*x2", "x1^2 + x1 + 1", "x2^2 - 3"}) {
        RingElement e = tu::parse_elem(r, src);
        CHECK(r->element(r->to_polynomial(e)) == e);
    }
}

TEST_CASE("rendering normalizes the first nonzero coordinate to one") {
    RingPtr r = quadric_ring();
    RingElement e = r->scale(tu::parse_elem(r, "x2 + 3*x1"), Scalar::from_int(r->field, 5));
    // first nonzero coordinate in basis order (1, x2, x1, x2^2) is the x2 slot
    CHECK(r->render_normalized(e) == "3*x1 + x2");
    CHECK(r->render_normalized(r->zero()) == "0");
    CHECK(r->render_normalized(r->scale(r->one(), Scalar::from_int(r->field, 4))) == "1");
    // the rendered string re-parses to the same element up to the unit used
    RingElement back = tu::parse_elem(r, r->render_normalized(e));
    CHECK(r->render_normalized(back) == r->render_normalized(e));
}

TEST_CASE("build rejects non-artinian and non-local presentations") {
    FieldSpec f = FieldSpec::gf(7);
    std::vector<std::string> v2{"x1", "x2"}, v1{"x1"};
    auto build = [&](const std::vector<std::string>& vars, std::vector<std::string> srcs) {
        std::vector<Polynomial> gens;
        for (auto& s : srcs) gens.push_back(parse_polynomial(s, vars, f));
        return build_ring(f, vars, gens, MonomialOrder::grevlex);
    };
    CHECK_THROWS_AS(build(v2, {"x1^2", "x1*x2"}), Error);  // positive-dimensional
    CHECK_THROWS_AS(build(v1, {"x1^2 - x1"}), Error);      // idempotent: not local
    CHECK_THROWS_AS(build(v1, {"x1 - 1"}), Error);         // unit ideal
    try {
        build(v2, {"x1^2", "x1*x2"});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotZeroDimensional);
    }
    try {
        build(v1, {"x1^2 - x1"});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotLocal);
    }
}

TEST_CASE("quotient data models R/(x1) of the quadric ring") {
    RingPtr r = quadric_ring();
    Subspace j = ideal_of(r, {r->variable(0)}).space;  // (x1) = span{x1, x2^2}
    CHECK(j.dim() == 2);
    QuotientData q = quotient(r, j);
    CHECK(q.length == 2);
    // x2 acts nilpotently on the quotient: x2^2 = 0 there
    Vector x2bar = q.project(r->variable(1).coords);
    Vector sq = q.mult[1].apply(q.mult[1].apply(q.project(r->one().coords)));
    CHECK(Subspace::span_of(r->field, 2, {sq}).dim() == 0);
    // lift then project is the identity on quotient coordinates
    CHECK(q.project(q.lift(x2bar)) == x2bar);
}

TEST_CASE("apolar ring of a monomial equals the pure-power quotient") {
    FieldSpec f = FieldSpec::gf(7);
    std::vector<std::string> vars{"x1", "x2", "x3"};
    Polynomial form = parse_polynomial("x1*x2*x3", vars, f);
    RingPtr apolar = inverse_system_ring(f, vars, form);
    RingPtr direct = tu::load("invsys_xyz_gf7.ring").ring;  // (x1^2, x2^2, x3^2)
    CHECK(apolar->length() == 8);
    CHECK(apolar->length() == direct->length());
    std::vector<std::string> a, b;
    for (auto& g : apolar->gb.generators) a.push_back(g.str(vars));
    for (auto& g : direct->gb.generators) b.push_back(g.str(vars));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(socle(apolar).dim() == 1);  // Gorenstein, as apolar rings always are
}

TEST_CASE("apolar ring of a quartic monomial") {
    FieldSpec f = FieldSpec::gf(7);
    std::vector<std::string> vars{"x1", "x2"};
    RingPtr r = inverse_system_ring(f, vars, parse_polynomial("x1^3*x2", vars, f));
    // annihilator of x1^3*x2 under contraction is (x1^4, x2^2): length 8
    CHECK(r->length() == 8);
    CHECK(socle(r).dim() == 1);
    CHECK(r->socle_degree == 4);
    CHECK_THROWS_AS(
        inverse_system_ring(f, vars, Polynomial::zero(f, 2, MonomialOrder::grevlex)), Error);
}

TEST_CASE("rational-coefficient ring behaves like its finite-field sibling") {
    RingPtr r = tu::load("qq_ex2.ring").ring;
    CHECK(r->length() == 4);
    CHECK(r->socle_degree == 2);
    RingElement x1 = r->variable(0), x2 = r->variable(1);
    CHECK((x1 * x2).is_zero());
    CHECK(x1 * x1 == r->scale(tu::parse_elem(r, "x2^2"), -Scalar::one(r->field)));
}
