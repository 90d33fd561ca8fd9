#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace ezd;

TEST_CASE("field construction accepts primes and rejects composites") {
    CHECK(FieldSpec::gf(2).characteristic() == 2);
    CHECK(FieldSpec::gf(2147483647).characteristic() == 2147483647u);
    CHECK(FieldSpec::rationals().characteristic() == 0);
    CHECK_THROWS_AS(FieldSpec::gf(1), Error);
    CHECK_THROWS_AS(FieldSpec::gf(6), Error);
    CHECK_THROWS_AS(FieldSpec::gf(91), Error);  // 7 * 13
}

TEST_CASE("prime field arithmetic stays canonical") {
    FieldSpec f = FieldSpec::gf(7);
    Scalar a = Scalar::from_int(f, 5), b = Scalar::from_int(f, 4);
    CHECK((a + b).residue() == 2);
    CHECK((a * b).residue() == 6);
    CHECK((a - b).residue() == 1);
    CHECK((-a).residue() == 2);
    CHECK(Scalar::from_int(f, -3).residue() == 4);
    CHECK(Scalar::from_int(f, 14).residue() == 0);
    CHECK((a.inverse() * a).is_one());
    CHECK((a / b * b) == a);
    CHECK_THROWS_AS(Scalar::zero(f).inverse(), Error);
}

TEST_CASE("rational arithmetic is exact") {
    FieldSpec q = FieldSpec::rationals();
    Scalar third = Scalar::from_rational(Rational(1, 3));
    Scalar half = Scalar::from_rational(Rational(1, 2));
    CHECK((third + half).rational() == Rational(5, 6));
    CHECK((third * half).rational() == Rational(1, 6));
    CHECK(third.inverse().rational() == 3);
    Scalar sum = Scalar::zero(q);
    for (int i = 0; i < 3; ++i) sum += third;
    CHECK(sum.is_one());
    CHECK_THROWS_AS((third + Scalar::one(FieldSpec::gf(3))), Error);
}

TEST_CASE("monomial orders on hand-ranked lists") {
    // three variables, compared pairwise against hand-derived rankings
    Monomial x2y({2, 1, 0}), xz2({1, 0, 2}), y3({0, 3, 0}), xy({1, 1, 0}), z2({0, 0, 2});
    // grevlex: degree first, then the tie-break favoring smaller later exponents
    CHECK(monomial_less(xy, x2y, MonomialOrder::grevlex));
    CHECK(monomial_less(xz2, x2y, MonomialOrder::grevlex));    // z^2 loses to y
    CHECK(monomial_less(y3, x2y, MonomialOrder::grevlex));     // x^2y > y^3
    CHECK(monomial_less(z2, xy, MonomialOrder::grevlex));
    // lex ignores degree
    CHECK(monomial_less(y3, xy, MonomialOrder::lex));
    CHECK(monomial_less(z2, y3, MonomialOrder::lex));
    CHECK(monomial_less(xy, x2y, MonomialOrder::lex));
    // grlex: degree first, then lex
    CHECK(monomial_less(xz2, x2y, MonomialOrder::grlex));
    CHECK(monomial_less(y3, x2y, MonomialOrder::grlex));
    CHECK(monomial_less(y3, xz2, MonomialOrder::grlex));
    CHECK(monomial_compare(xy, xy, MonomialOrder::grevlex) == Ordering::equal);
}

TEST_CASE("monomial divisibility, lcm and quotient") {
    Monomial a({2, 1}), b({1, 1}), c({0, 3});
    CHECK(b.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(a.lcm(c).exponents() == std::vector<int>{2, 3});
    CHECK(b.quotient_into(a).exponents() == std::vector<int>{1, 0});
    CHECK(b.coprime(Monomial({0, 0})));
    CHECK_FALSE(a.coprime(c));
}

TEST_CASE("parser handles the full grammar") {
    FieldSpec f = FieldSpec::gf(7);
    std::vector<std::string> vars{"x1", "x2"};
    Polynomial p = parse_polynomial("x1^2 + 3*x1*x2 - 2", vars, f);
    CHECK(p.terms().size() == 3);
    CHECK(p.str(vars) == "x1^2 + 3*x1*x2 + 5");
    CHECK(parse_polynomial("-(x1 - x2)*x1", vars, f) ==
          parse_polynomial("x1*x2 - x1^2", vars, f));
    CHECK(parse_polynomial("0", vars, f).is_zero());
    CHECK(parse_polynomial("x1 - x1", vars, f).is_zero());
    // exponent binds to the factor
    CHECK(parse_polynomial("x1^2", vars, f) == parse_polynomial("x1*x1", vars, f));
}

TEST_CASE("parser rejects bad input with positions") {
    FieldSpec f = FieldSpec::gf(7);
    std::vector<std::string> vars{"x1", "x2"};
    CHECK_THROWS_AS(parse_polynomial("x1 x1", vars, f), Error);   // implicit product
    CHECK_THROWS_AS(parse_polynomial("x1 / x2", vars, f), Error);
    CHECK_THROWS_AS(parse_polynomial("y + 1", vars, f), Error);   // unknown variable
    CHECK_THROWS_AS(parse_polynomial("(x1 + x2", vars, f), Error);
    CHECK_THROWS_AS(parse_polynomial("", vars, f), Error);
    CHECK_THROWS_AS(parse_polynomial("x1^", vars, f), Error);
    try {
        parse_polynomial("x1 + @", vars, f);
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
        CHECK(std::string(e.what()).find("5") != std::string::npos);  // 0-based position 5
    }
}

TEST_CASE("render and reparse round trip") {
    std::mt19937 rng(12345);
    FieldSpec f = FieldSpec::gf(7);
    std::vector<std::string> vars{"x1", "x2", "x3"};
    for (int i = 0; i < 200; ++i) {
        Polynomial p = tu::random_poly(rng, f, 3, 4, 4);
        CHECK(parse_polynomial(p.str(vars), vars, f) == p);
    }
    FieldSpec q = FieldSpec::rationals();
    Polynomial r = parse_polynomial("x1^2 - 3*x2 + 1", vars, q);
    CHECK(parse_polynomial(r.str(vars), vars, q) == r);
}

TEST_CASE("polynomial arithmetic identities on fixed cases") {
    FieldSpec f = FieldSpec::gf(5);
    std::vector<std::string> vars{"x1", "x2"};
    Polynomial a = parse_polynomial("x1 + x2", vars, f);
    Polynomial b = parse_polynomial("x1 - x2", vars, f);
    CHECK(a * b == parse_polynomial("x1^2 - x2^2", vars, f));
    CHECK(a * a == parse_polynomial("x1^2 + 2*x1*x2 + x2^2", vars, f));
    CHECK((a - a).is_zero());
    CHECK(a.is_homogeneous());
    CHECK_FALSE(parse_polynomial("x1^2 + x2", vars, f).is_homogeneous());
    CHECK(a.degree() == 1);
    CHECK((a * b).degree() == 2);
}
