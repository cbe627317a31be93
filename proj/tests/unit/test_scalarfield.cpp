#include <doctest.h>

#include "comrade/errors.hpp"
#include "comrade/polynomial.hpp"
#include "comrade/rational.hpp"
#include "comrade/rational_function.hpp"
#include "comrade/scalar.hpp"
#include "test_support.hpp"

using namespace comrade;
using namespace comrade::testing;

TEST_CASE("rational literals") {
    CHECK(q("-3/2").str() == "-3/2");
    CHECK(q("10/2").str() == "5");
    CHECK(q("-0/7").str() == "0");
    CHECK_THROWS_AS(Rational::parse("4/-2"), ParseError);
    CHECK(q("6/4") == Rational(3, 2));
}

TEST_CASE("rational literal errors") {
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse(" 1"), ParseError);
    CHECK_THROWS_AS(Rational::parse("+1"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational round trip through text") {
    Gen gen(11);
    for (int k = 0; k < 200; ++k) {
        const Rational r = gen.rational() * gen.rational() - gen.rational();
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("doubles embed exactly") {
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(Rational::from_double(-2.0).str() == "-2");
    CHECK(Rational::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("polynomial canonical storage") {
    CHECK(Polynomial(qs({"1", "0", "0"})) == poly({"1"}));
    CHECK(Polynomial(qs({"0", "0"})).is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(poly({"-6", "7"}).degree() == 1);
    CHECK(poly({"-6", "7"}).str() == "7*t - 6");
    CHECK(poly({"0", "0", "-1"}).str() == "-t^2");
}

TEST_CASE("poly_gcd examples") {
    // t^2 - 1 = (t - 1)(t + 1)
    CHECK(poly_gcd(poly({"-1", "0", "1"}), poly({"-1", "1"})) == poly({"-1", "1"}));
    CHECK(poly_gcd(poly({"-6", "7"}), poly({"1"})) == poly({"1"}));
    // 2t^2 + 4t = 2t(t + 2); monic gcd with 2t is t
    CHECK(poly_gcd(poly({"0", "4", "2"}), poly({"0", "2"})) == poly({"0", "1"}));
    CHECK(poly_gcd(Polynomial(), poly({"0", "3"})) == poly({"0", "1"}));
    CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), DomainError);
}

TEST_CASE("poly_gcd divides both arguments") {
    Gen gen(5);
    for (int k = 0; k < 500; ++k) {
        const Polynomial common = gen.polynomial(2);
        const Polynomial p = gen.polynomial(3) * common;
        const Polynomial r = gen.polynomial(3) * common;
        if (p.is_zero() && r.is_zero()) {
            continue;
        }
        const Polynomial g = poly_gcd(p, r);
        CHECK(g.leading() == Rational(1));
        CHECK(divmod(p, g).second.is_zero());
        CHECK(divmod(r, g).second.is_zero());
        if (!common.is_zero()) {
            CHECK(g.degree() >= common.degree());
        }
    }
}

TEST_CASE("divmod reconstructs the dividend") {
    Gen gen(9);
    for (int k = 0; k < 300; ++k) {
        const Polynomial a = gen.polynomial(5);
        Polynomial b;
        while (b.is_zero()) {
            b = gen.polynomial(3);
        }
        const auto [quot, rem] = divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
}

TEST_CASE("rf_arith examples") {
    const RationalFunction t = RationalFunction::t();
    // (-1) - (2 * 1) / t = -(t + 2)/t
    CHECK(RationalFunction(-1) - RationalFunction(2) * RationalFunction(1) / t == rf({"-2", "-1"}, {"0", "1"}));
    // 1 - 15 * (-t/(t+2)) = 2(8t + 1)/(t + 2)
    CHECK(RationalFunction(1) - RationalFunction(15) * rf({"0", "-1"}, {"2", "1"}) == rf({"2", "16"}, {"2", "1"}));
    const RationalFunction x = rf({"1", "3"}, {"-1", "0", "2"});
    CHECK(x + RationalFunction() == x);
    CHECK_THROWS_AS(x / RationalFunction(), DomainError);
}

TEST_CASE("rational function canonical form") {
    // (2t^2 + 4t) / (2t) reduces to t + 2 over 1
    const RationalFunction f = rf({"0", "4", "2"}, {"0", "2"});
    CHECK(f.num() == poly({"2", "1"}));
    CHECK(f.den() == poly({"1"}));
    // scalar factor moves to the numerator: 3 / (2t) = (3/2) / t
    const RationalFunction g = rf({"3"}, {"0", "2"});
    CHECK(g.num() == poly({"3/2"}));
    CHECK(g.den() == poly({"0", "1"}));
    // zero is 0/1 whatever the input denominator
    const RationalFunction z = rf({"0"}, {"5", "1"});
    CHECK(z.num().is_zero());
    CHECK(z.den() == poly({"1"}));
    CHECK_THROWS_AS(RationalFunction(poly({"1"}), Polynomial()), DomainError);
}

TEST_CASE("rf_eval_at_zero") {
    CHECK(eval_at_zero(rf({"7"}, {"-6", "7"})) == Rational(-7, 6));
    CHECK(eval_at_zero(RationalFunction(5)) == Rational(5));
    // -4(7t - 6) at t = 0
    CHECK(eval_at_zero(rf({"24", "-28"})) == Rational(24));
    CHECK_THROWS_AS(eval_at_zero(rf({"1"}, {"0", "1"})), PoleAtZeroError);
    // (t^2 + t)/t reduces to t + 1 first, so no pole
    CHECK(eval_at_zero(rf({"0", "1", "1"}, {"0", "1"})) == Rational(1));
}

TEST_CASE("mode names") {
    CHECK(parse_mode("exact") == ScalarMode::exact);
    CHECK(parse_mode("symbolic") == ScalarMode::symbolic);
    CHECK(parse_mode("float") == ScalarMode::floating);
    CHECK(to_string(ScalarMode::floating) == "float");
    CHECK_THROWS_AS(parse_mode("fast"), ParseError);
}

TEST_CASE("float zero test is exact equality") {
    CHECK(field_traits<double>::is_zero(0.0));
    CHECK(field_traits<double>::is_zero(-0.0));
    CHECK_FALSE(field_traits<double>::is_zero(1e-300));
    CHECK_FALSE(field_traits<RationalFunction>::is_zero(RationalFunction::t()));
}

#include "properties.hpp"

TEST_CASE("rational function field laws on random inputs") {
    const auto report = check_rational_function_laws(2024, 2000);
    CHECK(report.cases == 2000);
    for (const auto& f : report.failures) {
        FAIL_CHECK(f);
    }
}

TEST_CASE("canonical form is unique") {
    Gen gen(77);
    for (int k = 0; k < 300; ++k) {
        const RationalFunction f = gen.function();
        Polynomial scale;
        while (scale.is_zero()) {
            scale = gen.polynomial(2);
        }
        // multiplying numerator and denominator by the same factor changes nothing
        CHECK(RationalFunction(f.num() * scale, f.den() * scale) == f);
        CHECK(is_canonical(f));
    }
}
