#include "support.hpp"

#include "qzeta/enclosure.hpp"
#include "qzeta/error.hpp"
#include "qzeta/multipoly.hpp"
#include "qzeta/rational.hpp"
#include "qzeta/rational_function.hpp"

#include <doctest.h>

using namespace qzeta;

namespace {

MultiPoly X() { return MultiPoly::variable(Var::X); }
MultiPoly Y() { return MultiPoly::variable(Var::Y); }
MultiPoly Q() { return MultiPoly::variable(Var::Q); }
MultiPoly D() { return X() + Y() + (Q() - MultiPoly(1)) * X() * Y(); }

MultiPoly random_poly(std::mt19937_64& g, int terms, unsigned max_degree)
{
    MultiPoly p;
    for (int i = 0; i < terms; ++i) {
        const Monomial m{static_cast<unsigned>(oracle::uniform(g, 0, max_degree)),
                         static_cast<unsigned>(oracle::uniform(g, 0, max_degree)),
                         static_cast<unsigned>(oracle::uniform(g, 0, max_degree))};
        p += MultiPoly::monomial(oracle::random_rational(g, 9, 4), m);
    }
    return p;
}

MultiPoly random_nonzero_poly(std::mt19937_64& g, int terms, unsigned max_degree)
{
    MultiPoly p;
    while (p.is_zero()) {
        p = random_poly(g, terms, max_degree);
    }
    return p;
}

RationalFunction random_rf(std::mt19937_64& g)
{
    return RationalFunction(random_poly(g, 3, 2), random_nonzero_poly(g, 2, 1) * random_nonzero_poly(g, 2, 1));
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-0.125") == Rational(-1, 8));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse("7/-3"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), DomainError);
    CHECK_THROWS_AS(Rational::parse("0.5e3"), DomainError);
    CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
}

TEST_CASE("rational canonical form and helpers")
{
    const Rational r(Integer(10), Integer(-4));
    CHECK(r.numerator() == -5);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-5/2");
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(1, 3).to_decimal(5) == "0.33333");
    CHECK(Rational(2, 3).to_decimal(3) == "0.667");
    CHECK(Rational(-2, 3).to_decimal(3) == "-0.667");
    CHECK(Rational(1, 1000).floor_log2() == -10);
    CHECK(factorial(5) == 120);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(2, 6) == 0);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("property: rational parse and print round-trip")
{
    auto g = oracle::rng(1);
    for (int i = 0; i < 500; ++i) {
        const Rational r = oracle::random_rational(g, 1L << 40, 1L << 30);
        CHECK(Rational::parse(r.str()) == r);
        CHECK(gcd(r.numerator(), r.denominator()) == 1);
        CHECK(r.denominator() > 0);
    }
}

TEST_CASE("property: rational field axioms")
{
    auto g = oracle::rng(2);
    for (int i = 0; i < 300; ++i) {
        const Rational a = oracle::random_rational(g);
        const Rational b = oracle::random_rational(g);
        const Rational c = oracle::random_rational(g);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("enclosure basics")
{
    CHECK_THROWS_AS(Enclosure(Rational(1), Rational(0)), DomainError);
    const Enclosure e(Rational(-1, 2), Rational(3, 4));
    CHECK(e.width() == Rational(5, 4));
    CHECK(e.contains(Rational(0)));
    CHECK_FALSE(e.contains(Rational(1)));
    CHECK(e.magnitude() == Rational(3, 4));
    CHECK((e * Rational(-2)) == Enclosure(Rational(-3, 2), Rational(1)));
    const Enclosure r = Enclosure(Rational(1, 3), Rational(2, 3)).rounded_outward(4);
    CHECK(r.contains(Enclosure(Rational(1, 3), Rational(2, 3))));
    CHECK(r.lo().denominator() <= 16);
    CHECK(r.width() <= Rational(1, 3) + Rational(2, 16));
}

TEST_CASE("property: enclosure arithmetic contains pointwise results")
{
    auto g = oracle::rng(3);
    const auto random_enclosure = [&] {
        const Rational a = oracle::random_rational(g, 1000, 97);
        const Rational b = oracle::random_rational(g, 1000, 97);
        return Enclosure(min(a, b), max(a, b));
    };
    const auto sample = [&](const Enclosure& e) {
        const long k = oracle::uniform(g, 0, 64);
        return e.lo() + e.width() * Rational(k, 64);
    };
    for (int i = 0; i < 400; ++i) {
        const Enclosure e1 = random_enclosure();
        const Enclosure e2 = random_enclosure();
        for (int j = 0; j < 5; ++j) {
            const Rational u = sample(e1);
            const Rational v = sample(e2);
            CHECK((e1 + e2).contains(u + v));
            CHECK((e1 - e2).contains(u - v));
            CHECK((e1 * e2).contains(u * v));
            const Rational c = oracle::random_rational(g, 50, 7);
            CHECK((e1 * c).contains(u * c));
        }
    }
}

TEST_CASE("multipoly canonical form")
{
    const MultiPoly p = X() * Y() - Y() * X();
    CHECK(p.is_zero());
    CHECK(p.size() == 0);
    const MultiPoly r = (X() + Y()).pow(3);
    CHECK(r.size() == 4);
    CHECK(r.degree(Var::X) == 3);
    CHECK(r.evaluate(Rational(1), Rational(2), Rational(0)) == Rational(27));
    for (const auto& [m, c] : r.terms()) {
        CHECK_FALSE(c.is_zero());
    }
    CHECK((X() * X() * Q()).diff(Var::X) == MultiPoly(2) * X() * Q());
    CHECK(D().substitute(Var::Q, Rational(1)) == X() + Y());
    CHECK(D().substitute(Var::Y, Y() - X()).substitute(Var::Q, Rational(1)) == Y());
    CHECK((X() + MultiPoly(Rational(-1, 2))).str() == "X - 1/2");
}

TEST_CASE("property: multipoly ring axioms")
{
    auto g = oracle::rng(4);
    for (int i = 0; i < 150; ++i) {
        const MultiPoly a = random_poly(g, 4, 3);
        const MultiPoly b = random_poly(g, 4, 3);
        const MultiPoly c = random_poly(g, 4, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        CHECK(a * MultiPoly(1) == a);
        const Rational x = oracle::random_rational(g, 20, 7);
        const Rational y = oracle::random_rational(g, 20, 7);
        const Rational q = oracle::random_rational(g, 20, 7);
        CHECK((a * b).evaluate(x, y, q) == a.evaluate(x, y, q) * b.evaluate(x, y, q));
        // product rule
        CHECK((a * b).diff(Var::Y) == a.diff(Var::Y) * b + a * b.diff(Var::Y));
    }
}

TEST_CASE("poly_diff examples")
{
    const RationalFunction inv_xy(MultiPoly(1), X() * Y());
    CHECK(rf_equal(poly_diff(inv_xy, Var::X), RationalFunction(MultiPoly(-1), X() * X() * Y())));
    CHECK(rf_equal(poly_diff(RationalFunction(X() + Y()), Var::X), RationalFunction(1)));

    const RationalFunction inv_d(MultiPoly(1), D());
    const RationalFunction got = poly_diff(inv_d, Var::Y);
    const MultiPoly expected_num = -(MultiPoly(1) + (Q() - MultiPoly(1)) * X());
    // multiply back: got * D^2 must be the expected numerator
    CHECK(got.clear_denominators({Factor{D(), 2}}) == expected_num);
}

TEST_CASE("rf_equal examples")
{
    CHECK(rf_equal(RationalFunction(MultiPoly(1), X() * Y()), RationalFunction(Y(), X() * Y() * Y())));
    CHECK_FALSE(rf_equal(RationalFunction(MultiPoly(1), X()), RationalFunction(MultiPoly(1), Y())));

    const RationalFunction lhs(MultiPoly(1), X() * Y());
    const RationalFunction rhs = (RationalFunction(MultiPoly(1), X()) + RationalFunction(MultiPoly(1), Y())
                                  + RationalFunction(Q() - MultiPoly(1)))
        / RationalFunction(D());
    CHECK(rf_equal(lhs, rhs));
    CHECK_FALSE(rf_equal(lhs, rhs + RationalFunction(Rational(1, 1000))));
}

TEST_CASE("rational function construction errors")
{
    CHECK_THROWS_AS(RationalFunction(MultiPoly(1), MultiPoly()), DomainError);
    CHECK_THROWS_AS(RationalFunction(1) / RationalFunction(0), DomainError);
    const RationalFunction f(MultiPoly(1), X() * X());
    CHECK_THROWS_AS(f.clear_denominators({Factor{X(), 1}}), DomainError);
    CHECK_THROWS_AS(f.evaluate(Rational(0), Rational(1), Rational(1)), DomainError);
    CHECK(f.evaluate(Rational(2), Rational(1), Rational(1)) == Rational(1, 4));
}

TEST_CASE("property: mixed partials commute")
{
    auto g = oracle::rng(5);
    for (int i = 0; i < 60; ++i) {
        const RationalFunction f = random_rf(g);
        CHECK(rf_equal(poly_diff(poly_diff(f, Var::X), Var::Y), poly_diff(poly_diff(f, Var::Y), Var::X)));
    }
}

TEST_CASE("property: rf_equal is an equivalence and a congruence")
{
    auto g = oracle::rng(6);
    for (int i = 0; i < 60; ++i) {
        const MultiPoly num = random_poly(g, 3, 2);
        const MultiPoly den = random_nonzero_poly(g, 2, 1);
        const MultiPoly k1 = random_nonzero_poly(g, 2, 1);
        const MultiPoly k2 = random_nonzero_poly(g, 2, 1);
        const RationalFunction f(num, den);
        const RationalFunction g1(num * k1, den * k1);
        const RationalFunction g2(num * k2 * k1, den * k1 * k2);
        CHECK(rf_equal(f, f));
        CHECK(rf_equal(f, g1) == rf_equal(g1, f));
        CHECK(rf_equal(f, g1));
        CHECK(rf_equal(g1, g2));
        CHECK(rf_equal(f, g2));

        const RationalFunction h = random_rf(g);
        CHECK(rf_equal(f + h, g1 + h));
        CHECK(rf_equal(f * h, g2 * h));
        CHECK(rf_equal(poly_diff(f, Var::X), poly_diff(g1, Var::X)));
        CHECK(rf_equal(poly_diff(f, Var::Y), poly_diff(g2, Var::Y)));

        // agreement with pointwise evaluation where defined
        const Rational x = oracle::random_rational(g, 30, 7);
        const Rational y = oracle::random_rational(g, 30, 7);
        const Rational q = oracle::random_rational(g, 30, 7);
        try {
            const Rational fx = f.evaluate(x, y, q);
            const Rational gx = g2.evaluate(x, y, q);
            CHECK(fx == gx);
        } catch (const DomainError&) {
            // a denominator vanished at the sample point
        }
    }
}
