#include "support.hpp"

#include "qzeta/series.hpp"
#include "qzeta/symbolic.hpp"

#include <doctest.h>

using namespace qzeta;

namespace {

MultiPoly X() { return MultiPoly::variable(Var::X); }
MultiPoly Y() { return MultiPoly::variable(Var::Y); }
MultiPoly Q() { return MultiPoly::variable(Var::Q); }

RationalFunction over(const MultiPoly& num, const MultiPoly& den) { return RationalFunction(num, den); }

std::size_t expected_terms(int s, int t)
{
    return static_cast<std::size_t>(s * (s + 1) / 2 + t * (t + 1) / 2 + std::min(s, t));
}

} // namespace

TEST_CASE("kernel and seed")
{
    CHECK(kernel() == X() + Y() + (Q() - MultiPoly(1)) * X() * Y());
    CHECK(rf_equal(seed_rhs(), over(MultiPoly(1), X() * Y())));
}

TEST_CASE("build_lemma small cases")
{
    const auto l11 = build_lemma(1, 1);
    CHECK(l11.terms.size() == 3);
    const RationalFunction hand = over(MultiPoly(1), X() * kernel()) + over(MultiPoly(1), Y() * kernel())
        - over(MultiPoly(1) - Q(), kernel());
    CHECK(rf_equal(l11.rhs, hand));
    CHECK(rf_equal(l11.rhs, over(MultiPoly(1), X() * Y())));
    CHECK(build_lemma(2, 1).terms.size() == 5);
    CHECK_THROWS(build_lemma(0, 1));
}

TEST_CASE("lemma term counts and kernel exponents")
{
    for (int s = 1; s <= 6; ++s) {
        for (int t = 1; t <= 6; ++t) {
            const auto inst = build_lemma(s, t);
            CHECK(inst.terms.size() == expected_terms(s, t));
            CHECK(rf_equal(inst.lhs, RationalFunction(MultiPoly(1), X().pow(s) * Y().pow(t))));
            unsigned top = 0;
            for (const auto& term : inst.terms) {
                for (const auto& f : term.shape.denominator_factors()) {
                    if (f.base == kernel()) {
                        top = std::max(top, f.exponent);
                    }
                }
            }
            CHECK(top == static_cast<unsigned>(s + t - 1));
        }
    }
}

TEST_CASE("verify_lemma")
{
    for (int s = 1; s <= 5; ++s) {
        for (int t = 1; t <= 5; ++t) {
            CHECK(verify_lemma(s, t));
        }
    }
}

TEST_CASE("perturbed lemma coefficient is rejected")
{
    for (auto [s, t] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{4, 3}}) {
        for (std::size_t i = 0; i < build_lemma(s, t).terms.size(); ++i) {
            auto inst = build_lemma(s, t);
            if (inst.terms[i].coeff == 0) {
                continue;
            }
            inst.terms[i].coeff += 1;
            inst.rhs = assemble(inst.terms);
            CHECK_FALSE(verify_lemma(inst));
        }
    }
}

TEST_CASE("operator derivation")
{
    CHECK(rf_equal(derive_lemma_by_operator(1, 1), seed_rhs()));
    CHECK(rf_equal(derive_lemma_by_operator(2, 1), build_lemma(2, 1).rhs));
    const RationalFunction reciprocal = over(MultiPoly(1), X() * Y());
    for (int s = 1; s <= 4; ++s) {
        for (int t = 1; t <= 4; ++t) {
            CHECK(rf_equal(apply_lemma_operator(reciprocal, s, t), build_lemma(s, t).lhs));
            CHECK(verify_operator(s, t));
        }
    }
}

TEST_CASE("q=1 reduction and partial fractions")
{
    CHECK(rf_equal(q1_reduction_rhs(1, 1), over(MultiPoly(1), X() * (X() + Y())) + over(MultiPoly(1), Y() * (X() + Y()))));
    const MultiPoly C = Y();
    CHECK(rf_equal(parfrac_rhs(1, 1), over(MultiPoly(1), X() * C) + over(MultiPoly(1), C * (C - X()))));
    CHECK(rf_equal(parfrac_lhs(1, 1), over(MultiPoly(1), X() * (C - X()))));
    for (int s = 1; s <= 5; ++s) {
        for (int t = 1; t <= 5; ++t) {
            CHECK(verify_q1_reduction(s, t));
            CHECK(verify_parfrac(s, t));
            CHECK(verify_parfrac_by_substitution(s, t));
        }
    }
    // every j-term carries (1-q)^j and vanishes at Q = 1
    for (const auto& term : build_lemma(3, 4).terms) {
        if (term.part == 3) {
            CHECK(term.shape.substitute(Var::Q, Rational(1)).numerator().is_zero());
        }
    }
}

TEST_CASE("property: substitution X=[u]_q, Y=[v]_q")
{
    auto g = oracle::rng(30);
    for (int i = 0; i < 40; ++i) {
        const int s = static_cast<int>(oracle::uniform(g, 1, 5));
        const int t = static_cast<int>(oracle::uniform(g, 1, 5));
        const long u = oracle::uniform(g, 1, 20);
        const long v = oracle::uniform(g, 1, 20);
        const Rational q = oracle::random_q(g, 40);
        const Rational x = q_integer(u, q);
        const Rational y = q_integer(v, q);
        const auto inst = build_lemma(s, t);
        const Rational lhs = inst.lhs.evaluate(x, y, q);
        CHECK(lhs == inst.rhs.evaluate(x, y, q));
        CHECK(lhs == Rational(oracle::lemma_rhs(s, t, x.gmp(), y.gmp(), q.gmp())));
        CHECK(kernel().evaluate(x, y, q) == q_integer(u + v, q));
        CHECK(Rational(1) + (q - Rational(1)) * x == q.pow(u));
        CHECK(Rational(1) + (q - Rational(1)) * y == q.pow(v));
    }
}

TEST_CASE("property: lemma agrees with the direct formula at random points")
{
    auto g = oracle::rng(31);
    for (int i = 0; i < 40; ++i) {
        const int s = static_cast<int>(oracle::uniform(g, 1, 6));
        const int t = static_cast<int>(oracle::uniform(g, 1, 6));
        const Rational x = oracle::random_rational(g, 50, 9);
        const Rational y = oracle::random_rational(g, 50, 9);
        const Rational q = oracle::random_rational(g, 50, 9);
        const mpq_class d = x.gmp() + y.gmp() + (q.gmp() - 1) * x.gmp() * y.gmp();
        if (x.is_zero() || y.is_zero() || d == 0) {
            continue;
        }
        const auto inst = build_lemma(s, t);
        CHECK(inst.rhs.evaluate(x, y, q) == Rational(oracle::lemma_rhs(s, t, x.gmp(), y.gmp(), q.gmp())));
        CHECK(inst.lhs.evaluate(x, y, q) == inst.rhs.evaluate(x, y, q));
    }
}

TEST_CASE("linear text emission")
{
    const std::string text = lemma_text(build_lemma(2, 1));
    CHECK(text.rfind("\\frac{1}{X^{2}*Y} = ", 0) == 0);
    CHECK(text.find("0*") == std::string::npos);
    CHECK(text.find(" - ") != std::string::npos);
    CHECK(lemma_text(build_lemma(1, 1))
          == "\\frac{1}{X*Y} = \\frac{1}{X*(X*Y*Q - X*Y + X + Y)} + \\frac{1}{Y*(X*Y*Q - X*Y + X + Y)}"
             " - \\frac{-Q + 1}{(X*Y*Q - X*Y + X + Y)}");
}
