#include "qzeta/symbolic.hpp"

#include "qzeta/error.hpp"

#include <sstream>

namespace qzeta {

namespace {

const MultiPoly& X()
{
    static const MultiPoly x = MultiPoly::variable(Var::X);
    return x;
}

const MultiPoly& Y()
{
    static const MultiPoly y = MultiPoly::variable(Var::Y);
    return y;
}

const MultiPoly& Q()
{
    static const MultiPoly q = MultiPoly::variable(Var::Q);
    return q;
}

unsigned u(int v)
{
    return static_cast<unsigned>(v);
}

void require_positive(int s, int t)
{
    if (s < 1 || t < 1) {
        throw DomainError("s and t must be positive integers, got s=" + std::to_string(s) + ", t=" + std::to_string(t));
    }
}

// num / (base1^e1 * base2^e2), skipping zero exponents
RationalFunction fraction(MultiPoly num, std::vector<Factor> den)
{
    return RationalFunction(std::move(num), std::move(den));
}

} // namespace

MultiPoly kernel()
{
    return X() + Y() + (Q() - MultiPoly(1)) * X() * Y();
}

RationalFunction seed_rhs()
{
    const RationalFunction sum = RationalFunction(MultiPoly(1), X()) + RationalFunction(MultiPoly(1), Y())
                               + RationalFunction(Q() - MultiPoly(1));
    return sum * RationalFunction(MultiPoly(1), kernel());
}

RationalFunction assemble(const std::vector<LemmaTerm>& terms)
{
    std::vector<RationalFunction> scaled;
    scaled.reserve(terms.size());
    for (const auto& term : terms) {
        scaled.push_back(term.shape * RationalFunction(Rational(term.coeff)));
    }
    return RationalFunction::sum(scaled);
}

LemmaInstance build_lemma(int s, int t)
{
    require_positive(s, t);
    const MultiPoly D = kernel();
    const MultiPoly eps = MultiPoly(1) - Q();             // 1 - q
    const MultiPoly qx = MultiPoly(1) + (Q() - MultiPoly(1)) * X(); // 1 + (q-1)x
    const MultiPoly qy = MultiPoly(1) + (Q() - MultiPoly(1)) * Y(); // 1 + (q-1)y

    LemmaInstance inst;
    inst.s = s;
    inst.t = t;
    inst.lhs = fraction(MultiPoly(1), {Factor{X(), u(s)}, Factor{Y(), u(t)}});

    // First double sum and its mirror image with (s, X) <-> (t, Y).
    const auto half = [&](int part, int x_exp, int y_exp, const MultiPoly& own, const MultiPoly& own_q,
                          const MultiPoly& other_q) {
        for (int a = 0; a <= x_exp - 1; ++a) {
            for (int b = 0; b <= x_exp - 1 - a; ++b) {
                LemmaTerm term;
                term.part = part;
                term.a = a;
                term.b = b;
                term.coeff = binomial(u(a + y_exp - 1), u(y_exp - 1)) * binomial(u(y_exp - 1), u(b));
                if (b <= y_exp - 1) { // otherwise C(y_exp-1, b) = 0 and the shape stays zero
                    term.shape = fraction(eps.pow(u(b)) * other_q.pow(u(a)) * own_q.pow(u(y_exp - 1 - b)),
                                          {Factor{own, u(x_exp - a - b)}, Factor{D, u(y_exp + a)}});
                }
                inst.terms.push_back(std::move(term));
            }
        }
    };
    half(1, s, t, X(), qx, qy);
    half(2, t, s, Y(), qy, qx);

    for (int j = 1; j <= std::min(s, t); ++j) {
        LemmaTerm term;
        term.part = 3;
        term.b = j;
        term.coeff = -(factorial(u(s + t - j - 1))
                       / (factorial(u(s - j)) * factorial(u(t - j)) * factorial(u(j - 1))));
        term.shape = fraction(eps.pow(u(j)) * qy.pow(u(s - j)) * qx.pow(u(t - j)), {Factor{D, u(s + t - j)}});
        inst.terms.push_back(std::move(term));
    }
    inst.rhs = assemble(inst.terms);
    return inst;
}

bool verify_lemma(const LemmaInstance& inst)
{
    const std::vector<Factor> multiplier{Factor{X(), u(inst.s)}, Factor{Y(), u(inst.t)},
                                         Factor{kernel(), u(inst.s + inst.t)}};
    try {
        return inst.lhs.clear_denominators(multiplier) == inst.rhs.clear_denominators(multiplier);
    } catch (const DomainError&) {
        return false; // multiplier does not clear a (perturbed) right side
    }
}

bool verify_lemma(int s, int t)
{
    return verify_lemma(build_lemma(s, t));
}

RationalFunction apply_lemma_operator(const RationalFunction& f, int s, int t)
{
    require_positive(s, t);
    RationalFunction r = f;
    for (int i = 0; i < s - 1; ++i) {
        r = -r.diff(Var::X);
    }
    for (int i = 0; i < t - 1; ++i) {
        r = -r.diff(Var::Y);
    }
    const Rational norm = Rational(1) / Rational(Integer(factorial(u(s - 1)) * factorial(u(t - 1))));
    return r * RationalFunction(norm);
}

RationalFunction derive_lemma_by_operator(int s, int t)
{
    return apply_lemma_operator(seed_rhs(), s, t);
}

bool verify_operator(int s, int t)
{
    const LemmaInstance inst = build_lemma(s, t);
    const RationalFunction reciprocal = fraction(MultiPoly(1), {Factor{X(), 1}, Factor{Y(), 1}});
    return rf_equal(derive_lemma_by_operator(s, t), inst.rhs)
        && rf_equal(apply_lemma_operator(reciprocal, s, t), inst.lhs);
}

RationalFunction q1_reduction_rhs(int s, int t)
{
    require_positive(s, t);
    const MultiPoly sum = X() + Y();
    std::vector<RationalFunction> terms;
    for (int a = 0; a <= s - 1; ++a) {
        terms.push_back(fraction(MultiPoly(Rational(binomial(u(a + t - 1), u(t - 1)))),
                                 {Factor{X(), u(s - a)}, Factor{sum, u(t + a)}}));
    }
    for (int a = 0; a <= t - 1; ++a) {
        terms.push_back(fraction(MultiPoly(Rational(binomial(u(a + s - 1), u(s - 1)))),
                                 {Factor{sum, u(s + a)}, Factor{Y(), u(t - a)}}));
    }
    return RationalFunction::sum(terms);
}

bool verify_q1_reduction(int s, int t)
{
    return rf_equal(build_lemma(s, t).rhs.substitute(Var::Q, Rational(1)), q1_reduction_rhs(s, t));
}

RationalFunction parfrac_lhs(int s, int t)
{
    require_positive(s, t);
    return fraction(MultiPoly(1), {Factor{X(), u(s)}, Factor{Y() - X(), u(t)}});
}

RationalFunction parfrac_rhs(int s, int t)
{
    require_positive(s, t);
    const MultiPoly& C = Y();
    const MultiPoly gap = C - X();
    std::vector<RationalFunction> terms;
    for (int a = 0; a <= s - 1; ++a) {
        terms.push_back(fraction(MultiPoly(Rational(binomial(u(a + t - 1), u(t - 1)))),
                                 {Factor{X(), u(s - a)}, Factor{C, u(t + a)}}));
    }
    for (int a = 0; a <= t - 1; ++a) {
        terms.push_back(fraction(MultiPoly(Rational(binomial(u(a + s - 1), u(s - 1)))),
                                 {Factor{C, u(s + a)}, Factor{gap, u(t - a)}}));
    }
    return RationalFunction::sum(terms);
}

bool verify_parfrac(int s, int t)
{
    return rf_equal(parfrac_lhs(s, t), parfrac_rhs(s, t));
}

bool verify_parfrac_by_substitution(int s, int t)
{
    const MultiPoly c_minus_x = Y() - X(); // Y now stands for C
    const LemmaInstance inst = build_lemma(s, t);
    const RationalFunction lhs = inst.lhs.substitute(Var::Y, c_minus_x);
    const RationalFunction rhs = inst.rhs.substitute(Var::Q, Rational(1)).substitute(Var::Y, c_minus_x);
    return rf_equal(lhs, parfrac_lhs(s, t)) && rf_equal(rhs, parfrac_rhs(s, t));
}

std::string lemma_text(const LemmaInstance& inst)
{
    std::ostringstream os;
    os << inst.lhs.str() << " =";
    bool first = true;
    for (const auto& term : inst.terms) {
        if (term.coeff == 0 || term.shape.numerator().is_zero()) {
            continue;
        }
        const bool negative = term.coeff < 0;
        const Integer magnitude = negative ? Integer(-term.coeff) : term.coeff;
        os << (negative ? " - " : (first ? " " : " + "));
        if (magnitude != 1) {
            os << magnitude.get_str() << '*';
        }
        os << term.shape.str();
        first = false;
    }
    return os.str();
}

} // namespace qzeta
