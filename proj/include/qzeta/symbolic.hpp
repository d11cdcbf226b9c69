#pragma once

#include "qzeta/rational_function.hpp"

#include <string>
#include <vector>

namespace qzeta {

/// D = X + Y + (Q-1)XY; evaluates to [u+v]_q at X=[u]_q, Y=[v]_q.
MultiPoly kernel();

/// (1/X + 1/Y + Q - 1) / D, which equals 1/(XY).
RationalFunction seed_rhs();

/// One summand coeff * shape of the lemma's right side.
/// part 1 and 2 are the two (a, b) double sums, part 3 the subtracted j sum
/// (its sign is carried by coeff; b holds j).
struct LemmaTerm {
    int part = 1;
    int a = 0;
    int b = 0;
    Integer coeff;
    RationalFunction shape;
};

struct LemmaInstance {
    int s = 1;
    int t = 1;
    RationalFunction lhs; // 1 / (X^s Y^t)
    std::vector<LemmaTerm> terms;
    RationalFunction rhs; // sum of coeff * shape
};

/// Sum of coeff * shape over the terms.
RationalFunction assemble(const std::vector<LemmaTerm>& terms);

/// Both sides of the rational-function lemma for s, t >= 1.
LemmaInstance build_lemma(int s, int t);

/// Multiplies both sides by X^s Y^t D^(s+t) and compares the polynomials.
bool verify_lemma(const LemmaInstance& inst);
bool verify_lemma(int s, int t);

/// (1/(s-1)!) (-d/dX)^(s-1) (1/(t-1)!) (-d/dY)^(t-1) f, X-derivatives first.
RationalFunction apply_lemma_operator(const RationalFunction& f, int s, int t);
/// The operator applied to seed_rhs().
RationalFunction derive_lemma_by_operator(int s, int t);
/// derive_lemma_by_operator(s,t) equals build_lemma(s,t).rhs, and the
/// operator maps 1/(XY) to 1/(X^s Y^t).
bool verify_operator(int s, int t);

/// Right side of the Q = 1 specialization:
/// sum_a C(a+t-1,t-1)/(X^(s-a)(X+Y)^(t+a)) + sum_a C(a+s-1,s-1)/((X+Y)^(s+a) Y^(t-a)).
RationalFunction q1_reduction_rhs(int s, int t);
bool verify_q1_reduction(int s, int t);

/// Partial fractions of 1/(X^s (C-X)^t) in X and C (C occupies the Y slot).
RationalFunction parfrac_lhs(int s, int t);
RationalFunction parfrac_rhs(int s, int t);
bool verify_parfrac(int s, int t);
/// Same identity reached from the Q = 1 lemma by substituting Y -> C - X.
bool verify_parfrac_by_substitution(int s, int t);

/// Linear LaTeX-like rendering "lhs = term + term - ..." of a lemma instance.
std::string lemma_text(const LemmaInstance& inst);

} // namespace qzeta
