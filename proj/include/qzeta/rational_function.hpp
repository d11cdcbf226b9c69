#pragma once

#include "qzeta/multipoly.hpp"

#include <span>
#include <string>
#include <vector>

namespace qzeta {

/// One denominator factor base^exponent.
struct Factor {
    MultiPoly base;
    unsigned exponent = 1;
};

/// Quotient of two polynomials in X, Y, Q.
///
/// The denominator is kept as a product of powers of non-constant factors.
/// Each base is scaled so that its leading coefficient is 1 and equal bases
/// are merged, so sums of terms like 1/(X^a D^b) share one common
/// denominator and repeated differentiation raises exponents instead of
/// squaring the whole denominator. No polynomial GCDs are ever taken.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(MultiPoly num); // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational& c) : RationalFunction(MultiPoly(c)) {} // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : RationalFunction(MultiPoly(c)) {}            // NOLINT(google-explicit-constructor)
    /// Throws DomainError when `den` is the zero polynomial.
    RationalFunction(MultiPoly num, const MultiPoly& den);
    /// Throws DomainError when any base is the zero polynomial.
    RationalFunction(MultiPoly num, std::vector<Factor> den);

    const MultiPoly& numerator() const { return num_; }
    const std::vector<Factor>& denominator_factors() const { return den_; }
    /// The expanded denominator polynomial.
    MultiPoly denominator() const;

    RationalFunction pow(unsigned exponent) const;
    RationalFunction diff(Var v) const;
    RationalFunction substitute(Var v, const Rational& value) const;
    RationalFunction substitute(Var v, const MultiPoly& value) const;
    /// Throws DomainError when the denominator vanishes at the point.
    Rational evaluate(const Rational& x, const Rational& y, const Rational& q) const;

    /// Multiplies by the given product of factors and returns the resulting
    /// polynomial. Throws DomainError unless the multiplier is a multiple of
    /// the denominator (factor by factor).
    MultiPoly clear_denominators(const std::vector<Factor>& multiplier) const;

    /// Linear text form "\frac{num}{den}" (or the bare numerator).
    std::string str(const VarNames& names = default_var_names) const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    /// Throws DomainError when dividing by the zero function.
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    /// Sum over a common denominator, forming each factor power only once.
    static RationalFunction sum(std::span<const RationalFunction> terms);

private:
    void normalize();

    MultiPoly num_;
    std::vector<Factor> den_;
};

/// True iff f and g are the same rational function, i.e. num_f * den_g == num_g * den_f.
/// Evaluated over the merged factor list, which is equivalent because the
/// polynomial ring has no zero divisors.
bool rf_equal(const RationalFunction& f, const RationalFunction& g);

/// Partial derivative with respect to X or Y (or Q).
RationalFunction poly_diff(const RationalFunction& f, Var v);

} // namespace qzeta
