#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qzeta {

using Integer = mpz_class;

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq; every constructor and operator
/// leaves the value canonical, so equality is plain coefficient equality.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value) : value_(value) {}
    /// Throws DomainError when `den` is zero.
    Rational(const Integer& num, const Integer& den);
    explicit Rational(mpq_class value);

    /// Parses "p/q", an integer, or a terminating decimal ("-0.25").
    /// The sign may only appear in front of the numerator.
    static Rational parse(std::string_view text);

    /// 2^-bits
    static Rational pow2(long exponent);

    const Integer& numerator() const { return value_.get_num(); }
    const Integer& denominator() const { return value_.get_den(); }
    const mpq_class& gmp() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational pow(long exponent) const;
    Integer floor() const;
    Integer ceil() const;

    /// floor(log2 |x|) for x != 0.
    long floor_log2() const;
    double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const;
    /// Decimal rendering rounded to `digits` places after the point.
    std::string to_decimal(int digits) const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace qzeta
