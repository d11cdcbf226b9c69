#pragma once

#include "qzeta/rational.hpp"

#include <iosfwd>

namespace qzeta {

/// Closed interval [lo, hi] with exact rational endpoints.
///
/// Only +, - and x are provided; every tail bound in the library is
/// arranged so that division never has to act on an enclosure.
class Enclosure {
public:
    Enclosure() = default;
    explicit Enclosure(const Rational& point) : lo_(point), hi_(point) {}
    /// Throws DomainError unless lo <= hi.
    Enclosure(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    /// max(|lo|, |hi|)
    Rational magnitude() const;

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Enclosure& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool intersects(const Enclosure& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

    /// Smallest enclosure with endpoints on the grid 2^-bits containing this one.
    Enclosure rounded_outward(long bits) const;

    Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
    Enclosure& operator+=(const Enclosure& rhs);
    Enclosure& operator-=(const Enclosure& rhs);
    Enclosure& operator*=(const Enclosure& rhs);
    Enclosure& operator*=(const Rational& scale);

    friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
    friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
    friend Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
    friend Enclosure operator*(Enclosure a, const Rational& b) { return a *= b; }
    friend Enclosure operator*(const Rational& a, Enclosure b) { return b *= a; }

    friend bool operator==(const Enclosure&, const Enclosure&) = default;

private:
    Rational lo_;
    Rational hi_;
};

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

} // namespace qzeta
