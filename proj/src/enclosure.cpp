#include "qzeta/enclosure.hpp"

#include "qzeta/error.hpp"

#include <ostream>

namespace qzeta {

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_) {
        throw DomainError("enclosure with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
    }
}

Rational Enclosure::magnitude() const
{
    return max(lo_.abs(), hi_.abs());
}

Enclosure Enclosure::rounded_outward(long bits) const
{
    const Rational scale = Rational::pow2(bits);
    const Rational lo = Rational((lo_ * scale).floor()) / scale;
    const Rational hi = Rational((hi_ * scale).ceil()) / scale;
    return Enclosure(lo, hi);
}

Enclosure& Enclosure::operator+=(const Enclosure& rhs)
{
    lo_ += rhs.lo_;
    hi_ += rhs.hi_;
    return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& rhs)
{
    lo_ -= rhs.hi_;
    hi_ -= rhs.lo_;
    return *this;
}

Enclosure& Enclosure::operator*=(const Enclosure& rhs)
{
    const Rational a = lo_ * rhs.lo_;
    const Rational b = lo_ * rhs.hi_;
    const Rational c = hi_ * rhs.lo_;
    const Rational d = hi_ * rhs.hi_;
    lo_ = min(min(a, b), min(c, d));
    hi_ = max(max(a, b), max(c, d));
    return *this;
}

Enclosure& Enclosure::operator*=(const Rational& scale)
{
    lo_ *= scale;
    hi_ *= scale;
    if (scale.sign() < 0) {
        std::swap(lo_, hi_);
    }
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e)
{
    return os << '[' << e.lo() << ", " << e.hi() << ']';
}

} // namespace qzeta
