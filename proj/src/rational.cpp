#include "qzeta/rational.hpp"

#include "qzeta/error.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace qzeta {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view digits)
{
    return Integer(std::string(digits), 10);
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    if (value_.get_den() == 0) {
        throw DomainError("zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string original(text);
    if (text.empty()) {
        throw DomainError("malformed rational: empty string");
    }
    bool negative = false;
    if (text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    Rational result;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw DomainError("malformed rational: '" + original + "'");
        }
        result = Rational(parse_integer(num), parse_integer(den));
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
            || (!frac.empty() && !all_digits(frac))) {
            throw DomainError("malformed rational: '" + original + "'");
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        const Integer w = whole.empty() ? Integer(0) : parse_integer(whole);
        const Integer f = frac.empty() ? Integer(0) : parse_integer(frac);
        result = Rational(Integer(w * scale + f), scale);
    } else {
        if (!all_digits(text)) {
            throw DomainError("malformed rational: '" + original + "'");
        }
        result = Rational(parse_integer(text));
    }
    return negative ? -result : result;
}

Rational Rational::pow2(long exponent)
{
    Integer p = 1;
    if (exponent >= 0) {
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
        return Rational(p);
    }
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
    return Rational(Integer(1), p);
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        return Rational(1) / pow(-exponent);
    }
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(std::move(r));
}

Integer Rational::floor() const
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

Integer Rational::ceil() const
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

long Rational::floor_log2() const
{
    if (is_zero()) {
        throw DomainError("floor_log2 of zero");
    }
    const Rational a = abs();
    long e = static_cast<long>(mpz_sizeinbase(a.numerator().get_mpz_t(), 2))
           - static_cast<long>(mpz_sizeinbase(a.denominator().get_mpz_t(), 2));
    // 2^(e-1) < a < 2^(e+1); settle the boundary exactly.
    if (a < pow2(e)) {
        --e;
    }
    return e;
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const
{
    digits = std::max(digits, 0);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round half away from zero
    const mpq_class scaled = ::abs(value_) * scale + mpq_class(1, 2);
    Integer rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    std::string body = rounded.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    const bool negative = sign() < 0 && rounded != 0;
    return negative ? "-" + body : body;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational min(const Rational& a, const Rational& b)
{
    return b < a ? b : a;
}

Rational max(const Rational& a, const Rational& b)
{
    return a < b ? b : a;
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace qzeta
