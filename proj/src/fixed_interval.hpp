#pragma once

// Directed-rounding interval arithmetic on the dyadic grid 2^-bits.
// Used only for accumulating truncated series; every quantity handled
// here is nonnegative, which keeps the rounding rules one-sided.

#include "qzeta/enclosure.hpp"

#include <gmpxx.h>

namespace qzeta::detail {

struct FixedInterval {
    mpz_class lo; // lower endpoint * 2^bits
    mpz_class hi; // upper endpoint * 2^bits
};

class FixedContext {
public:
    explicit FixedContext(unsigned long bits) : bits_(bits) {}

    unsigned long bits() const { return bits_; }

    FixedInterval zero() const { return {}; }
    FixedInterval one() const
    {
        mpz_class u = 1;
        mpz_mul_2exp(u.get_mpz_t(), u.get_mpz_t(), bits_);
        return {u, u};
    }

    FixedInterval from(const Rational& x) const
    {
        mpz_class n = x.numerator();
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), bits_);
        FixedInterval r;
        mpz_fdiv_q(r.lo.get_mpz_t(), n.get_mpz_t(), x.denominator().get_mpz_t());
        mpz_cdiv_q(r.hi.get_mpz_t(), n.get_mpz_t(), x.denominator().get_mpz_t());
        return r;
    }

    static void add_to(FixedInterval& acc, const FixedInterval& x)
    {
        acc.lo += x.lo;
        acc.hi += x.hi;
    }

    FixedInterval mul(const FixedInterval& a, const FixedInterval& b) const
    {
        FixedInterval r;
        r.lo = a.lo * b.lo;
        r.hi = a.hi * b.hi;
        mpz_fdiv_q_2exp(r.lo.get_mpz_t(), r.lo.get_mpz_t(), bits_);
        mpz_cdiv_q_2exp(r.hi.get_mpz_t(), r.hi.get_mpz_t(), bits_);
        return r;
    }

    /// a * p / d for integers p >= 0, d > 0.
    static FixedInterval scale(const FixedInterval& a, const mpz_class& p, const mpz_class& d)
    {
        FixedInterval r;
        r.lo = a.lo * p;
        r.hi = a.hi * p;
        mpz_fdiv_q(r.lo.get_mpz_t(), r.lo.get_mpz_t(), d.get_mpz_t());
        mpz_cdiv_q(r.hi.get_mpz_t(), r.hi.get_mpz_t(), d.get_mpz_t());
        return r;
    }

    /// a / b for b with a strictly positive lower endpoint.
    FixedInterval div(const FixedInterval& a, const FixedInterval& b) const
    {
        FixedInterval r;
        r.lo = a.lo;
        r.hi = a.hi;
        mpz_mul_2exp(r.lo.get_mpz_t(), r.lo.get_mpz_t(), bits_);
        mpz_mul_2exp(r.hi.get_mpz_t(), r.hi.get_mpz_t(), bits_);
        mpz_fdiv_q(r.lo.get_mpz_t(), r.lo.get_mpz_t(), b.hi.get_mpz_t());
        mpz_cdiv_q(r.hi.get_mpz_t(), r.hi.get_mpz_t(), b.lo.get_mpz_t());
        return r;
    }

    FixedInterval pow(const FixedInterval& a, int e) const
    {
        FixedInterval r = one();
        for (int i = 0; i < e; ++i) {
            r = mul(r, a);
        }
        return r;
    }

    Rational lower(const FixedInterval& a) const { return Rational(a.lo, grid()); }
    Rational upper(const FixedInterval& a) const { return Rational(a.hi, grid()); }
    Enclosure to_enclosure(const FixedInterval& a) const { return Enclosure(lower(a), upper(a)); }
    /// hi - lo in units of 2^-bits
    static mpz_class ulps(const FixedInterval& a) { return a.hi - a.lo; }

    mpz_class grid() const
    {
        mpz_class g = 1;
        mpz_mul_2exp(g.get_mpz_t(), g.get_mpz_t(), bits_);
        return g;
    }

private:
    unsigned long bits_;
};

} // namespace qzeta::detail
