#pragma once

// Test-side oracles. Everything here is computed from the defining sums with
// plain mpq_class arithmetic and shares no code with the library.

#include "qzeta/rational.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline mpq_class pow(const mpq_class& base, long e)
{
    mpq_class r = 1;
    for (long i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

/// [k]_q as 1 + q + ... + q^(k-1).
inline mpq_class qint(long k, const mpq_class& q)
{
    mpq_class sum = 0;
    mpq_class term = 1;
    for (long j = 0; j < k; ++j) {
        sum += term;
        term *= q;
    }
    return sum;
}

/// Generic nested sum over k1 > ... > km > 0, all k <= N, of prod weight(j, kj).
template <class Weight>
mpq_class nested(std::size_t depth, long N, Weight weight)
{
    // below[k] = sum over the deeper levels with their first index < k
    std::vector<mpq_class> below(N + 2, mpq_class(1));
    for (std::size_t level = depth; level-- > 0;) {
        std::vector<mpq_class> next(N + 2, mpq_class(0));
        mpq_class acc = 0;
        for (long k = 1; k <= N; ++k) {
            acc += weight(level, k) * (level + 1 == depth ? mpq_class(1) : below[k]);
            next[k + 1] = acc;
        }
        next[1] = 0;
        below = std::move(next);
    }
    return below[N + 1];
}

/// Partial sum of zeta_q[comp] with every index <= N.
inline mpq_class zeta_q(const std::vector<int>& comp, const mpq_class& q, long N)
{
    std::vector<mpq_class> qpow(N + 1, mpq_class(1));
    std::vector<mpq_class> ints(N + 1, mpq_class(0));
    for (long k = 1; k <= N; ++k) {
        qpow[k] = qpow[k - 1] * q;
        ints[k] = ints[k - 1] + qpow[k - 1];
    }
    return nested(comp.size(), N, [&](std::size_t j, long k) -> mpq_class {
        return pow(qpow[k], comp[j] - 1) / pow(ints[k], comp[j]);
    });
}

/// Same, but with the inner factors read as q^((k-1) s_j) instead of q^((s_j-1) k).
inline mpq_class zeta_q_swapped_exponent(const std::vector<int>& comp, const mpq_class& q, long N)
{
    return nested(comp.size(), N, [&](std::size_t j, long k) -> mpq_class {
        const long e = j == 0 ? (comp[j] - 1) * k : (k - 1) * comp[j];
        return pow(q, e) / pow(qint(k, q), comp[j]);
    });
}

inline mpq_class phi_q(int s, const mpq_class& q, long N)
{
    mpq_class sum = 0;
    for (long n = 2; n <= N; ++n) {
        sum += mpq_class(n - 1) * pow(q, (s - 1) * n) / pow(qint(n, q), s);
    }
    return sum;
}

inline mpq_class zeta_classical(const std::vector<int>& comp, long N)
{
    return nested(comp.size(), N, [&](std::size_t j, long k) -> mpq_class { return 1 / pow(mpq_class(k), comp[j]); });
}

inline mpz_class binom(long n, long k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    mpz_class r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

inline mpz_class fact(long n)
{
    mpz_class r = 1;
    for (long i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

/// Right side of the three-sum rational identity for 1/(x^s y^t), evaluated directly at a point.
inline mpq_class lemma_rhs(int s, int t, const mpq_class& x, const mpq_class& y, const mpq_class& q)
{
    const mpq_class d = x + y + (q - 1) * x * y;
    const mpq_class e = 1 - q;
    const mpq_class px = 1 + (q - 1) * x;
    const mpq_class py = 1 + (q - 1) * y;
    mpq_class sum = 0;
    for (int a = 0; a <= s - 1; ++a) {
        for (int b = 0; b <= s - 1 - a && b <= t - 1; ++b) {
            sum += mpq_class(binom(a + t - 1, t - 1) * binom(t - 1, b)) * pow(e, b) * pow(py, a) * pow(px, t - 1 - b)
                / (pow(x, s - a - b) * pow(d, t + a));
        }
    }
    for (int a = 0; a <= t - 1; ++a) {
        for (int b = 0; b <= t - 1 - a && b <= s - 1; ++b) {
            sum += mpq_class(binom(a + s - 1, s - 1) * binom(s - 1, b)) * pow(e, b) * pow(px, a) * pow(py, s - 1 - b)
                / (pow(y, t - a - b) * pow(d, s + a));
        }
    }
    for (int j = 1; j <= std::min(s, t); ++j) {
        const mpq_class c(fact(s + t - j - 1), fact(s - j) * fact(t - j) * fact(j - 1));
        sum -= c * pow(e, j) * pow(py, s - j) * pow(px, t - j) / pow(d, s + t - j);
    }
    return sum;
}

/// 45-digit values computed independently with mpmath (60-digit working
/// precision, plain truncated sums far past the point of negligible terms).
struct Pinned {
    const char* what;
    std::vector<int> comp;
    const char* q; // empty for classical
    const char* value;
};

inline const std::vector<Pinned>& pinned()
{
    static const std::vector<Pinned> table{
        {"zeta[2] q=1/2", {2}, "1/2", "0.686008472189872090120053722873068041077857245"},
        {"zeta[2,1] q=1/2", {2, 1}, "1/2", "0.272203205633213672097056883167030093677886241"},
        {"zeta[2,2] q=1/2", {2, 2}, "1/2", "0.103094573539311557409706500681068115990003109"},
        {"zeta[3] q=9/10", {3}, "9/10", "0.955625186622752227837481739531333105189513173"},
        {"zeta[3,1] q=1/4", {3, 1}, "1/4", "0.00221249804226406933217890706179699481514060932"},
        {"zeta[2,1,1] q=1/2", {2, 1, 1}, "1/2", "0.128316874021052558005518669633036237367552189"},
        {"zeta(2)", {2}, "", "1.6449340668482264364724151666460251892189499"},
        {"zeta(3)", {3}, "", "1.20205690315959428539973816151144999076498629"},
    };
    return table;
}

inline const char* phi3_half = "0.0268899446218702738416772760726714092523119716";
inline const char* zeta3 = "1.20205690315959428539973816151144999076498629";
inline const char* zeta2_squared = "2.70580808427784547879000924135291975693687738";

/// Fixed-seed generator shared by the property tests.
inline std::mt19937_64 rng(std::uint64_t salt = 0)
{
    return std::mt19937_64(0x5eed'0000'2718ULL ^ salt);
}

inline long uniform(std::mt19937_64& g, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline qzeta::Rational random_rational(std::mt19937_64& g, long num_bound = 1'000'000, long den_bound = 1'000'000)
{
    return qzeta::Rational(qzeta::Integer(uniform(g, -num_bound, num_bound)),
                           qzeta::Integer(uniform(g, 1, den_bound)));
}

/// Random q strictly inside (0, 1).
inline qzeta::Rational random_q(std::mt19937_64& g, long den_bound = 50)
{
    const long den = uniform(g, 2, den_bound);
    return qzeta::Rational(qzeta::Integer(uniform(g, 1, den - 1)), qzeta::Integer(den));
}

} // namespace oracle
