#include "qzeta/series.hpp"

#include "fixed_interval.hpp"
#include "qzeta/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qzeta {

using detail::FixedContext;
using detail::FixedInterval;

// ---------------------------------------------------------------------------
// Domain types

Composition::Composition(std::vector<int> exponents) : exponents_(std::move(exponents))
{
    if (exponents_.empty()) {
        throw DomainError("empty composition");
    }
    for (int s : exponents_) {
        if (s < 1) {
            throw DomainError("composition exponents must be >= 1, got " + std::to_string(s));
        }
    }
}

Composition Composition::parse(std::string_view text)
{
    std::vector<int> exps;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const auto item = text.substr(pos, comma - pos);
        if (item.empty() || item.size() > 6
            || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw DomainError("malformed composition: '" + std::string(text) + "'");
        }
        exps.push_back(std::stoi(std::string(item)));
        pos = comma + 1;
    }
    return Composition(std::move(exps));
}

int Composition::weight() const
{
    int w = 0;
    for (int s : exponents_) {
        w += s;
    }
    return w;
}

std::string Composition::str() const
{
    std::string out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(exponents_[i]);
    }
    return out;
}

QParam::QParam(Rational q) : q_(std::move(q))
{
    if (q_.sign() <= 0 || q_ >= Rational(1)) {
        throw DomainError("q must satisfy 0 < q < 1, got " + q_.str());
    }
}

void Target::check_admissible() const
{
    switch (kind) {
    case SeriesKind::QZeta:
        if (!comp.admissible()) {
            throw DomainError("inadmissible composition: s1 must be ≥ 2");
        }
        break;
    case SeriesKind::Phi:
        if (comp.depth() != 1 || comp[0] < 2) {
            throw DomainError("phi[s] requires s >= 2");
        }
        break;
    case SeriesKind::ClassicalZeta:
        if (!comp.admissible()) {
            throw DomainError("inadmissible composition: s1 must be ≥ 2");
        }
        if (comp.depth() > 2) {
            throw DomainError("classical evaluation supports depth <= 2, got depth " + std::to_string(comp.depth()));
        }
        break;
    }
}

std::string Target::str() const
{
    switch (kind) {
    case SeriesKind::QZeta: return "zeta[" + comp.str() + "]";
    case SeriesKind::Phi: return "phi[" + comp.str() + "]";
    case SeriesKind::ClassicalZeta: return "zeta(" + comp.str() + ")";
    }
    return {};
}

Rational q_integer(long k, const Rational& q)
{
    if (k < 1) {
        throw DomainError("[k]_q requires k >= 1, got " + std::to_string(k));
    }
    if (q == Rational(1)) {
        return Rational(k);
    }
    return (Rational(1) - q.pow(k)) / (Rational(1) - q);
}

// ---------------------------------------------------------------------------
// Truncated sums on the fixed-point grid

namespace {

using WeightFn = std::function<void(long k, std::vector<FixedInterval>& w)>;

// H[i] = sum over N >= k_i > k_{i+1} > ... > k_{m-1} >= 1 of prod_j w_j(k_j).
std::vector<FixedInterval> nested_sum(const FixedContext& ctx, std::size_t depth, long N, const WeightFn& weights)
{
    std::vector<FixedInterval> H(depth);
    std::vector<FixedInterval> w(depth);
    for (long k = 1; k <= N; ++k) {
        weights(k, w);
        // Outermost level first, so it pairs with inner sums over indices < k.
        for (std::size_t i = 0; i < depth; ++i) {
            if (i + 1 < depth) {
                FixedContext::add_to(H[i], ctx.mul(w[i], H[i + 1]));
            } else {
                FixedContext::add_to(H[i], w[i]);
            }
        }
    }
    return H;
}

// Runs q^k and [k]_q forward as intervals and hands out q^((s-1)k) / [k]^s.
class QWeights {
public:
    QWeights(const FixedContext& ctx, const Rational& q, int max_s)
        : ctx_(ctx), p_(q.numerator()), d_(q.denominator()), qpow_(ctx.one()), qint_(ctx.zero()),
          pows_(static_cast<std::size_t>(max_s)), ints_(static_cast<std::size_t>(max_s) + 1)
    {
    }

    void advance()
    {
        FixedContext::add_to(qint_, qpow_);
        qpow_ = FixedContext::scale(qpow_, p_, d_);
        pows_[0] = ctx_.one();
        for (std::size_t e = 1; e < pows_.size(); ++e) {
            pows_[e] = ctx_.mul(pows_[e - 1], qpow_);
        }
        ints_[0] = ctx_.one();
        for (std::size_t e = 1; e < ints_.size(); ++e) {
            ints_[e] = ctx_.mul(ints_[e - 1], qint_);
        }
    }

    FixedInterval weight(int s) const
    {
        return ctx_.div(pows_[static_cast<std::size_t>(s - 1)], ints_[static_cast<std::size_t>(s)]);
    }

private:
    const FixedContext& ctx_;
    mpz_class p_;
    mpz_class d_;
    FixedInterval qpow_;
    FixedInterval qint_;
    std::vector<FixedInterval> pows_;
    std::vector<FixedInterval> ints_;
};

long bit_length(long n)
{
    long b = 0;
    while (n > 0) {
        ++b;
        n >>= 1;
    }
    return b;
}

unsigned long initial_bits(const Rational& tol, long N, std::size_t depth)
{
    const long need = -tol.floor_log2() + 3 * bit_length(N) + 8 * static_cast<long>(depth) + 24;
    return static_cast<unsigned long>(std::max(need, 64L));
}

void check_tol(const Rational& tol)
{
    if (tol.sign() <= 0) {
        throw DomainError("tolerance must be positive, got " + tol.str());
    }
}

// Smallest N in [1, cap] with ok(N), assuming ok is monotone; empty if ok(cap) fails.
std::optional<long> smallest_truncation(const std::function<bool(long)>& ok, long cap)
{
    long hi = std::min(16L, cap);
    while (!ok(hi)) {
        if (hi >= cap) {
            return std::nullopt;
        }
        hi = std::min(hi * 2, cap);
    }
    long lo = 0;
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        if (ok(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

// sum_{n > N} (n-1)^d r^n, exact for d <= 1 and a ratio-test bound beyond.
std::optional<Rational> power_tail(int d, const Rational& r, long N)
{
    const Rational one(1);
    const Rational rn1 = r.pow(N + 1);
    if (d == 0) {
        return rn1 / (one - r);
    }
    if (d == 1) {
        return rn1 * (Rational(N) / (one - r) + r / ((one - r) * (one - r)));
    }
    if (N < 1) {
        return std::nullopt;
    }
    // Consecutive terms (n-1)^d r^n shrink by at most r ((N+1)/N)^d for n > N.
    const Rational rho = r * (Rational(N + 1) / Rational(N)).pow(d);
    if (rho >= one) {
        return std::nullopt;
    }
    return Rational(N).pow(d) * rn1 / (one - rho);
}

// Bound on the discarded part of a q-series whose outer summand is
// (inner bound) * q^((s1-1)n) / [n]^s1 with inner bound scale * (n-1)^d.
struct QTail {
    Rational scale;
    int d = 0;
    int s1 = 2;
    Rational q;

    std::optional<Rational> operator()(long N) const
    {
        const auto g = power_tail(d, q.pow(s1 - 1), N);
        if (!g) {
            return std::nullopt;
        }
        return scale * *g / q_integer(N + 1, q).pow(s1);
    }
};

// Inner nested sum over k2 > ... > km with k2 < n is at most
// (n-1)^(#ones) * prod_{s_j >= 2} zeta[s_j], because [k]_q >= 1.
QTail qzeta_tail_model(const Composition& comp, const QParam& q)
{
    QTail t;
    t.scale = Rational(1);
    t.s1 = comp[0];
    t.q = q.value();
    for (std::size_t j = 1; j < comp.depth(); ++j) {
        if (comp[j] == 1) {
            ++t.d;
        } else {
            t.scale *= zeta_q(Composition{comp[j]}, q, Rational(1, 256)).hi();
        }
    }
    return t;
}

QTail phi_tail_model(int s, const QParam& q)
{
    return QTail{Rational(1), 1, s, q.value()};
}

struct Truncation {
    long N = 0;
    bool capped = false;
};

Truncation pick_truncation(const std::function<std::optional<Rational>(long)>& tail, const Rational& budget,
                           const EvalOptions& opts, const std::string& what)
{
    const long cap = std::max<long>(1, opts.max_terms);
    const auto N = smallest_truncation(
        [&](long n) {
            const auto t = tail(n);
            return t && *t <= budget;
        },
        cap);
    if (N) {
        return {*N, false};
    }
    if (!opts.clamp_at_cap) {
        throw TruncationLimitError(what + ": tolerance needs more than " + std::to_string(cap) + " terms");
    }
    if (!tail(cap)) {
        throw TruncationLimitError(what + ": no finite tail bound within " + std::to_string(cap) + " terms");
    }
    return {cap, true};
}

// Partial sum on the grid plus an upper tail; retries with more bits until
// the rounding contribution fits in what the tail leaves of tol.
// The summand at (k1, ..., km) = (m, ..., 1).
Rational leading_summand(const Composition& comp, const Rational& q)
{
    Rational r(1);
    const long m = static_cast<long>(comp.depth());
    for (long j = 0; j < m; ++j) {
        const long k = m - j;
        r *= q.pow((comp[static_cast<std::size_t>(j)] - 1) * k) / q_integer(k, q).pow(comp[static_cast<std::size_t>(j)]);
    }
    return r;
}

// `floor` is a single summand of the series: every summand is positive, so it
// bounds the value from below and keeps the enclosure away from zero.
Evaluation finish_q_series(const std::function<FixedInterval(const FixedContext&)>& partial, const Rational& tail,
                           const Rational& floor, const Rational& tol, const Truncation& trunc, std::size_t depth)
{
    unsigned long bits = initial_bits(tol, trunc.N, depth);
    for (int attempt = 0;; ++attempt) {
        const FixedContext ctx(bits);
        const FixedInterval sum = partial(ctx);
        const Rational tail_up = Rational((tail * Rational(ctx.grid())).ceil(), ctx.grid());
        Enclosure e(max(ctx.lower(sum), floor), ctx.upper(sum) + tail_up);
        if (trunc.capped || e.width() <= tol || attempt >= 8) {
            return {std::move(e), trunc.N, trunc.capped};
        }
        bits += 32;
    }
}

} // namespace

Evaluation evaluate_zeta_q(const Composition& comp, const QParam& q, const Rational& tol, const EvalOptions& opts)
{
    Target::qzeta(comp).check_admissible();
    check_tol(tol);
    const QTail model = qzeta_tail_model(comp, q);
    const Rational half = tol / Rational(2);
    const Truncation trunc = pick_truncation(model, half, opts, "zeta[" + comp.str() + "]");
    const Rational tail = *model(trunc.N);
    const int max_s = *std::max_element(comp.exponents().begin(), comp.exponents().end());
    return finish_q_series(
        [&](const FixedContext& ctx) {
            QWeights gen(ctx, q.value(), max_s);
            const auto H = nested_sum(ctx, comp.depth(), trunc.N, [&](long, std::vector<FixedInterval>& w) {
                gen.advance();
                for (std::size_t j = 0; j < comp.depth(); ++j) {
                    w[j] = gen.weight(comp[j]);
                }
            });
            return H[0];
        },
        tail, leading_summand(comp, q.value()), tol, trunc, comp.depth());
}

Evaluation evaluate_phi_q(int s, const QParam& q, const Rational& tol, const EvalOptions& opts)
{
    Target::phi(s).check_admissible();
    check_tol(tol);
    const QTail model = phi_tail_model(s, q);
    const Truncation trunc = pick_truncation(model, tol / Rational(2), opts, "phi[" + std::to_string(s) + "]");
    const Rational tail = *model(trunc.N);
    return finish_q_series(
        [&](const FixedContext& ctx) {
            QWeights gen(ctx, q.value(), s);
            const auto H = nested_sum(ctx, 1, trunc.N, [&](long k, std::vector<FixedInterval>& w) {
                gen.advance();
                const FixedInterval base = gen.weight(s);
                w[0] = FixedInterval{base.lo * (k - 1), base.hi * (k - 1)};
            });
            return H[0];
        },
        tail, q.value().pow(2 * (s - 1)) / q_integer(2, q.value()).pow(s), tol, trunc, 1);
}

// ---------------------------------------------------------------------------
// Classical zeta values with integral-test tails

namespace {

// sum_{n > N} n^-s lies in [low(N), up(N)].
Rational classical_low(int s, long N)
{
    return Rational(1) / (Rational(s - 1) * Rational(N + 1).pow(s - 1));
}

Rational classical_up(int s, long N)
{
    return Rational(1) / (Rational(s - 1) * Rational(N).pow(s - 1));
}

// Extra upper tail for zeta(s,1) from H_{n-1} - H_N <= ln((n-1)/N) <= 2(sqrt((n-1)/N) - 1)
// and sum_{n>N} n^(1/2-s) <= N^(3/2-s)/(s-3/2).
Rational harmonic_growth(int s, long N)
{
    return Rational(4) / (Rational(2 * s - 3) * Rational(N).pow(s - 1)) - Rational(2) * classical_low(s, N);
}

struct ClassicalTail {
    Rational lo;
    Rational hi;
};

} // namespace

Evaluation evaluate_zeta_classical(const Composition& comp, const Rational& tol, const EvalOptions& opts)
{
    Target::classical(comp).check_admissible();
    check_tol(tol);
    const int s = comp[0];
    const Rational budget = tol * Rational(31, 64);

    std::function<std::optional<Rational>(long)> width_bound;
    std::optional<Enclosure> inner_full; // zeta(t) for t >= 2
    if (comp.depth() == 1) {
        width_bound = [s](long N) -> std::optional<Rational> { return classical_up(s, N) - classical_low(s, N); };
    } else if (comp[1] >= 2) {
        const int t = comp[1];
        inner_full = zeta_classical(Composition{t}, Rational(1, 1 << 20));
        width_bound = [s, t, z = *inner_full](long N) -> std::optional<Rational> {
            const Rational h = max(Rational(0), z.lo() - classical_up(t, N));
            return z.hi() * classical_up(s, N) - h * classical_low(s, N);
        };
    } else {
        width_bound = [s](long N) -> std::optional<Rational> {
            // H_N <= 1 + ln N < 1 + 0.7 * bitlength(N)
            const Rational harmonic = Rational(1) + Rational(7 * bit_length(N), 10);
            return harmonic * (classical_up(s, N) - classical_low(s, N)) + harmonic_growth(s, N);
        };
    }
    const Truncation trunc = pick_truncation(width_bound, budget, opts, "zeta(" + comp.str() + ")");
    const long N = trunc.N;

    unsigned long bits = initial_bits(tol, N, comp.depth());
    for (int attempt = 0;; ++attempt) {
        const FixedContext ctx(bits);
        const auto H = nested_sum(ctx, comp.depth(), N, [&](long k, std::vector<FixedInterval>& w) {
            for (std::size_t j = 0; j < comp.depth(); ++j) {
                w[j] = ctx.from(Rational(k).pow(-comp[j]));
            }
        });
        ClassicalTail tail;
        if (comp.depth() == 1) {
            tail = {classical_low(s, N), classical_up(s, N)};
        } else {
            const Rational h_lo = ctx.lower(H[1]);
            const Rational h_hi = ctx.upper(H[1]);
            tail.lo = h_lo * classical_low(s, N);
            tail.hi = inner_full ? inner_full->hi() * classical_up(s, N)
                                 : h_hi * classical_up(s, N) + harmonic_growth(s, N);
        }
        const Rational g(ctx.grid());
        const Rational lo = ctx.lower(H[0]) + Rational((tail.lo * g).floor(), ctx.grid());
        const Rational hi = ctx.upper(H[0]) + Rational((tail.hi * g).ceil(), ctx.grid());
        Enclosure e(lo, hi);
        if (trunc.capped || e.width() <= tol || attempt >= 8) {
            return {std::move(e), N, trunc.capped};
        }
        bits += 32;
    }
}

Enclosure zeta_q(const Composition& comp, const QParam& q, const Rational& tol, const EvalOptions& opts)
{
    return evaluate_zeta_q(comp, q, tol, opts).value;
}

Enclosure phi_q(int s, const QParam& q, const Rational& tol, const EvalOptions& opts)
{
    return evaluate_phi_q(s, q, tol, opts).value;
}

Enclosure zeta_classical(const Composition& comp, const Rational& tol, const EvalOptions& opts)
{
    return evaluate_zeta_classical(comp, tol, opts).value;
}

Evaluation evaluate(const EvalRequest& request, const EvalOptions& opts)
{
    const auto& target = request.target;
    target.check_admissible();
    if (target.kind == SeriesKind::ClassicalZeta) {
        if (request.q) {
            throw DomainError("classical targets take no q");
        }
        return evaluate_zeta_classical(target.comp, request.tol, opts);
    }
    if (!request.q) {
        throw DomainError(target.str() + " requires q");
    }
    if (target.kind == SeriesKind::Phi) {
        return evaluate_phi_q(target.comp[0], *request.q, request.tol, opts);
    }
    return evaluate_zeta_q(target.comp, *request.q, request.tol, opts);
}

std::optional<Rational> zeta_q_tail_bound(const Composition& comp, const QParam& q, long N)
{
    Target::qzeta(comp).check_admissible();
    return qzeta_tail_model(comp, q)(N);
}

std::optional<Rational> phi_q_tail_bound(int s, const QParam& q, long N)
{
    Target::phi(s).check_admissible();
    return phi_tail_model(s, q)(N);
}

// ---------------------------------------------------------------------------
// Exact brute force

namespace {

// Nested sums over a contiguous index range, all sharing denominator `den`:
// sums[i][j] is the sum over levels i..j (level i carrying the largest index).
struct Segment {
    Integer den;
    std::vector<std::vector<Integer>> sums;
};

Segment merge(const Segment& lower, const Segment& upper)
{
    const std::size_t m = lower.sums.size();
    Segment r{lower.den * upper.den, std::vector<std::vector<Integer>>(m, std::vector<Integer>(m))};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            Integer v = lower.sums[i][j] * upper.den + upper.sums[i][j] * lower.den;
            for (std::size_t c = i; c < j; ++c) {
                v += upper.sums[i][c] * lower.sums[c + 1][j];
            }
            r.sums[i][j] = std::move(v);
        }
    }
    return r;
}

Segment split_sum(const std::vector<std::vector<Rational>>& w, std::size_t first, std::size_t last)
{
    const std::size_t m = w.size();
    if (last - first == 1) {
        Segment leaf{Integer(1), std::vector<std::vector<Integer>>(m, std::vector<Integer>(m))};
        for (std::size_t i = 0; i < m; ++i) {
            mpz_lcm(leaf.den.get_mpz_t(), leaf.den.get_mpz_t(), w[i][first].denominator().get_mpz_t());
        }
        for (std::size_t i = 0; i < m; ++i) {
            leaf.sums[i][i] = w[i][first].numerator() * (leaf.den / w[i][first].denominator());
        }
        return leaf;
    }
    const std::size_t mid = first + (last - first) / 2;
    return merge(split_sum(w, first, mid), split_sum(w, mid, last));
}

} // namespace

Rational zeta_q_bruteforce(const Composition& comp, const QParam& q, long N)
{
    if (N < 1) {
        throw DomainError("brute force needs N >= 1");
    }
    const std::size_t m = comp.depth();
    std::vector<std::vector<Rational>> w(m, std::vector<Rational>(static_cast<std::size_t>(N)));
    const Rational& x = q.value();
    Rational power(1); // q^(k-1)
    Rational qint(0);
    for (long k = 1; k <= N; ++k) {
        qint += power;
        power *= x;
        for (std::size_t j = 0; j < m; ++j) {
            w[j][static_cast<std::size_t>(k - 1)] = power.pow(comp[j] - 1) / qint.pow(comp[j]);
        }
    }
    const Segment all = split_sum(w, 0, static_cast<std::size_t>(N));
    return Rational(all.sums[0][m - 1], all.den);
}

} // namespace qzeta
