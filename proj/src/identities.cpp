#include "qzeta/identities.hpp"

#include "fixed_interval.hpp"
#include "qzeta/error.hpp"

#include <algorithm>
#include <map>

namespace qzeta {

using detail::FixedContext;
using detail::FixedInterval;

std::string identity_name(IdentityKind kind)
{
    switch (kind) {
    case IdentityKind::EulerClassical: return "euler";
    case IdentityKind::QDecomposition: return "qdecomp";
    case IdentityKind::QStuffle: return "stuffle";
    case IdentityKind::CrossCheck: return "cross";
    }
    return {};
}

IdentityKind parse_identity_name(const std::string& name)
{
    for (auto k : {IdentityKind::EulerClassical, IdentityKind::QDecomposition, IdentityKind::QStuffle,
                   IdentityKind::CrossCheck}) {
        if (identity_name(k) == name) {
            return k;
        }
    }
    throw DomainError("unknown identity '" + name + "' (expected euler, qdecomp, stuffle or cross)");
}

bool is_q_identity(IdentityKind kind)
{
    return kind != IdentityKind::EulerClassical;
}

std::string status_name(Status s)
{
    switch (s) {
    case Status::Verified: return "verified";
    case Status::Violated: return "violated";
    case Status::Inconclusive: return "inconclusive";
    }
    return {};
}

std::vector<ZetaTerm> canonicalize_terms(std::vector<ZetaTerm> terms)
{
    std::map<std::pair<Target, unsigned>, Integer> merged;
    for (auto& term : terms) {
        merged[{term.target, term.eps_power}] += term.coeff;
    }
    std::vector<ZetaTerm> out;
    for (auto& [key, coeff] : merged) {
        if (coeff != 0) {
            out.push_back(ZetaTerm{coeff, key.second, key.first});
        }
    }
    std::sort(out.begin(), out.end(), [](const ZetaTerm& x, const ZetaTerm& y) {
        if (x.target.kind != y.target.kind) {
            return x.target.kind < y.target.kind;
        }
        if (x.target.comp != y.target.comp) {
            return x.target.comp < y.target.comp;
        }
        return x.eps_power < y.eps_power;
    });
    return out;
}

namespace {

void require_decomposition_args(int s, int t)
{
    if (s < 2 || t < 2) {
        throw DomainError("decomposition requires s >= 2 and t >= 2, got s=" + std::to_string(s)
                          + ", t=" + std::to_string(t));
    }
}

unsigned u(int v)
{
    return static_cast<unsigned>(v);
}

} // namespace

IdentityInstance euler_terms(int s, int t)
{
    require_decomposition_args(s, t);
    std::vector<ZetaTerm> terms;
    for (int a = 0; a <= s - 1; ++a) {
        terms.push_back({binomial(u(a + t - 1), u(t - 1)), 0, Target::classical(Composition{t + a, s - a})});
    }
    for (int a = 0; a <= t - 1; ++a) {
        terms.push_back({binomial(u(a + s - 1), u(s - 1)), 0, Target::classical(Composition{s + a, t - a})});
    }
    return IdentityInstance{IdentityKind::EulerClassical, s, t,
                            {Target::classical(Composition{s}), Target::classical(Composition{t})},
                            canonicalize_terms(std::move(terms))};
}

IdentityInstance q_euler_terms(int s, int t)
{
    require_decomposition_args(s, t);
    std::vector<ZetaTerm> terms;
    const auto half = [&terms](int x, int y) {
        for (int a = 0; a <= x - 1; ++a) {
            for (int b = 0; b <= x - 1 - a; ++b) {
                terms.push_back({binomial(u(a + y - 1), u(y - 1)) * binomial(u(y - 1), u(b)), u(b),
                                 Target::qzeta(Composition{y + a, x - a - b})});
            }
        }
    };
    half(s, t);
    half(t, s);
    for (int j = 1; j <= std::min(s, t); ++j) {
        const Integer num = factorial(u(s + t - j - 1));
        const Integer den = factorial(u(s - j)) * factorial(u(t - j)) * factorial(u(j - 1));
        terms.push_back({Integer(-(num / den)), u(j), Target::phi(s + t - j)});
    }
    return IdentityInstance{IdentityKind::QDecomposition, s, t,
                            {Target::qzeta(Composition{s}), Target::qzeta(Composition{t})},
                            canonicalize_terms(std::move(terms))};
}

IdentityInstance stuffle_terms(int s, int t)
{
    require_decomposition_args(s, t);
    std::vector<ZetaTerm> terms{
        {Integer(1), 0, Target::qzeta(Composition{s, t})},
        {Integer(1), 0, Target::qzeta(Composition{t, s})},
        {Integer(1), 0, Target::qzeta(Composition{s + t})},
        {Integer(1), 1, Target::qzeta(Composition{s + t - 1})},
    };
    return IdentityInstance{IdentityKind::QStuffle, s, t,
                            {Target::qzeta(Composition{s}), Target::qzeta(Composition{t})},
                            canonicalize_terms(std::move(terms))};
}

Status classify(const Enclosure& lhs, const Enclosure& rhs, const Rational& tol)
{
    if (!lhs.intersects(rhs)) {
        return Status::Violated;
    }
    if (lhs.width() <= tol && rhs.width() <= tol) {
        return Status::Verified;
    }
    return Status::Inconclusive;
}

namespace {

Evaluation evaluate_target(const Target& target, const std::optional<QParam>& q, const Rational& tol,
                           const EvalOptions& opts, std::int64_t* max_truncation)
{
    std::optional<QParam> param;
    if (target.kind != SeriesKind::ClassicalZeta) {
        param = q;
    }
    Evaluation e = evaluate(EvalRequest{target, param, tol}, opts);
    if (max_truncation != nullptr) {
        *max_truncation = std::max(*max_truncation, e.truncation);
    }
    return e;
}

} // namespace

Enclosure evaluate_rhs(const std::vector<ZetaTerm>& terms, const std::optional<QParam>& q, const Rational& tol,
                       const EvalOptions& opts, std::int64_t* max_truncation)
{
    if (tol.sign() <= 0) {
        throw DomainError("tolerance must be positive");
    }
    const Rational eps = q ? Rational(1) - q->value() : Rational(0);
    const Rational share = tol / Rational(static_cast<long>(std::max<std::size_t>(terms.size(), 1)));
    Enclosure total(Rational(0));
    for (const auto& term : terms) {
        if (term.target.kind != SeriesKind::ClassicalZeta && !q) {
            throw DomainError(term.target.str() + " requires q");
        }
        const Rational weight = Rational(term.coeff) * eps.pow(term.eps_power);
        if (weight.is_zero()) {
            continue;
        }
        const Evaluation e = evaluate_target(term.target, q, share / weight.abs(), opts, max_truncation);
        total += e.value * weight;
    }
    return total;
}

Enclosure evaluate_lhs(const std::pair<Target, Target>& lhs, const std::optional<QParam>& q, const Rational& tol,
                       const EvalOptions& opts, std::int64_t* max_truncation)
{
    if (tol.sign() <= 0) {
        throw DomainError("tolerance must be positive");
    }
    // |AB - A'B'| <= |A| wB + |B| wA + wA wB: size each factor against a
    // coarse bound on the other.
    const Rational coarse(1, 1024);
    const Rational ma = max(Rational(1), evaluate_target(lhs.first, q, coarse, opts, nullptr).value.magnitude());
    const Rational mb = max(Rational(1), evaluate_target(lhs.second, q, coarse, opts, nullptr).value.magnitude());
    const Enclosure a = evaluate_target(lhs.first, q, tol / (Rational(4) * mb), opts, max_truncation).value;
    const Enclosure b = lhs.second == lhs.first
                          ? a
                          : evaluate_target(lhs.second, q, tol / (Rational(4) * ma), opts, max_truncation).value;
    return a * b;
}

VerificationReport evaluate_identity(const IdentityInstance& inst, const std::optional<QParam>& q,
                                     const Rational& tol, const EvalOptions& opts)
{
    const bool wants_q = is_q_identity(inst.id);
    if (wants_q && !q) {
        throw DomainError(identity_name(inst.id) + " requires q");
    }
    if (!wants_q && q) {
        throw DomainError(identity_name(inst.id) + " is a classical identity and takes no q");
    }
    EvalOptions clamped = opts;
    clamped.clamp_at_cap = true;
    VerificationReport r;
    r.identity = inst.id;
    r.s = inst.s;
    r.t = inst.t;
    r.tol = tol;
    if (q) {
        r.q = q->value();
    }
    r.lhs_enclosure = evaluate_lhs(inst.lhs, q, tol, clamped, &r.max_truncation);
    r.rhs_enclosure = evaluate_rhs(inst.terms, q, tol, clamped, &r.max_truncation);
    r.status = classify(r.lhs_enclosure, r.rhs_enclosure, tol);
    return r;
}

VerificationReport cross_check(int s, int t, const QParam& q, const Rational& tol, const EvalOptions& opts)
{
    const auto decomposition = q_euler_terms(s, t);
    const auto stuffle = stuffle_terms(s, t);
    EvalOptions clamped = opts;
    clamped.clamp_at_cap = true;
    VerificationReport r;
    r.identity = IdentityKind::CrossCheck;
    r.s = s;
    r.t = t;
    r.q = q.value();
    r.tol = tol;
    r.lhs_enclosure = evaluate_rhs(decomposition.terms, q, tol, clamped, &r.max_truncation);
    r.rhs_enclosure = evaluate_rhs(stuffle.terms, q, tol, clamped, &r.max_truncation);
    r.status = classify(r.lhs_enclosure, r.rhs_enclosure, tol);
    return r;
}

// ---------------------------------------------------------------------------
// Proof sums

namespace {

void require_S_indices(int s, int t, int a, int b)
{
    if (s < 1 || t < 1 || a < 0 || a > s - 1 || b < 0 || b > s - 1 - a) {
        throw DomainError("S[s,t,a,b] needs 0 <= a <= s-1 and 0 <= b <= s-1-a");
    }
}

void require_T_indices(int s, int t, int j)
{
    if (s < 1 || t < 1 || j < 1 || j > std::min(s, t)) {
        throw DomainError("T[s,t,j] needs 1 <= j <= min(s,t)");
    }
}

void require_N(long N)
{
    if (N < 2) {
        throw DomainError("proof sums need N >= 2");
    }
}

// Factor tables for a double sum over u, v >= 1, u + v = n <= N of
// q^(eu*u) q^(ev*v) / ([u]^pu [n]^pn).
struct DoubleSumShape {
    int eu;
    int ev;
    int pu;
    int pn;
};

DoubleSumShape shape_S(int s, int t, int a, int b)
{
    // q^((s-1)u) q^((t-1)v) q^((t-1-b)u) q^(av) / ([u]^(s-a-b) [u+v]^(t+a))
    return {(s - 1) + (t - 1 - b), (t - 1) + a, s - a - b, t + a};
}

DoubleSumShape shape_T(int s, int t, int j)
{
    // q^((s-1)u) q^((t-1)v) q^((t-j)u) q^((s-j)v) / [u+v]^(s+t-j)
    return {(s - 1) + (t - j), (t - 1) + (s - j), 0, s + t - j};
}

Enclosure direct_double_sum(const DoubleSumShape& shape, const Rational& q, long N)
{
    const FixedContext ctx(192);
    const auto n = static_cast<std::size_t>(N);
    std::vector<FixedInterval> alpha(n + 1);
    std::vector<FixedInterval> beta(n + 1);
    std::vector<FixedInterval> gamma(n + 1);
    Rational qint(0);
    for (long k = 1; k <= N; ++k) {
        qint += q.pow(k - 1);
        const auto i = static_cast<std::size_t>(k);
        alpha[i] = ctx.from(q.pow(static_cast<long>(shape.eu) * k) / qint.pow(shape.pu));
        beta[i] = ctx.from(q.pow(static_cast<long>(shape.ev) * k));
        gamma[i] = ctx.from(Rational(1) / qint.pow(shape.pn));
    }
    FixedInterval total;
    for (std::size_t total_n = 2; total_n <= n; ++total_n) {
        for (std::size_t uu = 1; uu < total_n; ++uu) {
            FixedContext::add_to(total, ctx.mul(ctx.mul(alpha[uu], beta[total_n - uu]), gamma[total_n]));
        }
    }
    return ctx.to_enclosure(total);
}

Rational direct_double_sum_exact(const DoubleSumShape& shape, const Rational& q, long N)
{
    Rational total;
    for (long total_n = 2; total_n <= N; ++total_n) {
        const Rational qn = q_integer(total_n, q);
        for (long uu = 1; uu < total_n; ++uu) {
            const long vv = total_n - uu;
            total += q.pow(static_cast<long>(shape.eu) * uu) * q.pow(static_cast<long>(shape.ev) * vv)
                   / (q_integer(uu, q).pow(shape.pu) * qn.pow(shape.pn));
        }
    }
    return total;
}

ProofSumCheck finish_check(ProofSumCheck c, const QParam& q)
{
    const Rational tol(Integer(1), Integer("1000000000000000000000000000000"));
    if (c.target.kind == SeriesKind::Phi) {
        c.target_enclosure = phi_q(c.target.comp[0], q, tol);
        c.slack = *phi_q_tail_bound(c.target.comp[0], q, c.N);
    } else {
        c.target_enclosure = zeta_q(c.target.comp, q, tol);
        const auto slack = zeta_q_tail_bound(c.target.comp, q, c.N);
        if (!slack) {
            throw DomainError("no finite tail bound for " + c.target.str() + " at N=" + std::to_string(c.N));
        }
        c.slack = *slack;
    }
    // The truncated sum lies in [value - slack, value].
    const Enclosure window(c.target_enclosure.lo() - c.slack, c.target_enclosure.hi());
    c.consistent = c.direct.intersects(window);
    return c;
}

} // namespace

Enclosure proof_sum_S(int s, int t, int a, int b, const QParam& q, long N)
{
    require_S_indices(s, t, a, b);
    require_N(N);
    return direct_double_sum(shape_S(s, t, a, b), q.value(), N);
}

Enclosure proof_sum_T(int s, int t, int j, const QParam& q, long N)
{
    require_T_indices(s, t, j);
    require_N(N);
    return direct_double_sum(shape_T(s, t, j), q.value(), N);
}

Rational proof_sum_S_exact(int s, int t, int a, int b, const QParam& q, long N)
{
    require_S_indices(s, t, a, b);
    require_N(N);
    return direct_double_sum_exact(shape_S(s, t, a, b), q.value(), N);
}

Rational proof_sum_T_exact(int s, int t, int j, const QParam& q, long N)
{
    require_T_indices(s, t, j);
    require_N(N);
    return direct_double_sum_exact(shape_T(s, t, j), q.value(), N);
}

ProofSumCheck check_S(int s, int t, int a, int b, const QParam& q, long N)
{
    ProofSumCheck c;
    c.kind = ProofSumKind::S;
    c.indices = {s, t, a, b};
    c.target = Target::qzeta(Composition{t + a, s - a - b});
    c.N = N;
    c.direct = proof_sum_S(s, t, a, b, q, N);
    return finish_check(std::move(c), q);
}

ProofSumCheck check_T(int s, int t, int j, const QParam& q, long N)
{
    ProofSumCheck c;
    c.kind = ProofSumKind::T;
    c.indices = {s, t, j};
    c.target = Target::phi(s + t - j);
    c.N = N;
    c.direct = proof_sum_T(s, t, j, q, N);
    return finish_check(std::move(c), q);
}

ProofSumsReport verify_proof_sums(int s, int t, int a, int b, int j, const QParam& q, long N)
{
    require_decomposition_args(s, t);
    return ProofSumsReport{check_S(s, t, a, b, q, N), check_T(s, t, j, q, N)};
}

} // namespace qzeta
