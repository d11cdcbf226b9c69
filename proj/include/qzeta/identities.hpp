#pragma once

#include "qzeta/enclosure.hpp"
#include "qzeta/series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

/// One signed summand coeff * (1-q)^eps_power * target of an identity's right side.
struct ZetaTerm {
    Integer coeff;
    unsigned eps_power = 0;
    Target target;

    friend bool operator==(const ZetaTerm&, const ZetaTerm&) = default;
};

enum class IdentityKind { EulerClassical, QDecomposition, QStuffle, CrossCheck };

/// "euler", "qdecomp", "stuffle", "cross"
std::string identity_name(IdentityKind kind);
IdentityKind parse_identity_name(const std::string& name);
bool is_q_identity(IdentityKind kind);

/// lhs.first * lhs.second = sum of terms.
struct IdentityInstance {
    IdentityKind id = IdentityKind::QDecomposition;
    int s = 2;
    int t = 2;
    std::pair<Target, Target> lhs;
    std::vector<ZetaTerm> terms;
};

/// Merges equal (target, eps_power) pairs, drops zero coefficients and sorts
/// by (target kind, composition, eps_power).
std::vector<ZetaTerm> canonicalize_terms(std::vector<ZetaTerm> terms);

/// zeta(s)zeta(t) = sum_a C(a+t-1,t-1) zeta(t+a,s-a) + sum_a C(a+s-1,s-1) zeta(s+a,t-a).
IdentityInstance euler_terms(int s, int t);
/// The q-analogue with (1-q)^b corrections and the subtracted phi terms.
IdentityInstance q_euler_terms(int s, int t);
/// zeta[s]zeta[t] = zeta[s,t] + zeta[t,s] + zeta[s+t] + (1-q) zeta[s+t-1].
IdentityInstance stuffle_terms(int s, int t);

enum class Status { Verified, Violated, Inconclusive };
std::string status_name(Status s);

struct VerificationReport {
    IdentityKind identity = IdentityKind::QDecomposition;
    int s = 2;
    int t = 2;
    std::optional<Rational> q;
    Rational tol;
    Enclosure lhs_enclosure;
    Enclosure rhs_enclosure;
    Status status = Status::Inconclusive;
    std::int64_t max_truncation = 0;
};

/// Verified iff the enclosures intersect and both widths are <= tol;
/// violated iff they are disjoint.
Status classify(const Enclosure& lhs, const Enclosure& rhs, const Rational& tol);

/// Signed, (1-q)^power-weighted sum of the terms, total width <= tol.
/// `max_truncation` (if given) is raised to the largest truncation used.
Enclosure evaluate_rhs(const std::vector<ZetaTerm>& terms, const std::optional<QParam>& q, const Rational& tol,
                       const EvalOptions& opts, std::int64_t* max_truncation = nullptr);

/// Product of the two left-hand factors, width <= tol.
Enclosure evaluate_lhs(const std::pair<Target, Target>& lhs, const std::optional<QParam>& q, const Rational& tol,
                       const EvalOptions& opts, std::int64_t* max_truncation = nullptr);

/// Evaluates both sides of `inst`. Series that hit the truncation cap are
/// clamped, which widens the enclosure and yields an inconclusive report.
VerificationReport evaluate_identity(const IdentityInstance& inst, const std::optional<QParam>& q,
                                     const Rational& tol, const EvalOptions& opts = {});

/// Compares the right sides of q_euler_terms(s,t) (reported as lhs) and
/// stuffle_terms(s,t) (reported as rhs).
VerificationReport cross_check(int s, int t, const QParam& q, const Rational& tol, const EvalOptions& opts = {});

// ---------------------------------------------------------------------------
// Rearrangement sums from the proof of the q-decomposition.

enum class ProofSumKind { S, T };

struct ProofSumCheck {
    ProofSumKind kind = ProofSumKind::S;
    std::vector<int> indices;   // (s,t,a,b) or (s,t,j)
    Target target;              // zeta[t+a, s-a-b] or phi[s+t-j]
    long N = 0;
    Enclosure direct;           // truncated double sum over u+v = n <= N
    Enclosure target_enclosure; // full series value
    Rational slack;             // rigorous bound on target minus its partial sum up to N
    bool consistent = false;
};

/// S[s,t,a,b] truncated at n <= N, summed in the un-rearranged (u, v) form.
/// Requires 0 <= a <= s-1, 0 <= b <= s-1-a.
Enclosure proof_sum_S(int s, int t, int a, int b, const QParam& q, long N);
/// T[s,t,j] truncated at n <= N. Requires 1 <= j <= min(s,t).
Enclosure proof_sum_T(int s, int t, int j, const QParam& q, long N);
/// Exact versions for small N.
Rational proof_sum_S_exact(int s, int t, int a, int b, const QParam& q, long N);
Rational proof_sum_T_exact(int s, int t, int j, const QParam& q, long N);

ProofSumCheck check_S(int s, int t, int a, int b, const QParam& q, long N);
ProofSumCheck check_T(int s, int t, int j, const QParam& q, long N);

struct ProofSumsReport {
    ProofSumCheck S;
    ProofSumCheck T;
    bool consistent() const { return S.consistent && T.consistent; }
};

/// Checks S[s,t,a,b] against zeta[t+a, s-a-b] and T[s,t,j] against phi[s+t-j]:
/// the direct sum must not exceed the series and must fall short of it by
/// at most the tail bound at N. Requires s, t >= 2 and N >= 2.
ProofSumsReport verify_proof_sums(int s, int t, int a, int b, int j, const QParam& q, long N);

} // namespace qzeta
