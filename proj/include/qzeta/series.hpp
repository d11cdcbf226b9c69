#pragma once

#include "qzeta/enclosure.hpp"
#include "qzeta/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qzeta {

/// Exponent list (s1, ..., sm) of a nested zeta sum. Admissible iff s1 >= 2.
class Composition {
public:
    /// Throws DomainError on an empty list or an exponent below 1.
    explicit Composition(std::vector<int> exponents);
    Composition(std::initializer_list<int> exponents) : Composition(std::vector<int>(exponents)) {}

    /// "2,1" -> (2, 1)
    static Composition parse(std::string_view text);

    const std::vector<int>& exponents() const { return exponents_; }
    int operator[](std::size_t i) const { return exponents_[i]; }
    std::size_t depth() const { return exponents_.size(); }
    int weight() const;
    bool admissible() const { return exponents_.front() >= 2; }
    std::string str() const;

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> exponents_;
};

/// Deformation parameter, strictly inside (0, 1).
class QParam {
public:
    /// Throws DomainError unless 0 < q < 1.
    explicit QParam(Rational q);
    const Rational& value() const { return q_; }

private:
    Rational q_;
};

enum class SeriesKind { QZeta, Phi, ClassicalZeta };

/// One of the sums the library evaluates: zeta[s1..sm], phi[s] or zeta(s1..sm).
struct Target {
    SeriesKind kind = SeriesKind::QZeta;
    Composition comp{2};

    static Target qzeta(Composition c) { return {SeriesKind::QZeta, std::move(c)}; }
    static Target phi(int s) { return {SeriesKind::Phi, Composition{s}}; }
    static Target classical(Composition c) { return {SeriesKind::ClassicalZeta, std::move(c)}; }

    /// Throws DomainError naming the violated precondition.
    void check_admissible() const;
    /// "zeta[2,1]", "phi[3]", "zeta(2,1)"
    std::string str() const;

    friend auto operator<=>(const Target&, const Target&) = default;
};

struct EvalOptions {
    /// Largest truncation point a single series may use.
    std::int64_t max_terms = 1'000'000;
    /// At the cap, return the (wider) enclosure instead of throwing.
    bool clamp_at_cap = false;
};

struct Evaluation {
    Enclosure value;
    std::int64_t truncation = 0;
    bool capped = false;
};

struct EvalRequest {
    Target target;
    std::optional<QParam> q; // absent for classical targets
    Rational tol;
};

/// [k]_q = 1 + q + ... + q^(k-1), exact. Throws DomainError for k < 1.
Rational q_integer(long k, const Rational& q);

/// Enclosure of zeta[s1..sm] of width <= tol.
Enclosure zeta_q(const Composition& comp, const QParam& q, const Rational& tol, const EvalOptions& opts = {});
/// Enclosure of phi[s] = sum (n-1) q^((s-1)n) / [n]^s of width <= tol.
Enclosure phi_q(int s, const QParam& q, const Rational& tol, const EvalOptions& opts = {});
/// Enclosure of the classical zeta(s) or zeta(s, t) of width <= tol (depth <= 2).
Enclosure zeta_classical(const Composition& comp, const Rational& tol, const EvalOptions& opts = {});

Evaluation evaluate(const EvalRequest& request, const EvalOptions& opts = {});
Evaluation evaluate_zeta_q(const Composition& comp, const QParam& q, const Rational& tol, const EvalOptions& opts = {});
Evaluation evaluate_phi_q(int s, const QParam& q, const Rational& tol, const EvalOptions& opts = {});
Evaluation evaluate_zeta_classical(const Composition& comp, const Rational& tol, const EvalOptions& opts = {});

/// Exact nested partial sum of zeta[comp] over N >= k1 > ... > km >= 1.
/// Independent of the enclosure path: plain rational arithmetic, no tail.
Rational zeta_q_bruteforce(const Composition& comp, const QParam& q, long N);

/// Rigorous bound on zeta[comp] minus its partial sum up to N.
/// Empty when the bound is not finite at this N.
std::optional<Rational> zeta_q_tail_bound(const Composition& comp, const QParam& q, long N);
std::optional<Rational> phi_q_tail_bound(int s, const QParam& q, long N);

} // namespace qzeta
