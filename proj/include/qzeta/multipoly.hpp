#pragma once

#include "qzeta/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>

namespace qzeta {

enum class Var { X, Y, Q };

struct Monomial {
    unsigned x = 0;
    unsigned y = 0;
    unsigned q = 0;

    unsigned degree(Var v) const;
    unsigned& degree(Var v);
    Monomial operator*(const Monomial& o) const { return {x + o.x, y + o.y, q + o.q}; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using VarNames = std::array<std::string, 3>;
inline const VarNames default_var_names{"X", "Y", "Q"};

/// Sparse polynomial in X, Y, Q with rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational& constant); // NOLINT(google-explicit-constructor)
    MultiPoly(long constant) : MultiPoly(Rational(constant)) {} // NOLINT(google-explicit-constructor)

    static MultiPoly variable(Var v);
    static MultiPoly monomial(const Rational& coeff, Monomial m);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    /// Coefficient of the largest monomial in the term order; the polynomial must be nonzero.
    const Rational& leading_coefficient() const;
    unsigned degree(Var v) const;
    std::size_t size() const { return terms_.size(); }

    MultiPoly pow(unsigned exponent) const;
    MultiPoly diff(Var v) const;
    MultiPoly substitute(Var v, const Rational& value) const;
    MultiPoly substitute(Var v, const MultiPoly& value) const;
    Rational evaluate(const Rational& x, const Rational& y, const Rational& q) const;

    std::string str(const VarNames& names = default_var_names) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& scale);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& b) { return a *= b; }
    friend MultiPoly operator*(const Rational& a, MultiPoly b) { return b *= a; }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

} // namespace qzeta
