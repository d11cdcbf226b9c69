#include "qzeta/multipoly.hpp"

#include <sstream>

namespace qzeta {

unsigned Monomial::degree(Var v) const
{
    switch (v) {
    case Var::X: return x;
    case Var::Y: return y;
    case Var::Q: return q;
    }
    return 0;
}

unsigned& Monomial::degree(Var v)
{
    switch (v) {
    case Var::X: return x;
    case Var::Y: return y;
    case Var::Q: break;
    }
    return q;
}

MultiPoly::MultiPoly(const Rational& constant)
{
    if (!constant.is_zero()) {
        terms_.emplace(Monomial{}, constant);
    }
}

MultiPoly MultiPoly::variable(Var v)
{
    Monomial m;
    m.degree(v) = 1;
    return monomial(Rational(1), m);
}

MultiPoly MultiPoly::monomial(const Rational& coeff, Monomial m)
{
    MultiPoly p;
    if (!coeff.is_zero()) {
        p.terms_.emplace(m, coeff);
    }
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational MultiPoly::constant_term() const
{
    const auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& MultiPoly::leading_coefficient() const
{
    return terms_.rbegin()->second;
}

unsigned MultiPoly::degree(Var v) const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.degree(v));
    }
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultiPoly MultiPoly::pow(unsigned exponent) const
{
    MultiPoly result(1);
    MultiPoly base = *this;
    while (exponent > 0) {
        if ((exponent & 1U) != 0) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

MultiPoly MultiPoly::diff(Var v) const
{
    MultiPoly d;
    for (const auto& [m, c] : terms_) {
        const unsigned e = m.degree(v);
        if (e == 0) {
            continue;
        }
        Monomial dm = m;
        dm.degree(v) = e - 1;
        d.terms_.emplace(dm, c * Rational(static_cast<long>(e)));
    }
    return d;
}

MultiPoly MultiPoly::substitute(Var v, const Rational& value) const
{
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest.degree(v) = 0;
        r.add_term(rest, c * value.pow(m.degree(v)));
    }
    return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const
{
    // Group by the degree in v so each power of `value` is formed once.
    std::map<unsigned, MultiPoly> by_degree;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest.degree(v) = 0;
        by_degree[m.degree(v)].add_term(rest, c);
    }
    MultiPoly r;
    MultiPoly power(1);
    unsigned current = 0;
    for (const auto& [e, coeff] : by_degree) {
        while (current < e) {
            power *= value;
            ++current;
        }
        r += coeff * power;
    }
    return r;
}

Rational MultiPoly::evaluate(const Rational& x, const Rational& y, const Rational& q) const
{
    Rational r;
    for (const auto& [m, c] : terms_) {
        r += c * x.pow(m.x) * y.pow(m.y) * q.pow(m.q);
    }
    return r;
}

std::string MultiPoly::str(const VarNames& names) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Highest monomials first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << '-';
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        a = a.abs();
        first = false;
        const bool bare = m == Monomial{};
        bool need_star = false;
        if (bare || a != Rational(1)) {
            os << a.str();
            need_star = true;
        }
        const std::array<unsigned, 3> degs{m.x, m.y, m.q};
        for (std::size_t i = 0; i < 3; ++i) {
            if (degs[i] == 0) {
                continue;
            }
            if (need_star) {
                os << '*';
            }
            os << names[i];
            if (degs[i] > 1) {
                os << '^' << degs[i];
            }
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scale)
{
    if (scale.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scale;
    }
    return *this;
}

} // namespace qzeta
