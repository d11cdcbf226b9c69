#include "qzeta/rational_function.hpp"

#include "qzeta/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace qzeta {

namespace {

// Scales `base` to leading coefficient 1; returns the factor removed.
Rational make_monic(MultiPoly& base)
{
    const Rational lead = base.leading_coefficient();
    if (lead != Rational(1)) {
        base *= Rational(1) / lead;
    }
    return lead;
}

// Index of the factor in `list` with the same base, or list.size().
std::size_t find_base(const std::vector<Factor>& list, const MultiPoly& base)
{
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i].base == base) {
            return i;
        }
    }
    return list.size();
}

// Pointwise maximum of exponents over both factor lists.
std::vector<Factor> common_multiple(const std::vector<Factor>& a, const std::vector<Factor>& b)
{
    std::vector<Factor> l = a;
    for (const auto& f : b) {
        const auto i = find_base(l, f.base);
        if (i == l.size()) {
            l.push_back(f);
        } else {
            l[i].exponent = std::max(l[i].exponent, f.exponent);
        }
    }
    return l;
}

class PowerCache {
public:
    const MultiPoly& get(const MultiPoly& base, std::size_t key, unsigned exponent)
    {
        auto& slot = cache_[{key, exponent}];
        if (slot.is_zero()) {
            slot = base.pow(exponent);
        }
        return slot;
    }

private:
    std::map<std::pair<std::size_t, unsigned>, MultiPoly> cache_;
};

// num * (multiple / den) where `multiple` covers `den` factor by factor.
MultiPoly lift(const MultiPoly& num, const std::vector<Factor>& den, const std::vector<Factor>& multiple,
               PowerCache& cache)
{
    MultiPoly r = num;
    for (std::size_t i = 0; i < multiple.size(); ++i) {
        const auto& m = multiple[i];
        const auto j = find_base(den, m.base);
        const unsigned have = j == den.size() ? 0U : den[j].exponent;
        if (m.exponent > have) {
            r *= cache.get(m.base, i, m.exponent - have);
        }
    }
    return r;
}

} // namespace

RationalFunction::RationalFunction(MultiPoly num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(MultiPoly num, const MultiPoly& den) : num_(std::move(num))
{
    if (den.is_zero()) {
        throw DomainError("rational function with zero denominator");
    }
    den_.push_back(Factor{den, 1});
    normalize();
}

RationalFunction::RationalFunction(MultiPoly num, std::vector<Factor> den) : num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

void RationalFunction::normalize()
{
    std::vector<Factor> merged;
    for (auto& f : den_) {
        if (f.base.is_zero()) {
            throw DomainError("rational function with zero denominator");
        }
        if (f.exponent == 0) {
            continue;
        }
        const Rational scale = make_monic(f.base).pow(f.exponent);
        num_ *= Rational(1) / scale;
        if (f.base.is_constant()) {
            continue; // monic constant is 1
        }
        const auto i = find_base(merged, f.base);
        if (i == merged.size()) {
            merged.push_back(std::move(f));
        } else {
            merged[i].exponent += f.exponent;
        }
    }
    den_ = std::move(merged);
    if (num_.is_zero()) {
        den_.clear();
    }
}

MultiPoly RationalFunction::denominator() const
{
    MultiPoly d(1);
    for (const auto& f : den_) {
        d *= f.base.pow(f.exponent);
    }
    return d;
}

RationalFunction RationalFunction::pow(unsigned exponent) const
{
    std::vector<Factor> den = den_;
    for (auto& f : den) {
        f.exponent *= exponent;
    }
    return RationalFunction(num_.pow(exponent), std::move(den));
}

RationalFunction RationalFunction::diff(Var v) const
{
    // (a / prod b_i^e_i)' = (a' prod b_i - a sum_i e_i b_i' prod_{k!=i} b_k) / prod b_i^(e_i+1),
    // where the products run over the factors that actually depend on v.
    std::vector<std::size_t> moving;
    std::vector<MultiPoly> derivs(den_.size());
    for (std::size_t i = 0; i < den_.size(); ++i) {
        derivs[i] = den_[i].base.diff(v);
        if (!derivs[i].is_zero()) {
            moving.push_back(i);
        }
    }
    MultiPoly all(1);
    for (auto i : moving) {
        all *= den_[i].base;
    }
    MultiPoly num = num_.diff(v) * all;
    for (auto i : moving) {
        MultiPoly others(1);
        for (auto k : moving) {
            if (k != i) {
                others *= den_[k].base;
            }
        }
        num -= (num_ * derivs[i]) * others * Rational(static_cast<long>(den_[i].exponent));
    }
    std::vector<Factor> den = den_;
    for (auto i : moving) {
        ++den[i].exponent;
    }
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::substitute(Var v, const Rational& value) const
{
    std::vector<Factor> den = den_;
    for (auto& f : den) {
        f.base = f.base.substitute(v, value);
    }
    return RationalFunction(num_.substitute(v, value), std::move(den));
}

RationalFunction RationalFunction::substitute(Var v, const MultiPoly& value) const
{
    std::vector<Factor> den = den_;
    for (auto& f : den) {
        f.base = f.base.substitute(v, value);
    }
    return RationalFunction(num_.substitute(v, value), std::move(den));
}

Rational RationalFunction::evaluate(const Rational& x, const Rational& y, const Rational& q) const
{
    Rational den(1);
    for (const auto& f : den_) {
        den *= f.base.evaluate(x, y, q).pow(f.exponent);
    }
    if (den.is_zero()) {
        throw DomainError("denominator vanishes at evaluation point");
    }
    return num_.evaluate(x, y, q) / den;
}

MultiPoly RationalFunction::clear_denominators(const std::vector<Factor>& multiplier) const
{
    // Normalize the multiplier the same way denominators are normalized.
    RationalFunction m(MultiPoly(1), multiplier);
    const Rational scale = Rational(1) / m.num_.constant_term();
    for (const auto& f : den_) {
        const auto i = find_base(m.den_, f.base);
        if (i == m.den_.size() || m.den_[i].exponent < f.exponent) {
            throw DomainError("multiplier does not clear the denominator");
        }
    }
    PowerCache cache;
    return lift(num_, den_, m.den_, cache) * scale;
}

std::string RationalFunction::str(const VarNames& names) const
{
    if (den_.empty()) {
        return num_.str(names);
    }
    std::ostringstream os;
    os << "\\frac{" << num_.str(names) << "}{";
    bool first = true;
    for (const auto& f : den_) {
        if (!first) {
            os << '*';
        }
        first = false;
        const bool simple = f.base.size() == 1;
        os << (simple ? "" : "(") << f.base.str(names) << (simple ? "" : ")");
        if (f.exponent > 1) {
            os << "^{" << f.exponent << '}';
        }
    }
    os << '}';
    return os.str();
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs)
{
    const std::array<RationalFunction, 2> pair{*this, rhs};
    *this = sum(pair);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs)
{
    return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs)
{
    std::vector<Factor> den = den_;
    den.insert(den.end(), rhs.den_.begin(), rhs.den_.end());
    *this = RationalFunction(num_ * rhs.num_, std::move(den));
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs)
{
    if (rhs.num_.is_zero()) {
        throw DomainError("division by the zero rational function");
    }
    MultiPoly num = num_;
    for (const auto& f : rhs.den_) {
        num *= f.base.pow(f.exponent);
    }
    std::vector<Factor> den = den_;
    den.push_back(Factor{rhs.num_, 1});
    *this = RationalFunction(std::move(num), std::move(den));
    return *this;
}

RationalFunction RationalFunction::sum(std::span<const RationalFunction> terms)
{
    std::vector<Factor> common;
    for (const auto& t : terms) {
        common = common_multiple(common, t.den_);
    }
    PowerCache cache;
    MultiPoly num;
    for (const auto& t : terms) {
        num += lift(t.num_, t.den_, common, cache);
    }
    return RationalFunction(std::move(num), std::move(common));
}

bool rf_equal(const RationalFunction& f, const RationalFunction& g)
{
    const auto common = common_multiple(f.denominator_factors(), g.denominator_factors());
    PowerCache cache;
    return lift(f.numerator(), f.denominator_factors(), common, cache)
        == lift(g.numerator(), g.denominator_factors(), common, cache);
}

RationalFunction poly_diff(const RationalFunction& f, Var v)
{
    return f.diff(v);
}

} // namespace qzeta
