#include "symgap/rational_function.hpp"

namespace symgap {

RationalFunction::RationalFunction(Polynomial num, Polynomial den, unsigned degree_cap)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator polynomial");
    if (num_.nvars() != den_.nvars()) throw std::logic_error("ring mismatch");
    normalize(degree_cap);
}

void RationalFunction::normalize(unsigned degree_cap) {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.nvars(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = poly_gcd(num_, den_, degree_cap);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    // make the denominator grlex-monic
    Rational lc = den_.leading_term().second;
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator*(const Rational& c) const {
    RationalFunction r = *this;
    r.num_ = r.num_ * c;
    if (r.num_.is_zero()) r.den_ = Polynomial::constant(num_.nvars(), Rational(1));
    return r;
}

RationalFunction RationalFunction::derivative(int var) const {
    // (n/d)' = (n'(d/g) - n(d'/g)) / (d * d/g)  with g = gcd(d, d')
    Polynomial dd = den_.derivative(var);
    if (dd.is_zero()) {
        RationalFunction r = *this;
        r.num_ = num_.derivative(var);
        if (r.num_.is_zero()) r.den_ = Polynomial::constant(num_.nvars(), Rational(1));
        return r;
    }
    Polynomial g = poly_gcd(den_, dd);
    Polynomial u = divide_exact(den_, g);
    return RationalFunction(num_.derivative(var) * u - num_ * divide_exact(dd, g), den_ * u);
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (symgap::is_zero(d)) throw DenominatorVanishes("denominator vanishes at sample point");
    return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::substitute(int var, const Rational& value) const {
    return RationalFunction(num_.substitute(var, value), den_.substitute(var, value));
}

RationalFunction RationalFunction::extended(int new_nvars) const {
    RationalFunction r;
    r.num_ = num_.extended(new_nvars);
    r.den_ = den_.extended(new_nvars);
    return r;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
    if (is_polynomial()) {
        Rational d = den_.constant_value();
        if (d == 1) return num_.to_string(names);
        return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
    }
    return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
}

} // namespace symgap
