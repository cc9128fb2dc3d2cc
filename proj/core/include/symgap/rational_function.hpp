#pragma once

#include <string>
#include <vector>

#include "symgap/errors.hpp"
#include "symgap/polynomial.hpp"

namespace symgap {

// Ratio of multivariate polynomials over Q, kept gcd-reduced (up to the
// degree cap) with a grlex-monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(Polynomial::constant(0, Rational(1))) {}
    explicit RationalFunction(const Polynomial& num)
        : num_(num), den_(Polynomial::constant(num.nvars(), Rational(1))) {}
    RationalFunction(Polynomial num, Polynomial den, unsigned degree_cap = 20);

    static RationalFunction constant(int nvars, const Rational& c) {
        return RationalFunction(Polynomial::constant(nvars, c));
    }
    static RationalFunction variable(int nvars, int i) {
        return RationalFunction(Polynomial::variable(nvars, i));
    }

    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator*(const Rational& c) const;
    // cross-multiplied; avoids any gcd work
    bool operator==(const RationalFunction& o) const {
        return num_ * o.den_ == o.num_ * den_;
    }

    RationalFunction derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const; // throws DenominatorVanishes
    RationalFunction substitute(int var, const Rational& value) const;
    RationalFunction extended(int new_nvars) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    Polynomial num_, den_;
    void normalize(unsigned degree_cap);
};

inline RationalFunction operator*(const Rational& c, const RationalFunction& f) { return f * c; }

} // namespace symgap
