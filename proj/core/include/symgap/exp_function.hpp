#pragma once

#include <map>
#include <string>
#include <vector>

#include "symgap/rational_function.hpp"

namespace symgap {

// Finite sum  sum_lambda c_lambda(x) * exp(lambda . x)  with rational frequency
// vectors lambda and rational-function coefficients. Distinct exponentials are
// linearly independent over rational functions, so identity testing is
// per-frequency and exact.
class ExpFunction {
public:
    using Frequency = std::vector<Rational>;
    using TermMap = std::map<Frequency, RationalFunction>;

    explicit ExpFunction(int nvars = 0) : nvars_(nvars) {}
    ExpFunction(const RationalFunction& f) : nvars_(f.nvars()) {
        if (!f.is_zero()) terms_.emplace(Frequency(nvars_, Rational(0)), f);
    }
    static ExpFunction constant(int nvars, const Rational& c) {
        return ExpFunction(RationalFunction::constant(nvars, c));
    }
    static ExpFunction variable(int nvars, int i) {
        return ExpFunction(RationalFunction::variable(nvars, i));
    }
    static ExpFunction exponential(const Frequency& freq) {
        ExpFunction e(static_cast<int>(freq.size()));
        e.add_term(freq, RationalFunction::constant(e.nvars_, Rational(1)));
        return e;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    // True if the only frequency present is zero.
    bool is_rational() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Frequency(nvars_, Rational(0)));
    }
    RationalFunction rational_part() const {
        auto it = terms_.find(Frequency(nvars_, Rational(0)));
        return it == terms_.end() ? RationalFunction::constant(nvars_, Rational(0)) : it->second;
    }

    void add_term(const Frequency& freq, const RationalFunction& c);

    ExpFunction operator-() const;
    ExpFunction operator+(const ExpFunction& o) const;
    ExpFunction operator-(const ExpFunction& o) const;
    ExpFunction operator*(const ExpFunction& o) const;
    ExpFunction operator*(const Rational& c) const;
    // Division by a purely rational ExpFunction only.
    ExpFunction operator/(const ExpFunction& o) const;
    bool operator==(const ExpFunction& o) const { return (*this - o).is_zero(); }

    // d/dx_i (c e^{l.x}) = (dc/dx_i + l_i c) e^{l.x}
    ExpFunction derivative(int var) const;
    ExpFunction substitute(int var, const Rational& value) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_;
    TermMap terms_;
};

inline ExpFunction operator*(const Rational& c, const ExpFunction& f) { return f * c; }

} // namespace symgap
