#pragma once

#include "symgap/exp_function.hpp"

namespace symgap {

// V = sum_j coeff[j] d/dx_j on R^ambient; coefficients live in the
// exp-polynomial ring over the ambient coordinates.
struct VectorField {
    int ambient = 0;
    std::vector<ExpFunction> coeff;

    VectorField() = default;
    explicit VectorField(int n) : ambient(n), coeff(n, ExpFunction(n)) {}

    bool is_rational() const {
        for (const auto& c : coeff)
            if (!c.is_rational()) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator*(const Rational& c) const;

    std::string to_string(const std::vector<std::string>& names) const;
};

// exact commutator: [V,W]^j = sum_i (V^i d_i W^j - W^i d_i V^j)
VectorField lie_bracket(const VectorField& v, const VectorField& w);

} // namespace symgap
