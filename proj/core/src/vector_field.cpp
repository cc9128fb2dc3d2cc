#include "symgap/vector_field.hpp"

namespace symgap {

VectorField VectorField::operator+(const VectorField& o) const {
    if (ambient != o.ambient) throw std::invalid_argument("ambient dimension mismatch");
    VectorField r(ambient);
    for (int j = 0; j < ambient; ++j) r.coeff[j] = coeff[j] + o.coeff[j];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    if (ambient != o.ambient) throw std::invalid_argument("ambient dimension mismatch");
    VectorField r(ambient);
    for (int j = 0; j < ambient; ++j) r.coeff[j] = coeff[j] - o.coeff[j];
    return r;
}

VectorField VectorField::operator*(const Rational& c) const {
    VectorField r(ambient);
    for (int j = 0; j < ambient; ++j) r.coeff[j] = coeff[j] * c;
    return r;
}

std::string VectorField::to_string(const std::vector<std::string>& names) const {
    std::string s;
    for (int j = 0; j < ambient; ++j) {
        if (coeff[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeff[j].to_string(names) + ")*d_" + names.at(j);
    }
    return s.empty() ? "0" : s;
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
    if (v.ambient != w.ambient) throw std::invalid_argument("ambient dimension mismatch");
    int n = v.ambient;
    VectorField r(n);
    for (int j = 0; j < n; ++j) {
        ExpFunction acc(n);
        for (int i = 0; i < n; ++i) {
            if (!v.coeff[i].is_zero()) acc = acc + v.coeff[i] * w.coeff[j].derivative(i);
            if (!w.coeff[i].is_zero()) acc = acc - w.coeff[i] * v.coeff[j].derivative(i);
        }
        r.coeff[j] = acc;
    }
    return r;
}

} // namespace symgap
