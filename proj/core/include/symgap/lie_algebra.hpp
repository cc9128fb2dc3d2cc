#pragma once

#include <map>
#include <string>
#include <vector>

#include "symgap/errors.hpp"
#include "symgap/rational_function.hpp"

namespace symgap {

// Finite-dimensional Lie algebra by structure constants over Q(params).
// Constants are rational functions in the declared parameters; an empty
// parameter list means plain Q.
struct LieAlgebraPresentation {
    std::vector<std::string> basis;
    std::vector<std::string> params;
    std::map<std::pair<int, int>, std::vector<RationalFunction>> table; // keys i < j

    int dim() const { return static_cast<int>(basis.size()); }
    int nparams() const { return static_cast<int>(params.size()); }

    RationalFunction scalar(const Rational& c) const {
        return RationalFunction::constant(nparams(), c);
    }

    void set_bracket(int i, int j, std::vector<RationalFunction> v);
    std::vector<RationalFunction> bracket(int i, int j) const;
    std::vector<RationalFunction> lie(const std::vector<RationalFunction>& x,
                                      const std::vector<RationalFunction>& y) const;

    // matrix of ad(x) in the basis: column j = [x, e_j]
    std::vector<std::vector<RationalFunction>> ad(const std::vector<RationalFunction>& x) const;

    // substitute rational values for all parameters, yielding an algebra over Q
    LieAlgebraPresentation specialize(const std::vector<Rational>& values) const;
};

} // namespace symgap
