#pragma once

#include <map>
#include <string>
#include <vector>

#include "symgap/errors.hpp"
#include "symgap/matrix.hpp"

namespace symgap {

// A negatively graded nilpotent Lie algebra m = g_{-1} + ... + g_{-mu},
// given by structure constants on a homogeneous basis. Basis elements are
// numbered level by level: first all of g_{-1}, then g_{-2}, and so on.
struct GradedNilpotentAlgebra {
    std::vector<int> dims;               // dims[d] = dim g_{-(d+1)}
    std::vector<std::string> names;      // optional basis labels
    // bracket[{i,j}] with i < j only; coordinates in the full basis.
    std::map<std::pair<int, int>, std::vector<Rational>> table;

    int depth() const { return static_cast<int>(dims.size()); }
    int total_dim() const;
    int level_offset(int d) const;       // first index of g_{-(d+1)}
    int level_of(int idx) const;         // depth (1-based): idx in g_{-level}
    std::string name_of(int idx) const;

    void set_bracket(int i, int j, std::vector<Rational> v);
    std::vector<Rational> bracket(int i, int j) const;
    // bilinear extension
    std::vector<Rational> lie(const std::vector<Rational>& x,
                              const std::vector<Rational>& y) const;
};

// Checks grading compatibility, the Jacobi identity, and that g_{-1}
// generates (throws IncompatibleFiltration / NotClosed / NotFundamental).
void validate(const GradedNilpotentAlgebra& m);

// presets
GradedNilpotentAlgebra free_nilpotent_235();      // rank 2, growth (2,3,5)
GradedNilpotentAlgebra heisenberg_algebra(int dim); // dim = 2k+1
GradedNilpotentAlgebra abelian_algebra(int n);
// negative part of the 11-dimensional graded symmetry algebra of the
// submaximal rank-2 model in dimension 6 (depth 4, dims 2,1,2,1)
GradedNilpotentAlgebra submax6_negative();

} // namespace symgap
