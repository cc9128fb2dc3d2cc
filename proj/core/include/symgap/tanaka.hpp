#pragma once

#include <optional>

#include "symgap/gnla.hpp"

namespace symgap {

// An element of g_k (k >= 0) as a degree-k map on m: img[j] is the image of
// the j-th basis element of m, written in the coordinates of the target
// space: the relevant level of m when the target degree is negative, or the
// already-computed basis of g_{target} when it is non-negative. An empty
// img[j] means the target space is zero.
struct GradedMap {
    int degree = 0;
    std::vector<std::vector<Rational>> img;
};

struct TanakaAlgebra {
    GradedNilpotentAlgebra m;
    std::vector<std::vector<GradedMap>> nonneg; // nonneg[k] = basis of g_k
    bool terminated = false;                    // last computed component is zero
    bool capped = false;

    std::vector<int> nonneg_dims() const {
        std::vector<int> d;
        for (const auto& lvl : nonneg) d.push_back(static_cast<int>(lvl.size()));
        return d;
    }
    int total_dim() const {
        int t = m.total_dim();
        for (const auto& lvl : nonneg) t += static_cast<int>(lvl.size());
        return t;
    }
};

// Prescribed g0 given as matrices on m (row-major total_dim x total_dim,
// entry [a][b] = coefficient of e_a in the image of e_b).
using Endomorphism = std::vector<std::vector<Rational>>;

TanakaAlgebra tanaka_prolongation(const GradedNilpotentAlgebra& m,
                                  const std::optional<std::vector<Endomorphism>>& g0 = std::nullopt,
                                  int cap = 12);

// Total dimension of a terminated prolongation; throws NotFiniteType if capped.
int dimension_certificate(const TanakaAlgebra& t);

// Residual check of the derivation identity for every stored element on all
// basis pairs of m; returns true iff all residuals vanish.
bool derivation_residuals_vanish(const TanakaAlgebra& t);

// Rank of the restriction map g_k -> Hom(g_{-1}, .) — injective for
// fundamental m; exposed for testing.
bool restriction_injective(const TanakaAlgebra& t, int k);

// Structure constants of the full prolongation on the concatenated basis
// (all of m, then g_0, g_1, ...). Brackets between non-negative components
// are recovered from the defining identity [[u,v],X] = [u,[v,X]] - [v,[u,X]].
struct AssembledAlgebra {
    int dim = 0;
    std::vector<int> degrees; // degree of each basis element
    std::map<std::pair<int, int>, std::vector<Rational>> table; // i < j

    std::vector<Rational> bracket(int i, int j) const;
};

AssembledAlgebra assemble(const TanakaAlgebra& t); // requires terminated
bool jacobi_holds(const AssembledAlgebra& a);

} // namespace symgap
