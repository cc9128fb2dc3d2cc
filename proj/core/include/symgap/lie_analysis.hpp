#pragma once

#include <optional>

#include "symgap/gnla.hpp"
#include "symgap/lie_algebra.hpp"

namespace symgap {

// coordinate vectors spanning a subspace, entries in Q(params)
using Subspace = std::vector<std::vector<RationalFunction>>;

// Jacobi identity on all basis triples, symbolically over Q(params)
bool jacobi_check(const LieAlgebraPresentation& L);

// L = D^0 >= D^1 = [L,L] >= D^2 = [D^1,D^1] >= ... down to 0 (last entry empty)
std::vector<Subspace> derived_series(const LieAlgebraPresentation& L);
// L = C^0 >= C^1 = [L,L] >= C^2 = [L,C^1] >= ... until stationary
std::vector<Subspace> lower_central_series(const LieAlgebraPresentation& L);
Subspace center(const LieAlgebraPresentation& L);

std::vector<long> series_dims(const std::vector<Subspace>& s);

// eigenspace decomposition of ad(x); throws NotDiagonalizable when ad(x)
// is not semisimple with rational spectrum
struct Grading {
    std::vector<Rational> weights;
    std::vector<Subspace> eigenspaces;
};
Grading grading_by_element(const LieAlgebraPresentation& L,
                           const std::vector<RationalFunction>& x);

// char poly coefficients and the trace invariants of ad(x) restricted to an
// ad(x)-invariant subspace; lambda = tr(A^4)/tr(A^2)^2, J = 2(1-2*lambda)
struct SpectrumInvariants {
    std::vector<RationalFunction> char_poly; // c_0 + c_1 t + ... + t^n
    RationalFunction trace2, trace4;
    RationalFunction lambda;
    RationalFunction J;
};
SpectrumInvariants ad_spectrum_invariants(const LieAlgebraPresentation& L,
                                          const std::vector<RationalFunction>& x,
                                          const Subspace& restrict_to);

// consistency of the scalar conformal invariants attached to the 7-dimensional
// submaximal algebra across its three descriptions (parameter m, Cartan
// parameter I, and k = 2m-1)
bool verify_invariant_relations();

// dim H^k(L, L) with adjoint coefficients; requires a parameter-free algebra
long chevalley_eilenberg(const LieAlgebraPresentation& L, int k);

bool is_derivation(const LieAlgebraPresentation& L,
                   const std::vector<std::vector<RationalFunction>>& D);

// append one generator e with [e, x] = D(x); throws NotADerivation
LieAlgebraPresentation extend_by_derivation(const LieAlgebraPresentation& L,
                                            const std::vector<std::vector<RationalFunction>>& D,
                                            const std::string& name);

// graded algebra of a nilpotent parameter-free L along its lower central series
GradedNilpotentAlgebra associated_graded(const LieAlgebraPresentation& L);

// named models
LieAlgebraPresentation sl2_presentation();
LieAlgebraPresentation heisenberg_presentation(int dim); // dim = 2k+1
LieAlgebraPresentation cartan7();                         // parameter I
LieAlgebraPresentation w7();                              // parameter m, generic
LieAlgebraPresentation w7_jordan();                       // the m = 1/2 degeneration
LieAlgebraPresentation submax9();                         // parameter eps
LieAlgebraPresentation graded11_presentation();                     // 11-dim graded maximal model

} // namespace symgap
