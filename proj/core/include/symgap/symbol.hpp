#pragma once

#include <vector>

#include "symgap/errors.hpp"
#include "symgap/matrix.hpp"
#include "symgap/polynomial.hpp"

namespace symgap {

// All multi-indices of length n with |sigma| = k, in lexicographic order.
std::vector<Exponents> multi_indices(int n, int k);

// dim S^k(R^n) = C(n+k-1, k)
long symmetric_dim(int n, int k);
long binomial(long n, long k);

// A subspace g_k of S^k T* ⊗ W in "coefficient of x^sigma" coordinates.
// Coordinate layout: index(sigma) * w + a, with sigma enumerated by
// multi_indices(n, k) and 0 <= a < w.
struct SymbolSpace {
    int n = 0; // base dimension
    int w = 0; // fiber dimension
    int k = 0; // order
    std::vector<std::vector<Rational>> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    long ambient_dim() const { return symmetric_dim(n, k) * w; }
};

struct SymbolSequence {
    std::vector<SymbolSpace> spaces;
    bool terminated = false; // last listed space has dim 0
    bool capped = false;     // stopped at the cap: possibly infinite type

    std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& s : spaces) d.push_back(s.dim());
        return d;
    }
};

SymbolSpace full_symbol_space(int n, int w, int k);

// Algebraic prolongation g^(1): u at order k+1 lies in it iff every formal
// partial contraction of u lies in g.
SymbolSpace prolong(const SymbolSpace& g);

// Iterate prolong until a zero space (terminated) or `cap` steps (capped).
SymbolSequence prolongation_sequence(const SymbolSpace& g, int cap = 10);

// Order-1 symbol of the Killing d-tensor equation: kernel of the total
// symmetrization T* ⊗ S^d T -> S^(d+1) T.
SymbolSpace killing_symbol(int n, int d);

// g0_dim plus the sum of the listed symbol dimensions; throws NotFiniteType
// if the sequence is capped.
int dimension_bound(const SymbolSequence& seq, int g0_dim);
int dimension_bound(const std::vector<int>& dims, int g0_dim);

// Classical symbol presets inside T* ⊗ T.
SymbolSpace so_symbol(int n);  // skew endomorphisms
SymbolSpace co_symbol(int n);  // R·id + skew
SymbolSpace gl_symbol(int n);  // everything
SymbolSpace sl_symbol(int n);  // traceless

} // namespace symgap
