#pragma once

#include <cstdint>
#include <map>

#include "symgap/errors.hpp"
#include "symgap/polynomial.hpp"
#include "symgap/rational_function.hpp"

namespace symgap {

// pseudo-Riemannian metric on an n-dimensional chart, entries in Q(x)
struct Metric {
    int n = 0;
    std::vector<std::vector<RationalFunction>> g;
};

Metric flat_metric(int n);
// g = x1 (dx_1^2 + ... + dx_n^2)
Metric scaled_flat_metric(int n);
// inverse metric diag(1, phi^2, ..., phi^2) with phi = sign*R^2 + x_2^2+...+x_n^2;
// sign=+1 is the positive-curvature rotationally symmetric model, sign=-1 the
// extrapolated negative-curvature variant
Metric rotational_metric(int n, int sign, const Rational& R);
// ds^2 = dr^2 + f(r)^2 (dx_2^2 + ... + dx_n^2), f rational in r = x_1
Metric revolution_metric(int n, const RationalFunction& f);

// polynomial in momenta p_1..p_n, homogeneous of fixed degree, with
// rational-function coefficients in x
struct MomentumPolynomial {
    int n = 0;
    int degree = 0;
    std::map<Exponents, RationalFunction> terms; // keys |alpha| = degree

    bool is_zero() const { return terms.empty(); }
    void add_term(const Exponents& alpha, const RationalFunction& c);

    MomentumPolynomial operator+(const MomentumPolynomial& o) const;
    MomentumPolynomial operator-(const MomentumPolynomial& o) const;
    MomentumPolynomial operator*(const MomentumPolynomial& o) const;

    std::string to_string(const std::vector<std::string>& names) const;
};

MomentumPolynomial momentum_monomial(int n, const Exponents& alpha,
                                     const RationalFunction& c);

// H = g^{ij} p_i p_j (inverse-metric contraction; no 1/2 factor)
MomentumPolynomial geodesic_hamiltonian(const Metric& m);

// {F,G} = sum_i (dF/dp_i dG/dx_i - dF/dx_i dG/dp_i)
MomentumPolynomial poisson_bracket(const MomentumPolynomial& f, const MomentumPolynomial& g);

// the linear first-order system on the coefficients b_sigma of a degree-d
// integral F = sum b_sigma(x) p^sigma, one equation per momentum monomial
// of degree d+1 in {H, F}
struct DeterminingSystem {
    int n = 0, d = 0;
    std::vector<Exponents> unknowns; // |sigma| = d
    struct Term {
        int unknown;       // index into unknowns
        int dvar;          // -1 for b itself, else the differentiated variable
        RationalFunction c;
    };
    std::vector<std::vector<Term>> equations;
};

DeterminingSystem determining_system(const Metric& m, int d);

// dim Q_d(g) by prolongation-projection: jets of the b_sigma up to order L,
// relations = total derivatives of the determining equations up to order L-1
// evaluated at a generic point; returns the first stabilized codimension
int integral_dimension(const Metric& m, int d, int extra_orders = 6, std::uint64_t seed = 1);

} // namespace symgap
