#pragma once

#include <cstdint>
#include <optional>

#include "symgap/gnla.hpp"
#include "symgap/lie_algebra.hpp"
#include "symgap/vector_field.hpp"

namespace symgap {

struct Distribution {
    int ambient = 0;
    std::vector<VectorField> generators;
    std::vector<std::string> var_names; // optional, for printing
};

// underdetermined ODE y' = F(x, y, z, z_1, ..., z_n); coordinates on the
// associated jet space are ordered (x, y, z, z_1, ..., z_n), dim n + 3
struct MongeEquation {
    int n = 0;
    ExpFunction F; // in n + 3 variables
};

MongeEquation monge_hilbert_cartan();                          // y' = (z'')^2
MongeEquation monge_power(int m, int n = 2);                   // y' = (z^(n))^m
MongeEquation monge_perturbed(int n, int j, const Rational& c); // y' = (z^(n))^2 + c (z^(j))^2

// generators D_x = d_x + sum z_{i+1} d_{z_i} + F d_y and d_{z_n}
Distribution monge_distribution(const MongeEquation& eq);
std::vector<std::string> monge_var_names(int n);

struct GrowthVector {
    std::vector<int> dims; // ranks of the weak derived flag at a generic point;
                           // the last entry repeats when the flag stabilizes
                           // short of the ambient dimension
    bool saturated = false;
};

GrowthVector derived_flag(const Distribution& d, std::uint64_t seed = 1,
                          const std::optional<std::vector<Rational>>& point = std::nullopt);

// symbol algebra m = Delta_1 + Delta_2/Delta_1 + ... at a generic point
GradedNilpotentAlgebra symbol_at_point(const Distribution& d, std::uint64_t seed = 1);

// basis of 1-forms annihilating the distribution (rational coefficients)
std::vector<std::vector<RationalFunction>> annihilator(const Distribution& d);

// true iff omega([V, G]) = 0 identically for every generator G and every
// annihilator form omega
bool is_symmetry(const VectorField& v, const Distribution& d);

struct PolynomialSymmetries {
    int dimension = 0;
    std::vector<VectorField> basis;
};

// all symmetries with polynomial coefficients of total degree <= degree_cap
PolynomialSymmetries polynomial_symmetries(const Distribution& d, int degree_cap = 4);

// exact structure constants of a bracket-closed span; throws NotClosed(i,j)
LieAlgebraPresentation structure_constants(const std::vector<VectorField>& fields);

// the seven symmetry generators of y' = (z'')^m on R^5 (integer m >= 2)
std::vector<VectorField> power_symmetries(int m);
// the 2n+3 symmetry generators of y' = (z^(n))^2 + eps^2 (z^(n-1))^2
std::vector<VectorField> perturbed_symmetries(int n, const Rational& eps);

} // namespace symgap
