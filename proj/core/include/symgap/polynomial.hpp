#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "symgap/rational.hpp"

namespace symgap {

// Exponent vector; length equals the number of variables of the ring.
using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

// Graded lexicographic order with the declared variable order.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b; // lex on equal degree
    }
};

// Sparse multivariate polynomial over Q. Terms never store zero coefficients.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(const Exponents& e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    unsigned total_degree() const; // 0 for the zero polynomial
    unsigned degree_in(int var) const;
    Rational coefficient(const Exponents& e) const;
    // Leading term under grlex; requires nonzero.
    const std::pair<const Exponents, Rational>& leading_term() const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned k) const;
    bool operator==(const Polynomial& o) const {
        if (nvars_ == o.nvars_) return terms_ == o.terms_;
        return (*this - o).is_zero();
    }

    Polynomial derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    // Substitute one variable by a rational constant (ring unchanged).
    Polynomial substitute(int var, const Rational& value) const;
    // Substitute one variable by a polynomial of the same ring.
    Polynomial substitute(int var, const Polynomial& value) const;
    // Extend the ring by appending extra variables (exponent 0 on them).
    Polynomial extended(int new_nvars) const;

    // Rational content: gcd of numerators / lcm of denominators, sign of leading term.
    Rational content() const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Exact division; throws std::domain_error if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// Multivariate gcd (primitive PRS); result has positive leading coefficient.
// degree_cap: above this total degree the routine returns 1 (content-only reduction).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b, unsigned degree_cap = 20);

} // namespace symgap
