#pragma once

#include <map>
#include <string>
#include <vector>

#include "symgap/exp_function.hpp"

namespace symgap {

// Restricted expression grammar: identifiers, + - * / ^, integer exponents,
// rational constants "p/q", exp(linear form with rational coefficients).
// Parameters bound in `params` are substituted by their rational values
// (this is what makes exp(-e*x) with e=1 a concrete frequency).
ExpFunction parse_expression(const std::string& text,
                             const std::vector<std::string>& variables,
                             const std::map<std::string, Rational>& params = {});

// Convenience wrappers; throw ParseError if the value has exponential terms
// (resp. a non-trivial denominator).
RationalFunction parse_rational_function(const std::string& text,
                                         const std::vector<std::string>& variables,
                                         const std::map<std::string, Rational>& params = {});
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables,
                            const std::map<std::string, Rational>& params = {});

} // namespace symgap
