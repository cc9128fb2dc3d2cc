#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace symgap {

using Integer = boost::multiprecision::cpp_int;
// Canonical arbitrary-precision rational: gcd-reduced, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

} // namespace symgap
