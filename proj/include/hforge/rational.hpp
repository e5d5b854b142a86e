#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hforge/errors.hpp"

namespace hforge {

using Integer = boost::multiprecision::cpp_int;

// Always held in canonical form: gcd(num, den) == 1, den > 0.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const Integer& v) { return v.sign(); }

// Accepts "p" or "p/q" with optional leading sign on p, q a positive integer
// literal. Throws ParseError on anything else (including "1/-2" and "1/0").
Rational parse_rational(const std::string& text);

// Canonical serialization: "p" when the denominator is 1, else "p/q".
std::string rational_string(const Rational& r);

// Exact fixed-point rendering with the given number of fractional digits,
// rounding half away from zero. Used where decimal text is required (SVG).
std::string decimal_string(const Rational& r, int digits);

Integer binomial(long n, long k);  // 0 outside the Pascal triangle

Integer ipow(Integer base, unsigned long exp);

// Largest r with r^k <= v; *exact set when r^k == v. Pre: v >= 0, k >= 1.
Integer kth_root_floor(const Integer& v, unsigned long k, bool* exact);

}  // namespace hforge
