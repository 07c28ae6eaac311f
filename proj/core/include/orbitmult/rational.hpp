#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbitmult/errors.hpp"

namespace orbitmult {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical reduced form with a positive denominator, which is exactly the
// contract the solver relies on for its certificates.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

// Parses "p/q" or "p". Throws ParseError on malformed input or q == 0.
Rational parse_rational(const std::string& text);

// Prints "p" when the denominator is 1 and "p/q" otherwise. Never a float.
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

} // namespace orbitmult
