#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symentropy {

// Arbitrary-precision rational, always kept in lowest terms with a
// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

// Parses "p/q", "p", or a finite decimal "1.25" exactly.
Rational parse_rational(const std::string& text);

}  // namespace symentropy
