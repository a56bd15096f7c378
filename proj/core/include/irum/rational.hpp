#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace irum {

// Arbitrary-precision rational. boost keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need: every
// probability in this library is stored and compared exactly.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "3", "-3", "3/4" and finite decimals like "0.4" (converted
// exactly, 0.4 -> 2/5). Throws InputError on anything else.
Rational parse_rational(std::string_view text);

// "p/q", or "p" alone when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace irum
