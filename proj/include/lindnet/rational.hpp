#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lindnet {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Kept in lowest terms with a positive denominator;
// zero is canonically 0/1.
using Rational = boost::multiprecision::cpp_rational;

// Parses "num" or "num/den" with an optional leading sign on the numerator.
// Throws Error(parse_error) on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// "num" when the denominator is 1, "num/den" otherwise.
std::string format_rational(const Rational& value);

}  // namespace lindnet
