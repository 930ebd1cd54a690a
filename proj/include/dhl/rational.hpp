#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace dhl {

// Exact rational with arbitrary-size numerator and denominator.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
// input or zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" with q > 0; integers print as "p/1" so the text always re-parses to
// the same value and reads as a rational.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

bool is_integer(const Rational& r);

// r mod m for m > 0, result in [0, m).
Rational floor_mod(const Rational& r, const Rational& m);

}  // namespace dhl
