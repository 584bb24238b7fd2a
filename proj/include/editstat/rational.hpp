#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace editstat {

// Objectives and variances are kept as exact fractions so that tie detection
// and comparisons never depend on floating-point rounding.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "8/7"; integers render without the denominator ("3").
std::string to_fraction(const Rational& r);

// Fixed-point rendering with the given number of places, rounding half away
// from zero. to_decimal(8/7, 6) == "1.142857".
std::string to_decimal(const Rational& r, unsigned places = 6);

// Inverse of to_fraction; accepts "a/b" and plain integers.
Rational parse_fraction(std::string_view text);

}  // namespace editstat
