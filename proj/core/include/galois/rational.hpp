#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace galois {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", integers and plain decimals ("0.3", ".5", "1").
Rational parse_rational(std::string_view text);

// "p/q", always with an explicit denominator.
std::string to_fraction_string(const Rational& r);

// Truncated decimal without trailing zeros: 2/3 -> "0.66", 1/2 -> "0.5", 1 -> "1".
std::string to_truncated_decimal(const Rational& r, int digits = 2);

// Nearest double rounded to `digits` decimal places.
double to_rounded_double(const Rational& r, int digits = 4);

} // namespace galois
