#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace drqsim {

// Time in integer units. The simulator never uses fractional time.
using Time = std::int64_t;

using Rational = boost::rational<std::int64_t>;

// Compare rationals only against other Rationals: boost 1.74 recurses
// forever on mixed rational<int64_t>/int comparisons.

// Renders a rational at two decimal places, rounding half away from zero.
std::string format_fixed2(Rational value);

// Parses "0.04", "4/100", "12", "-3.5" exactly. Throws std::invalid_argument.
Rational parse_decimal(std::string_view text);

// Nearest multiple of 1/100, half away from zero.
Rational round2(Rational value);

}  // namespace drqsim
