#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace statel {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q", decimal ("0.25", "-1.5") and integer text; always exact.
Rat parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rat& r);

double rational_to_double(const Rat& r);

}  // namespace statel
