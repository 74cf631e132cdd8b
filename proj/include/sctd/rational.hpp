#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace sctd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integer, or decimal literals ("0.25" becomes 1/4 exactly).
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

// "undefined" for nullopt.
std::string to_string(const std::optional<Rational>& r);

double to_double(const Rational& r);

}  // namespace sctd
