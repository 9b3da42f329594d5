#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace artal {

using Rational = boost::multiprecision::cpp_rational;

/// "p" when the denominator is 1, otherwise "p/q" with q > 0 and gcd(p,q) = 1.
std::string format_rational(const Rational& r);

/// Accepts "p" or "p/q" with optional sign on either part; q must be nonzero.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace artal
