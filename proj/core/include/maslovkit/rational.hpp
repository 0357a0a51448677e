#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace maslovkit {

// All index arithmetic in this library is exact.  Rationals are arbitrary
// precision and always stored in lowest terms with positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// E(a) = min{ k in Z : k >= a }, the upper integer part used by the
// rotation-block index formula.  E(1/4) = 1, E(-1/2) = 0, E(3) = 3.
Integer ceil_e(const Rational& a);

// [a] = max{ k in Z : k <= a }.
Integer floor_part(const Rational& a);

// {a} = a - [a], in [0, 1).
Rational frac_part(const Rational& a);

bool is_integer(const Rational& a);

// Checked narrowing; throws std::overflow_error if n does not fit.
long long to_long(const Integer& n);

// "p/q" in lowest terms, or "n" when the value is an integer.
std::string rational_to_string(const Rational& a);

// Inverse of rational_to_string.  Accepts "p/q" and "n" with an optional
// leading sign; rejects zero denominators and trailing junk.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace maslovkit
