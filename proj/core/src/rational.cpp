#include "maslovkit/rational.hpp"

#include <limits>
#include <stdexcept>

namespace maslovkit {

Integer floor_part(const Rational& a) {
  const Integer num = numerator(a);
  const Integer den = denominator(a);  // > 0 by canonical form
  Integer q = num / den;               // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Integer ceil_e(const Rational& a) { return -floor_part(-a); }

Rational frac_part(const Rational& a) { return a - Rational(floor_part(a)); }

bool is_integer(const Rational& a) { return denominator(a) == 1; }

long long to_long(const Integer& n) {
  static const Integer lo = std::numeric_limits<long long>::min();
  static const Integer hi = std::numeric_limits<long long>::max();
  if (n < lo || n > hi) throw std::overflow_error("integer does not fit in long long");
  return n.convert_to<long long>();
}

std::string rational_to_string(const Rational& a) {
  std::string s = numerator(a).str();
  if (denominator(a) != 1) {
    s += '/';
    s += denominator(a).str();
  }
  return s;
}

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto read_digits = [&](Integer& out) -> bool {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') return false;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      out = out * 10 + (text[pos] - '0');
      ++pos;
    }
    return true;
  };
  Integer num;
  if (!read_digits(num)) return std::nullopt;
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!read_digits(den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;
  Rational r(num, den);
  return negative ? -r : r;
}

}  // namespace maslovkit
