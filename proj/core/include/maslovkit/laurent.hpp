#pragma once

#include "maslovkit/iteration.hpp"
#include "maslovkit/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace maslovkit {

// A truncated Laurent series with exact rational coefficients: degrees up
// to truncation() are stored exactly; higher degrees are unknown (not
// zero).  Reading past the truncation throws.
class LaurentSeries {
 public:
  explicit LaurentSeries(long long truncation);

  static LaurentSeries monomial(const Rational& coefficient, long long degree,
                                long long truncation);
  // 1/(1-t^2) = sum_{m>=0} t^{2m}, truncated.
  static LaurentSeries geometric_even(long long truncation);

  long long truncation() const { return truncation_; }
  bool is_zero() const;
  // Lowest degree with a nonzero coefficient; requires !is_zero().
  long long min_degree() const;
  // Highest stored degree (coefficients above it and up to the truncation
  // are zero); requires !is_zero().
  long long max_degree() const;

  Rational coeff(long long degree) const;
  void add_term(long long degree, const Rational& value);

  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator-=(const LaurentSeries& other);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  LaurentSeries scaled(const Rational& factor) const;
  // (1 + t) * this; the result's truncation shrinks by one (the top
  // coefficient would need an unknown term).
  LaurentSeries times_one_plus_t() const;

 private:
  void trim();

  long long min_index_ = 0;  // degree of coeff_[0]
  long long truncation_;
  std::vector<Rational> coeff_;
};

std::string series_to_string(const LaurentSeries& s);

// Positivity test for a normalized Morse series M(t): decide whether
//   M(t) - 1/(1-t^2) = (1 + t) U(t)
// can hold with U having nonnegative coefficients.  Writing C = M - geo,
// the only candidate is u_d = c_d - u_{d-1} (u vanishing below C's lowest
// degree); M passes iff every u_d >= 0.  Degrees above
// truncation - guard are not judged: a violation there could still be
// cancelled by unknown terms beyond the truncation.
struct PositivityResult {
  LaurentSeries u;
  std::optional<std::pair<long long, Rational>> first_violation;  // (degree, u value)
  long long checked_up_to = 0;

  bool violated() const { return first_violation.has_value(); }
};

PositivityResult check_positivity(const LaurentSeries& morse_series, long long guard = 4);

// When every stored term of M has even degree, (1+t)U = M - geo splits by
// parity and forces U = 0, i.e. M must equal the geometric series
// exactly.  Returns the resulting verdict, or nullopt when M has an
// odd-degree term (shortcut not applicable).
struct ParityShortcutResult {
  bool violated = false;
  std::optional<long long> mismatch_degree;
};

std::optional<ParityShortcutResult> even_parity_shortcut(const LaurentSeries& morse_series);

// Normalized Morse series of one orbit:
//   M(t) = sum_{m >= 1} sum_l k_l(y^m) t^{i(y^m) + l},
// truncated at degree n_trunc.  Requires a positive mean index (so only
// finitely many iterates can contribute at or below any degree) and a
// complete set of k-vectors over one minimal period.
LaurentSeries build_morse_series(const OrbitConfig& config, long long n_trunc);

}  // namespace maslovkit
