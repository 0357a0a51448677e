#include "maslovkit/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace maslovkit {

LaurentSeries::LaurentSeries(long long truncation) : truncation_(truncation) {}

LaurentSeries LaurentSeries::monomial(const Rational& coefficient, long long degree,
                                      long long truncation) {
  LaurentSeries s(truncation);
  s.add_term(degree, coefficient);
  return s;
}

LaurentSeries LaurentSeries::geometric_even(long long truncation) {
  LaurentSeries s(truncation);
  for (long long d = 0; d <= truncation; d += 2) s.add_term(d, 1);
  return s;
}

bool LaurentSeries::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c == 0; });
}

long long LaurentSeries::min_degree() const {
  for (std::size_t i = 0; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) return min_index_ + static_cast<long long>(i);
  throw std::logic_error("min_degree of the zero series");
}

long long LaurentSeries::max_degree() const {
  for (std::size_t i = coeff_.size(); i > 0; --i)
    if (coeff_[i - 1] != 0) return min_index_ + static_cast<long long>(i - 1);
  throw std::logic_error("max_degree of the zero series");
}

Rational LaurentSeries::coeff(long long degree) const {
  if (degree > truncation_)
    throw std::out_of_range("coefficient beyond the truncation is unknown");
  if (degree < min_index_ || degree >= min_index_ + static_cast<long long>(coeff_.size()))
    return 0;
  return coeff_[static_cast<std::size_t>(degree - min_index_)];
}

void LaurentSeries::add_term(long long degree, const Rational& value) {
  if (degree > truncation_)
    throw std::out_of_range("cannot store a coefficient beyond the truncation");
  if (value == 0) return;
  if (coeff_.empty()) {
    min_index_ = degree;
    coeff_.push_back(value);
    return;
  }
  if (degree < min_index_) {
    coeff_.insert(coeff_.begin(), static_cast<std::size_t>(min_index_ - degree), Rational(0));
    min_index_ = degree;
  } else if (degree >= min_index_ + static_cast<long long>(coeff_.size())) {
    coeff_.resize(static_cast<std::size_t>(degree - min_index_) + 1, Rational(0));
  }
  coeff_[static_cast<std::size_t>(degree - min_index_)] += value;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
  truncation_ = std::min(truncation_, other.truncation_);
  for (std::size_t i = 0; i < other.coeff_.size(); ++i) {
    const long long d = other.min_index_ + static_cast<long long>(i);
    if (d > truncation_) break;
    if (other.coeff_[i] != 0) add_term(d, other.coeff_[i]);
  }
  trim();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other) {
  truncation_ = std::min(truncation_, other.truncation_);
  for (std::size_t i = 0; i < other.coeff_.size(); ++i) {
    const long long d = other.min_index_ + static_cast<long long>(i);
    if (d > truncation_) break;
    if (other.coeff_[i] != 0) add_term(d, -other.coeff_[i]);
  }
  trim();
  return *this;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.truncation_ != b.truncation_) return false;
  const bool az = a.is_zero(), bz = b.is_zero();
  if (az || bz) return az == bz;
  const long long lo = std::min(a.min_degree(), b.min_degree());
  const long long hi = std::max(a.max_degree(), b.max_degree());
  for (long long d = lo; d <= hi; ++d)
    if (a.coeff(d) != b.coeff(d)) return false;
  return true;
}

LaurentSeries LaurentSeries::scaled(const Rational& factor) const {
  LaurentSeries s(truncation_);
  if (factor == 0) return s;
  s.min_index_ = min_index_;
  s.coeff_ = coeff_;
  for (auto& c : s.coeff_) c *= factor;
  return s;
}

LaurentSeries LaurentSeries::times_one_plus_t() const {
  LaurentSeries s(truncation_ - 1);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    const long long d = min_index_ + static_cast<long long>(i);
    if (coeff_[i] == 0) continue;
    if (d <= s.truncation_) s.add_term(d, coeff_[i]);
    if (d + 1 <= s.truncation_) s.add_term(d + 1, coeff_[i]);
  }
  return s;
}

void LaurentSeries::trim() {
  std::size_t lead = 0;
  while (lead < coeff_.size() && coeff_[lead] == 0) ++lead;
  if (lead == coeff_.size()) {
    coeff_.clear();
    min_index_ = 0;
    return;
  }
  if (lead > 0) {
    coeff_.erase(coeff_.begin(), coeff_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_index_ += static_cast<long long>(lead);
  }
  while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

std::string series_to_string(const LaurentSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (long long d = s.min_degree(); d <= s.max_degree(); ++d) {
    const Rational c = s.coeff(d);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += rational_to_string(c) + "*";
    out += "t^" + std::to_string(d);
  }
  return out;
}

PositivityResult check_positivity(const LaurentSeries& morse_series, long long guard) {
  if (guard < 0) throw std::invalid_argument("guard must be >= 0");
  const long long trunc = morse_series.truncation();
  LaurentSeries c = morse_series - LaurentSeries::geometric_even(trunc);
  const long long checked_up_to = trunc - guard;

  PositivityResult result{LaurentSeries(checked_up_to), std::nullopt, checked_up_to};
  if (c.is_zero()) return result;

  const long long d0 = c.min_degree();
  Rational prev = 0;
  for (long long d = d0; d <= checked_up_to; ++d) {
    const Rational u = c.coeff(d) - prev;
    result.u.add_term(d, u);
    if (u < 0) {
      result.first_violation = std::make_pair(d, u);
      return result;
    }
    prev = u;
  }
  return result;
}

std::optional<ParityShortcutResult> even_parity_shortcut(const LaurentSeries& morse_series) {
  if (!morse_series.is_zero()) {
    for (long long d = morse_series.min_degree(); d <= morse_series.max_degree(); ++d)
      if (morse_series.coeff(d) != 0 && ((d % 2) + 2) % 2 == 1) return std::nullopt;
  }
  // All contributions sit in even degrees, so comparing coefficients of
  // (1+t)U = M - 1/(1-t^2) by parity forces U = 0: M must equal the
  // geometric series coefficient by coefficient.
  ParityShortcutResult verdict;
  const LaurentSeries geo = LaurentSeries::geometric_even(morse_series.truncation());
  long long lo = 0, hi = morse_series.truncation();
  if (!morse_series.is_zero()) lo = std::min(lo, morse_series.min_degree());
  for (long long d = lo; d <= hi; ++d) {
    if (morse_series.coeff(d) != geo.coeff(d)) {
      verdict.violated = true;
      verdict.mismatch_degree = d;
      return verdict;
    }
  }
  return verdict;
}

LaurentSeries build_morse_series(const OrbitConfig& config, long long n_trunc) {
  validate(config);
  if (std::holds_alternative<NonDegenerate>(config.normal_form))
    throw std::domain_error("no closed-form Morse series for a NonDegenerate orbit");
  const Rational ihat = mean_index(config.normal_form, config.i1);
  if (ihat <= 0)
    throw std::invalid_argument(
        "the Morse series is only locally finite for a positive mean index");
  const int period = minimal_period(config.normal_form);
  for (int r = 1; r <= period; ++r)
    if (!config.k_vectors.count(r))
      throw std::invalid_argument("missing k-vector for residue class " + std::to_string(r));

  LaurentSeries series(n_trunc);
  // |i(y^m) - m*ihat| <= |i1| + 6 for every case, so once
  // m*ihat - (|i1| + 6) exceeds the truncation no later iterate can
  // contribute a stored degree.
  const Rational slack = Rational(std::abs(config.i1) + 6);
  for (long long m = 1;; ++m) {
    if (Rational(m) * ihat - slack > Rational(n_trunc)) break;
    const int r = residue_class(m, period);
    const CriticalTypeVector& vec = config.k_vectors.at(r);
    const long long degree = morse_index(config.normal_form, config.i1, m);
    for (int l = 0; l < vec.nu(); ++l) {
      const long long entry = vec.at(l);
      if (entry != 0 && degree + l <= n_trunc) series.add_term(degree + l, Rational(entry));
    }
  }
  return series;
}

}  // namespace maslovkit
