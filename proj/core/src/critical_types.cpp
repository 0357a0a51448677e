#include "maslovkit/critical_types.hpp"

#include "maslovkit/iteration.hpp"

#include <algorithm>
#include <stdexcept>

namespace maslovkit {

bool CriticalTypeVector::is_zero() const {
  return std::all_of(k.begin(), k.end(), [](long long v) { return v == 0; });
}

std::string k_vector_to_string(const CriticalTypeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v.k[i]);
  }
  return s + ")";
}

bool entries_nonnegative(const CriticalTypeVector& v) {
  return std::all_of(v.k.begin(), v.k.end(), [](long long x) { return x >= 0; });
}

bool boundary_entries_bounded(const CriticalTypeVector& v) {
  if (v.k.empty()) return true;
  return v.k.front() <= 1 && v.k.back() <= 1;
}

bool minimum_excludes_others(const CriticalTypeVector& v) {
  if (v.k.empty() || v.k.front() != 1) return true;
  return std::all_of(v.k.begin() + 1, v.k.end(), [](long long x) { return x == 0; });
}

bool maximum_excludes_others(const CriticalTypeVector& v) {
  if (v.k.empty() || v.k.back() != 1) return true;
  return std::all_of(v.k.begin(), v.k.end() - 1, [](long long x) { return x == 0; });
}

bool interior_excludes_boundary(const CriticalTypeVector& v) {
  if (v.k.size() < 3) return true;
  const bool interior_nonzero =
      std::any_of(v.k.begin() + 1, v.k.end() - 1, [](long long x) { return x != 0; });
  return !interior_nonzero || (v.k.front() == 0 && v.k.back() == 0);
}

bool at_most_one_nonzero(const CriticalTypeVector& v) {
  if (v.nu() > 3) return true;
  return std::count_if(v.k.begin(), v.k.end(), [](long long x) { return x != 0; }) <= 1;
}

bool admissible(const CriticalTypeVector& v) {
  return entries_nonnegative(v) && boundary_entries_bounded(v) && minimum_excludes_others(v) &&
         maximum_excludes_others(v) && interior_excludes_boundary(v) && at_most_one_nonzero(v);
}

std::vector<CriticalTypeVector> admissible_vectors(int nu, long long interior_max) {
  if (nu < 1 || nu > 3) throw std::invalid_argument("admissible_vectors supports nu in {1,2,3}");
  if (interior_max < 0) throw std::invalid_argument("interior_max must be >= 0");
  std::vector<CriticalTypeVector> out;
  const std::size_t n = static_cast<std::size_t>(nu);
  // Boundary slots take values in {0,1}; interior slots 0..interior_max.
  std::vector<long long> limits(n, 1);
  for (std::size_t l = 1; l + 1 < n; ++l) limits[l] = interior_max;
  CriticalTypeVector v;
  v.k.assign(n, 0);
  while (true) {
    if (admissible(v)) out.push_back(v);
    std::size_t pos = 0;
    while (pos < n && v.k[pos] == limits[pos]) v.k[pos++] = 0;
    if (pos == n) break;
    ++v.k[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

EulerData average_euler_char_data(const OrbitConfig& config) {
  validate(config);
  EulerData data;
  const int period = minimal_period(config.normal_form);

  if (std::holds_alternative<NonDegenerate>(config.normal_form)) {
    // Every iterate is a non-degenerate critical point, so k(y^m) = (1)
    // when i(y^m) - i(y) is even and (0) otherwise.  Over one period this
    // gives (-1)^{i(y)} for an even jump and (-1)^{i(y)}/2 for an odd one.
    const Rational sign = config.i1 % 2 == 0 ? 1 : -1;  // (-1)^{i(y)}, i(y) = i1 - 2
    data.per_iterate_terms.emplace_back(1, sign);
    if (period == 2) data.per_iterate_terms.emplace_back(2, Rational(0));
    data.chi_hat = sign / period;
    return data;
  }

  Rational total = 0;
  for (int m = 1; m <= period; ++m) {
    const auto it = config.k_vectors.find(m);
    if (it == config.k_vectors.end())
      throw std::invalid_argument("missing k-vector for residue class " + std::to_string(m));
    const long long degree = morse_index(config.normal_form, config.i1, m);
    Rational term = 0;
    for (int l = 0; l < it->second.nu(); ++l) {
      const long long entry = it->second.at(l);
      if (entry == 0) continue;
      term += ((degree + l) % 2 == 0 ? 1 : -1) * Rational(entry);
    }
    data.per_iterate_terms.emplace_back(m, term);
    total += term;
  }
  data.chi_hat = total / period;
  return data;
}

Rational average_euler_char(const OrbitConfig& config) {
  return average_euler_char_data(config).chi_hat;
}

}  // namespace maslovkit
