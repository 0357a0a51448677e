#pragma once

#include "maslovkit/rational.hpp"

#include <vector>

namespace maslovkit {

// Critical type numbers (k_0, ..., k_{nu-1}) of an isolated critical point
// whose local critical module can be nonzero only in degrees
// i(y^m), ..., i(y^m) + nu(y^m) - 1.  The vector length is the nullity.
struct CriticalTypeVector {
  std::vector<long long> k;

  int nu() const { return static_cast<int>(k.size()); }
  bool is_zero() const;
  long long at(int l) const { return k.at(static_cast<std::size_t>(l)); }

  friend bool operator==(const CriticalTypeVector&, const CriticalTypeVector&) = default;
  friend bool operator<(const CriticalTypeVector& a, const CriticalTypeVector& b) { return a.k < b.k; }
};

std::string k_vector_to_string(const CriticalTypeVector& v);

// Admissibility clauses for an isolated critical point on a level of an
// even (iteration-invariant) functional, checkable one by one.  A vector
// is admissible iff all of them hold.
//
//  (a) every entry is >= 0;
//  (b) the boundary entries k_0 and k_{nu-1} lie in {0, 1}
//      (local minimum / local maximum type numbers);
//  (c) k_0 = 1 forces all other entries to vanish (minimum case);
//  (d) k_{nu-1} = 1 forces all other entries to vanish (maximum case);
//  (e) an interior entry being nonzero forces both boundary entries to
//      vanish;
//  (f) for nu <= 3 at most one entry is nonzero.
bool entries_nonnegative(const CriticalTypeVector& v);
bool boundary_entries_bounded(const CriticalTypeVector& v);
bool minimum_excludes_others(const CriticalTypeVector& v);
bool maximum_excludes_others(const CriticalTypeVector& v);
bool interior_excludes_boundary(const CriticalTypeVector& v);
bool at_most_one_nonzero(const CriticalTypeVector& v);

bool admissible(const CriticalTypeVector& v);

// All admissible vectors of length nu (supported for nu in {1,2,3}),
// with interior entries enumerated up to interior_max.  For nu <= 2 every
// slot is a boundary slot and interior_max is irrelevant; for nu = 3 the
// middle entry ranges over 0..interior_max.
std::vector<CriticalTypeVector> admissible_vectors(int nu, long long interior_max);

struct OrbitConfig;  // defined in iteration.hpp

// Average Euler characteristic over one minimal period K:
//   chi_hat(y) = (1/K) * sum_{m=1..K} sum_l (-1)^{i(y^m)+l} k_l(y^m).
// per_iterate_terms holds (m, inner alternating sum) for m = 1..K.
struct EulerData {
  Rational chi_hat;
  std::vector<std::pair<long long, Rational>> per_iterate_terms;
};

EulerData average_euler_char_data(const OrbitConfig& config);
Rational average_euler_char(const OrbitConfig& config);

}  // namespace maslovkit
