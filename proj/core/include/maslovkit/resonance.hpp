#pragma once

#include "maslovkit/iteration.hpp"
#include "maslovkit/rational.hpp"

#include <vector>

namespace maslovkit {

// One orbit's contribution to the mean-index resonance identities.
struct Contribution {
  Rational chi_hat;
  Rational mean_index;  // nonzero
};

// For a compact star-shaped hypersurface in R^4 with finitely many closed
// characteristics, the average Euler characteristics and mean indices
// satisfy
//     sum_{i-hat(y) > 0} chi_hat(y) / i-hat(y) = 1/2   and
//     sum_{i-hat(y) < 0} chi_hat(y) / i-hat(y) = 0.
struct ResonanceReport {
  Rational sum_positive = 0;
  Rational sum_negative = 0;
  bool positive_holds = false;  // sum_positive == 1/2
  bool negative_holds = false;  // sum_negative == 0
};

// Throws std::invalid_argument if any contribution has mean index 0
// (such an orbit belongs to neither sum and the identities do not apply).
ResonanceReport resonance_sums(const std::vector<Contribution>& contributions);

// chi_hat from the orbit's critical type data (or the non-degenerate
// dichotomy) and i-hat from the closed form (or mean_index_hint).
Contribution contribution_of(const OrbitConfig& config);

ResonanceReport resonance_sums(const std::vector<OrbitConfig>& configs);

// Treat entry `slot` of the k-vector of `residue_class` as the single
// unknown of the one-orbit positive-sum identity and solve
//     chi_hat(y) / i-hat(y) = 1/2
// for it exactly (any stored value in that slot is ignored; the k-vectors
// of all other residue classes must be pinned).  The sign of the
// unknown's coefficient is (-1)^{i(y^r) + slot}; requires i-hat > 0 and
// throws std::invalid_argument otherwise.
Rational solve_interior_k(const OrbitConfig& config, int residue_class, int slot);

// Same linear solve but with the parity of i(y^r) imposed: sign = +1
// treats i(y^r) as even, sign = -1 as odd.  This is the two-branch form
// of the derivation ("the solved value k requires i(y^r) odd").
Rational solve_interior_k_with_sign(const OrbitConfig& config, int residue_class, int slot, int sign);

}  // namespace maslovkit
