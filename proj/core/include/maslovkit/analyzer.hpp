#pragma once

#include "maslovkit/critical_types.hpp"
#include "maslovkit/iteration.hpp"
#include "maslovkit/laurent.hpp"
#include "maslovkit/rational.hpp"
#include "maslovkit/resonance.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace maslovkit {

// How a hypothetical "exactly one closed characteristic, with this normal
// form and initial index" world is disposed of.
enum class VerdictKind {
  // The resonance identity sum_{i-hat>0} chi_hat/i-hat = 1/2 admits no
  // admissible critical type data.
  ResonanceContradiction,
  // Every resonance-consistent choice of critical type data makes the
  // normalized Morse series violate the positivity relation
  // M(t) - 1/(1-t^2) = (1+t)U(t), U >= 0.
  MorseSeriesContradiction,
  // The orbit would be a symplectically degenerate maximum (mean index
  // exactly 2, degenerate); by the Ginzburg–Hein–Hryniewicz–Macarini
  // theorem such a world has infinitely many closed characteristics.
  SymplecticallyDegenerateMaximum,
  // All iterates non-degenerate; the Hu–Long theorem already gives at
  // least two closed characteristics in that regime.
  NonDegenerateExternal,
  // Nothing rules the world out (never reached on the in-scope grid).
  Feasible,
};

std::string verdict_kind_to_string(VerdictKind kind);

// Assignment of one critical type vector per residue class 1..K.
using KAssignment = std::map<int, CriticalTypeVector>;

// Record of one branch of the middle-slot linear solve: assuming
// (-1)^{i(y^r)} = sign, the identity pins the slot value to `value`.
struct InteriorSolveRecord {
  int residue_class = 0;
  int slot = 0;
  int sign = 1;  // +1: i(y^r) treated as even, -1: odd
  Rational value;
  bool matches_case_parity = false;  // sign agrees with the actual i(y^r)
  bool admissible = false;           // integral, >= 0, slot bound respected
};

struct Verdict {
  VerdictKind kind = VerdictKind::Feasible;
  std::optional<Rational> mean_index;  // absent for NonDegenerate orbits
  int minimal_period = 0;
  // First positivity violation (degree, u value); Morse verdicts only.
  std::optional<std::pair<long long, Rational>> first_violation;
  // Critical type assignments that satisfy the resonance identity, and
  // the subset that also survives the Morse positivity check.
  std::vector<KAssignment> resonance_survivors;
  std::vector<KAssignment> morse_survivors;
  std::vector<InteriorSolveRecord> interior_solves;
  std::vector<std::string> trace;
};

// Raised when a surviving assignment cannot be certified at the given
// truncation; re-running with a larger truncation may settle it.
struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Decide the fate of a single-orbit world.  The config's k_vectors are
// ignored: the analyzer derives all admissible critical type data itself.
// Throws truncation_error when a larger truncation is needed.
Verdict analyze_single_orbit(const OrbitConfig& config, long long truncation);

struct SweepEntry {
  OrbitConfig config;
  Verdict verdict;
};

struct SweepReport {
  long long i1_min = 0;
  long long i1_max = 0;
  int q_max = 0;
  long long truncation = 0;
  std::vector<SweepEntry> entries;
  std::vector<std::pair<OrbitConfig, std::string>> inconclusive;

  int count(VerdictKind kind) const;
  int feasible_count() const { return count(VerdictKind::Feasible); }
  bool certified() const { return feasible_count() == 0 && inconclusive.empty(); }
};

// All rotation angles theta/pi = p/q in lowest terms with q <= q_max,
// 0 < p/q < 2, p/q != 1, ordered by (q, p).
std::vector<Rational> reduced_rotations(int q_max);

// Replay the case analysis over the full grid of single-orbit worlds:
// every normal form (all shear parameters, all rotations with q <= q_max)
// crossed with every parity-respecting i(y,1) in [i1_min, i1_max].  A
// certified report (no Feasible entries, no inconclusive signals) proves
// that no such world exists, hence every compact star-shaped hypersurface
// in R^4 carries at least two closed characteristics.
SweepReport sweep_single_orbit_cases(long long i1_min, long long i1_max, int q_max,
                                     long long truncation);

}  // namespace maslovkit
