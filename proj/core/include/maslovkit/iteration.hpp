#pragma once

#include "maslovkit/critical_types.hpp"
#include "maslovkit/rational.hpp"
#include "maslovkit/symplectic.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace maslovkit {

// Normal forms of the monodromy of a closed characteristic on a compact
// star-shaped hypersurface in R^4, up to symplectic conjugacy.  The first
// ⋄-factor is always the shear N1(1,1) coming from the orbit direction;
// the variant records the second factor:
//
//   Case1: N1(1,1) ⋄ N1(-1,b), b in {-1,0,1}   (eigenvalue -1 pair)
//   Case2: N1(1,1) ⋄ R(theta), theta/pi = p/q in lowest terms,
//          0 < p/q < 2, p/q != 1                (elliptic pair)
//   Case3: N1(1,1) ⋄ N1(1,b),  b in {0,1}      (eigenvalue +1 pair)
//   Case4: N1(1,1) ⋄ N1(1,-1)                  (eigenvalue +1, negative shear)
//
// NonDegenerate covers orbits whose iterates are all non-degenerate; no
// closed-form iteration data exists for them here, only the two facts the
// average Euler characteristic needs: whether the second Floquet pair is
// elliptic and the parity of the index jump i(y^2) - i(y).
struct Case1 {
  int b = 1;
  friend bool operator==(const Case1&, const Case1&) = default;
};
struct Case2 {
  Rational rotation;
  friend bool operator==(const Case2&, const Case2&) = default;
};
struct Case3 {
  int b = 0;
  friend bool operator==(const Case3&, const Case3&) = default;
};
struct Case4 {
  friend bool operator==(const Case4&, const Case4&) = default;
};
struct NonDegenerate {
  bool second_block_elliptic = true;
  bool index_jump_odd = false;
  friend bool operator==(const NonDegenerate&, const NonDegenerate&) = default;
};

using NormalFormCase = std::variant<Case1, Case2, Case3, Case4, NonDegenerate>;

// Human-readable label, e.g. "case 1 (b=0)", "case 2 (theta/pi=1/2)".
std::string case_label(const NormalFormCase& nf);

// The index i(y,1) of the underlying orbit must be even for Case1-Case3
// and odd for Case4 (the two-dimensional index parity constraint).
bool i1_parity_ok(const NormalFormCase& nf, long long i1);

// The two ⋄-factors; nullopt for NonDegenerate.
std::optional<std::pair<NormalFormBlock, NormalFormBlock>> case_blocks(const NormalFormCase& nf);

// One orbit together with its (possibly partial) critical type data.
// k_vectors is keyed by residue class r in 1..K(y); class r stands for
// all iterates y^m with m = r mod K (class K for m = 0 mod K).
// mean_index_hint supplies i-hat for NonDegenerate orbits, which have no
// closed form; it is rejected for the four concrete cases.
struct OrbitConfig {
  NormalFormCase normal_form;
  long long i1 = 0;
  std::map<int, CriticalTypeVector> k_vectors;
  std::optional<Rational> mean_index_hint;

  friend bool operator==(const OrbitConfig&, const OrbitConfig&) = default;
};

// Throws std::invalid_argument naming the violated rule.
void validate(const OrbitConfig& config);

// Maslov-type index of the m-th iterate, i(y,m); m >= 1.
// Unsupported for NonDegenerate (throws std::domain_error).
long long maslov_index(const NormalFormCase& nf, long long i1, long long m);

// Morse index of the m-th iterate of the variational problem on the free
// loop space: i(y^m) = i(y,m) - 2.
long long morse_index(const NormalFormCase& nf, long long i1, long long m);

// Nullity nu(y^m) in {1,2,3}; closed-form, matches nullity_oracle on the
// ⋄-product monodromy.  NonDegenerate orbits have nu = 1 for all m.
int nullity(const NormalFormCase& nf, long long m);

// Mean index i-hat(y) = lim_m i(y,m)/m, exact.
Rational mean_index(const NormalFormCase& nf, long long i1);

// Smallest K >= 1 such that for every p >= 1,
// nu(y^{p+K}) = nu(y^p) and i(y^{p+K}) - i(y^p) is even.
int minimal_period(const NormalFormCase& nf);

// Residue class of m in 1..period.
int residue_class(long long m, int period);

struct IterationData {
  long long m = 0;
  long long maslov = 0;
  long long morse = 0;
  int nullity = 0;
};

// Rows m = 1..m_max of (i(y,m), i(y^m), nu(y^m)).
std::vector<IterationData> iterate_table(const OrbitConfig& config, long long m_max);

}  // namespace maslovkit
