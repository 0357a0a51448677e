#include "maslovkit/resonance.hpp"

#include "maslovkit/critical_types.hpp"

#include <stdexcept>

namespace maslovkit {

ResonanceReport resonance_sums(const std::vector<Contribution>& contributions) {
  ResonanceReport report;
  for (const auto& c : contributions) {
    if (c.mean_index == 0)
      throw std::invalid_argument(
          "resonance sums are defined only for orbits with nonzero mean index");
    if (c.mean_index > 0)
      report.sum_positive += c.chi_hat / c.mean_index;
    else
      report.sum_negative += c.chi_hat / c.mean_index;
  }
  report.positive_holds = report.sum_positive == Rational(1, 2);
  report.negative_holds = report.sum_negative == 0;
  return report;
}

Contribution contribution_of(const OrbitConfig& config) {
  Contribution c;
  c.chi_hat = average_euler_char(config);
  if (std::holds_alternative<NonDegenerate>(config.normal_form)) {
    if (!config.mean_index_hint)
      throw std::invalid_argument(
          "a non-degenerate orbit needs an explicit ihat value (no closed form exists)");
    c.mean_index = *config.mean_index_hint;
  } else {
    c.mean_index = mean_index(config.normal_form, config.i1);
  }
  return c;
}

ResonanceReport resonance_sums(const std::vector<OrbitConfig>& configs) {
  std::vector<Contribution> contributions;
  contributions.reserve(configs.size());
  for (const auto& config : configs) contributions.push_back(contribution_of(config));
  return resonance_sums(contributions);
}

namespace {

Rational solve_with_term_sign(const OrbitConfig& config, int residue_class, int slot,
                              const Rational& term_sign) {
  validate(config);
  if (std::holds_alternative<NonDegenerate>(config.normal_form))
    throw std::invalid_argument("cannot solve for critical type data of a non-degenerate orbit");
  const Rational ihat = mean_index(config.normal_form, config.i1);
  if (ihat <= 0)
    throw std::invalid_argument(
        "the one-orbit positive-sum identity needs a positive mean index");
  const int period = minimal_period(config.normal_form);
  if (residue_class < 1 || residue_class > period)
    throw std::invalid_argument("residue class out of range 1.." + std::to_string(period));
  const int nu = nullity(config.normal_form, residue_class);
  if (slot < 0 || slot >= nu)
    throw std::invalid_argument("slot out of range 0.." + std::to_string(nu - 1));

  // chi_hat = (known + term_sign * k) / period; identity: chi_hat / ihat = 1/2.
  OrbitConfig masked = config;
  auto& vec = masked.k_vectors[residue_class];
  if (vec.k.empty()) vec.k.assign(static_cast<std::size_t>(nu), 0);
  vec.k[static_cast<std::size_t>(slot)] = 0;
  for (int m = 1; m <= period; ++m)
    if (m != residue_class && !masked.k_vectors.count(m))
      throw std::invalid_argument(
          "solving for one unknown needs the k-vectors of all other residue classes; "
          "class " + std::to_string(m) + " is missing");
  const Rational known = average_euler_char(masked) * period;
  return (Rational(period) * ihat / 2 - known) / term_sign;
}

}  // namespace

Rational solve_interior_k(const OrbitConfig& config, int residue_class, int slot) {
  const long long degree = morse_index(config.normal_form, config.i1, residue_class);
  const Rational term_sign = (degree + slot) % 2 == 0 ? 1 : -1;
  return solve_with_term_sign(config, residue_class, slot, term_sign);
}

Rational solve_interior_k_with_sign(const OrbitConfig& config, int residue_class, int slot,
                                    int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 (even index) or -1 (odd index)");
  const Rational term_sign = (slot % 2 == 0 ? 1 : -1) * Rational(sign);
  return solve_with_term_sign(config, residue_class, slot, term_sign);
}

}  // namespace maslovkit
