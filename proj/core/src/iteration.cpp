#include "maslovkit/iteration.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace maslovkit {

namespace {

// E(m p / 2q) as exact integer ceiling division; all in-range values fit
// comfortably in long long (|i1| and m are bounded by the callers' use).
long long ceil_div(long long num, long long den) {
  // den > 0; round toward +infinity.
  long long q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

void require_iterate(long long m) {
  if (m < 1) throw std::invalid_argument("iterate count m must be >= 1");
}

[[noreturn]] void unsupported_nondegenerate(const char* what) {
  throw std::domain_error(std::string("no closed form for ") + what +
                          " of a NonDegenerate orbit (only nullity, minimal period, and the "
                          "average Euler characteristic are defined)");
}

}  // namespace

std::string case_label(const NormalFormCase& nf) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Case1>) return "case 1 (b=" + std::to_string(c.b) + ")";
        else if constexpr (std::is_same_v<T, Case2>) return "case 2 (theta/pi=" + rational_to_string(c.rotation) + ")";
        else if constexpr (std::is_same_v<T, Case3>) return "case 3 (b=" + std::to_string(c.b) + ")";
        else if constexpr (std::is_same_v<T, Case4>) return "case 4";
        else return std::string("non-degenerate (") + (c.index_jump_odd ? "odd" : "even") + " index jump)";
      },
      nf);
}

bool i1_parity_ok(const NormalFormCase& nf, long long i1) {
  if (std::holds_alternative<Case4>(nf)) return i1 % 2 != 0;
  if (std::holds_alternative<NonDegenerate>(nf)) return true;
  return i1 % 2 == 0;
}

std::optional<std::pair<NormalFormBlock, NormalFormBlock>> case_blocks(const NormalFormCase& nf) {
  const NormalFormBlock first = NormalFormBlock::shear(1, 1);
  if (const auto* c1 = std::get_if<Case1>(&nf))
    return std::make_pair(first, NormalFormBlock::shear(-1, c1->b));
  if (const auto* c2 = std::get_if<Case2>(&nf))
    return std::make_pair(first, NormalFormBlock::rotation_block(c2->rotation));
  if (const auto* c3 = std::get_if<Case3>(&nf))
    return std::make_pair(first, NormalFormBlock::shear(1, c3->b));
  if (std::holds_alternative<Case4>(nf))
    return std::make_pair(first, NormalFormBlock::shear(1, -1));
  return std::nullopt;
}

void validate(const OrbitConfig& config) {
  std::visit(
      [](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Case1>) {
          if (c.b < -1 || c.b > 1)
            throw std::invalid_argument("case 1 requires b in {-1, 0, 1}");
        } else if constexpr (std::is_same_v<T, Case2>) {
          if (c.rotation <= 0 || c.rotation >= 2 || c.rotation == 1)
            throw std::invalid_argument(
                "case 2 requires a rotation angle theta/pi in (0,2) with theta/pi != 1");
        } else if constexpr (std::is_same_v<T, Case3>) {
          if (c.b != 0 && c.b != 1)
            throw std::invalid_argument("case 3 requires b in {0, 1}");
        }
      },
      config.normal_form);
  if (!i1_parity_ok(config.normal_form, config.i1)) {
    if (std::holds_alternative<Case4>(config.normal_form))
      throw std::invalid_argument("case 4 requires odd i1");
    throw std::invalid_argument(case_label(config.normal_form) + " requires even i1");
  }
  if (config.mean_index_hint && !std::holds_alternative<NonDegenerate>(config.normal_form))
    throw std::invalid_argument(
        "ihat may only be supplied for non-degenerate orbits; the concrete normal forms "
        "determine the mean index");
  const bool nondeg = std::holds_alternative<NonDegenerate>(config.normal_form);
  for (const auto& [cls, vec] : config.k_vectors) {
    if (nondeg)
      throw std::invalid_argument(
          "critical type vectors of a non-degenerate orbit are determined by the index "
          "parity and may not be supplied");
    const int period = minimal_period(config.normal_form);
    if (cls < 1 || cls > period)
      throw std::invalid_argument("k-vector residue class " + std::to_string(cls) +
                                  " out of range 1.." + std::to_string(period));
    const int nu = nullity(config.normal_form, cls);
    if (vec.nu() != nu)
      throw std::invalid_argument("k-vector for residue class " + std::to_string(cls) +
                                  " must have length nu = " + std::to_string(nu) + ", got " +
                                  std::to_string(vec.nu()));
    if (!entries_nonnegative(vec))
      throw std::invalid_argument("critical type numbers must be >= 0");
  }
}

long long maslov_index(const NormalFormCase& nf, long long i1, long long m) {
  require_iterate(m);
  return std::visit(
      [&](const auto& c) -> long long {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Case1>) {
          // Eigenvalue -1 second factor: linear growth with a dip at even
          // iterates unless the shear is positive (b = 1).
          long long v = m * (i1 + 1) - 1;
          if (c.b != 1) v -= (m % 2 == 0) ? 1 : 0;
          return v;
        } else if constexpr (std::is_same_v<T, Case2>) {
          const long long p = to_long(numerator(c.rotation));
          const long long q = to_long(denominator(c.rotation));
          return m * i1 + 2 * ceil_div(m * p, 2 * q) - 2;
        } else if constexpr (std::is_same_v<T, Case3>) {
          return m * (i1 + 2) - 2;
        } else if constexpr (std::is_same_v<T, Case4>) {
          return m * (i1 + 1) - 1;
        } else {
          unsupported_nondegenerate("the iterated index");
        }
      },
      nf);
}

long long morse_index(const NormalFormCase& nf, long long i1, long long m) {
  return maslov_index(nf, i1, m) - 2;
}

int nullity(const NormalFormCase& nf, long long m) {
  require_iterate(m);
  return std::visit(
      [&](const auto& c) -> int {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Case1>) {
          // Odd iterates see only the eigenvalue-1 shear; even iterates add
          // the (-1)-pair, fully degenerate when its shear vanishes.
          if (m % 2 != 0) return 1;
          return c.b == 0 ? 3 : 2;
        } else if constexpr (std::is_same_v<T, Case2>) {
          const Integer p = numerator(c.rotation);
          const Integer q = denominator(c.rotation);
          return (Integer(m) * p) % (2 * q) == 0 ? 3 : 1;
        } else if constexpr (std::is_same_v<T, Case3>) {
          return c.b == 0 ? 3 : 2;
        } else if constexpr (std::is_same_v<T, Case4>) {
          return 2;
        } else {
          return 1;
        }
      },
      nf);
}

Rational mean_index(const NormalFormCase& nf, long long i1) {
  return std::visit(
      [&](const auto& c) -> Rational {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Case1>) return Rational(i1 + 1);
        else if constexpr (std::is_same_v<T, Case2>) return Rational(i1) + c.rotation;
        else if constexpr (std::is_same_v<T, Case3>) return Rational(i1 + 2);
        else if constexpr (std::is_same_v<T, Case4>) return Rational(i1 + 1);
        else unsupported_nondegenerate("the mean index");
      },
      nf);
}

int minimal_period(const NormalFormCase& nf) {
  return std::visit(
      [](const auto& c) -> int {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Case1>) {
          return 2;  // nullity alternates 1, nu(y^2)
        } else if constexpr (std::is_same_v<T, Case2>) {
          // Order of the rotation: nullity jumps exactly at multiples of
          // 2q/gcd(p,2q); index jumps over that period are even.
          const Integer p = numerator(c.rotation);
          const Integer q = denominator(c.rotation);
          const Integer k = 2 * q / boost::multiprecision::gcd(p, 2 * q);
          return static_cast<int>(to_long(k));
        } else if constexpr (std::is_same_v<T, Case3>) {
          return 1;  // constant nullity, even index steps
        } else if constexpr (std::is_same_v<T, Case4>) {
          return 1;
        } else {
          // Constant nullity 1; the index jump parity decides.
          return c.index_jump_odd ? 2 : 1;
        }
      },
      nf);
}

int residue_class(long long m, int period) {
  require_iterate(m);
  if (period < 1) throw std::invalid_argument("period must be >= 1");
  return static_cast<int>((m - 1) % period) + 1;
}

std::vector<IterationData> iterate_table(const OrbitConfig& config, long long m_max) {
  validate(config);
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  std::vector<IterationData> rows;
  rows.reserve(static_cast<std::size_t>(m_max));
  for (long long m = 1; m <= m_max; ++m) {
    IterationData row;
    row.m = m;
    row.maslov = maslov_index(config.normal_form, config.i1, m);
    row.morse = row.maslov - 2;
    row.nullity = nullity(config.normal_form, m);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace maslovkit
