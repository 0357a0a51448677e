#pragma once

#include "maslovkit/analyzer.hpp"
#include "maslovkit/iteration.hpp"
#include "maslovkit/resonance.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maslovkit {

enum class RunMode { Analyze, Sweep, Table, Resonance };
enum class OutputFormat { Text, KeyValue };

std::string run_mode_to_string(RunMode mode);
std::string output_format_to_string(OutputFormat format);

// A complete run description.  Defaults match the certification grid:
// i(y,1) in [-4, 40], rotation denominators up to 12, truncation 400.
struct RunConfig {
  RunMode mode = RunMode::Analyze;
  OutputFormat format = OutputFormat::Text;
  long long truncation = 400;
  long long i1_min = -4;
  long long i1_max = 40;
  int q_max = 12;
  long long m_max = 10;
  std::vector<OrbitConfig> orbits;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Parse error with a 1-based line number; what() includes both.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented key=value run configuration:
//   - '#' starts a comment, blank lines are ignored;
//   - run keys: mode, format, truncation, i1_min, i1_max, q_max, m_max;
//   - each 'case=' line (1|2|3|4|nd) opens a new orbit block; orbit keys:
//     b, theta (rotation angle as a fraction of pi), i1, ihat,
//     jump_parity (even|odd), elliptic (0|1), k.R (comma-separated
//     critical type numbers for residue class R);
//   - fractions are written p/q and kept exact.
// Keys present in the text override the corresponding fields of `base`;
// everything else keeps the base value.  Orbit data, when present,
// replaces base.orbits entirely.
RunConfig parse_config(std::string_view text, const RunConfig& base = RunConfig{});

// Canonical serialization; parse_config(format_config(c)) == c.
std::string format_config(const RunConfig& config);

std::string emit_verdict_report(const OrbitConfig& orbit, const Verdict& verdict,
                                OutputFormat format);
std::string emit_sweep_report(const SweepReport& report, OutputFormat format);
std::string emit_iterate_table(const OrbitConfig& orbit, const std::vector<IterationData>& rows,
                               OutputFormat format);
std::string emit_resonance_report(const std::vector<OrbitConfig>& orbits,
                                  const ResonanceReport& report, OutputFormat format);

}  // namespace maslovkit
