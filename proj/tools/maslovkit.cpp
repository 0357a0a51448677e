// Command-line front end: analyze one hypothetical single-orbit world,
// sweep the whole grid of them, print iterate tables, or evaluate the
// resonance identities for a user-supplied collection of orbits.
//
// Exit codes: 0 when the requested computation certifies (contradiction /
// SDM / external-theorem verdicts; certified sweeps; identity reports),
// 1 when a world is feasible or a truncation is too small to decide,
// 2 on usage or configuration errors.

#include "maslovkit/config.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int run(const maslovkit::RunConfig& config) {
  using namespace maslovkit;
  switch (config.mode) {
    case RunMode::Sweep: {
      const SweepReport report =
          sweep_single_orbit_cases(config.i1_min, config.i1_max, config.q_max, config.truncation);
      std::cout << emit_sweep_report(report, config.format);
      return report.certified() ? 0 : 1;
    }
    case RunMode::Analyze: {
      if (config.orbits.size() != 1) {
        std::cerr << "error: analyze mode expects exactly one orbit block\n";
        return 2;
      }
      try {
        const Verdict verdict = analyze_single_orbit(config.orbits.front(), config.truncation);
        std::cout << emit_verdict_report(config.orbits.front(), verdict, config.format);
        return verdict.kind == VerdictKind::Feasible ? 1 : 0;
      } catch (const truncation_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 1;
      }
    }
    case RunMode::Table: {
      if (config.orbits.size() != 1) {
        std::cerr << "error: table mode expects exactly one orbit block\n";
        return 2;
      }
      const auto rows = iterate_table(config.orbits.front(), config.m_max);
      std::cout << emit_iterate_table(config.orbits.front(), rows, config.format);
      return 0;
    }
    case RunMode::Resonance: {
      if (config.orbits.empty()) {
        std::cerr << "error: resonance mode needs at least one orbit block\n";
        return 2;
      }
      const ResonanceReport report = resonance_sums(config.orbits);
      std::cout << emit_resonance_report(config.orbits, report, config.format);
      return 0;
    }
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "maslovkit — exact index iteration, resonance identities, and Morse series\n"
      "positivity for closed characteristics on star-shaped hypersurfaces in R^4"};

  std::string mode_flag, format_flag, config_path;
  long long truncation = 0, i1_min = 0, i1_max = 0, m_max = 0;
  int q_max = 0;
  app.add_option("--mode", mode_flag, "analyze | sweep | table | resonance");
  app.add_option("--config", config_path, "run configuration file (key=value lines)");
  app.add_option("--truncation", truncation, "Morse series truncation degree");
  app.add_option("--i1-min", i1_min, "sweep: smallest i(y,1)");
  app.add_option("--i1-max", i1_max, "sweep: largest i(y,1)");
  app.add_option("--q-max", q_max, "sweep: largest rotation denominator");
  app.add_option("--m-max", m_max, "table: number of iterates");
  app.add_option("--format", format_flag, "text | kv");
  CLI11_PARSE(app, argc, argv);

  maslovkit::RunConfig config;

  // Precedence: flag > config file > MASLOVKIT_TRUNCATION > built-in 400.
  if (const char* env = std::getenv("MASLOVKIT_TRUNCATION")) {
    const auto value = maslovkit::parse_rational(env);
    if (!value || !maslovkit::is_integer(*value)) {
      std::cerr << "error: MASLOVKIT_TRUNCATION must be an integer, got '" << env << "'\n";
      return 2;
    }
    config.truncation = maslovkit::to_long(numerator(*value));
  }

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config file '" << config_path << "'\n";
      return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      config = maslovkit::parse_config(buffer.str(), config);
    } catch (const maslovkit::ParseError& e) {
      std::cerr << "error: " << config_path << ": " << e.what() << "\n";
      return 2;
    }
  }

  if (app.count("--mode")) {
    if (mode_flag == "analyze") config.mode = maslovkit::RunMode::Analyze;
    else if (mode_flag == "sweep") config.mode = maslovkit::RunMode::Sweep;
    else if (mode_flag == "table") config.mode = maslovkit::RunMode::Table;
    else if (mode_flag == "resonance") config.mode = maslovkit::RunMode::Resonance;
    else {
      std::cerr << "error: --mode must be analyze, sweep, table, or resonance\n";
      return 2;
    }
  }
  if (app.count("--format")) {
    if (format_flag == "text") config.format = maslovkit::OutputFormat::Text;
    else if (format_flag == "kv") config.format = maslovkit::OutputFormat::KeyValue;
    else {
      std::cerr << "error: --format must be text or kv\n";
      return 2;
    }
  }
  if (app.count("--truncation")) config.truncation = truncation;
  if (app.count("--i1-min")) config.i1_min = i1_min;
  if (app.count("--i1-max")) config.i1_max = i1_max;
  if (app.count("--q-max")) config.q_max = q_max;
  if (app.count("--m-max")) config.m_max = m_max;

  try {
    return run(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
