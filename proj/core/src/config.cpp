#include "maslovkit/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <utility>

namespace maslovkit {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

long long parse_integer(int line, const std::string& key, const std::string& value) {
  const auto r = parse_rational(value);
  if (!r || !is_integer(*r)) throw ParseError(line, key + " must be an integer, got '" + value + "'");
  return to_long(numerator(*r));
}

Rational parse_fraction(int line, const std::string& key, const std::string& value) {
  const auto r = parse_rational(value);
  if (!r) throw ParseError(line, key + " must be an integer or fraction p/q, got '" + value + "'");
  return *r;
}

// Orbit block under construction; turned into an OrbitConfig once all of
// its keys are known (the parity checks need case and i1 together).
struct OrbitDraft {
  int start_line = 0;
  std::string case_value;
  std::optional<int> b;
  std::optional<Rational> theta;
  std::optional<long long> i1;
  std::optional<Rational> ihat;
  std::optional<bool> jump_odd;
  std::optional<bool> elliptic;
  std::vector<std::pair<int, CriticalTypeVector>> k_vectors;
};

OrbitConfig finalize_orbit(const OrbitDraft& draft) {
  OrbitConfig orbit;
  const int line = draft.start_line;
  if (draft.case_value == "1") {
    if (!draft.b) throw ParseError(line, "case 1 needs b (-1, 0, or 1)");
    orbit.normal_form = Case1{*draft.b};
  } else if (draft.case_value == "2") {
    if (!draft.theta) throw ParseError(line, "case 2 needs theta (rotation angle as a fraction of pi)");
    orbit.normal_form = Case2{*draft.theta};
  } else if (draft.case_value == "3") {
    if (!draft.b) throw ParseError(line, "case 3 needs b (0 or 1)");
    orbit.normal_form = Case3{*draft.b};
  } else if (draft.case_value == "4") {
    orbit.normal_form = Case4{};
  } else if (draft.case_value == "nd") {
    NonDegenerate nd;
    nd.second_block_elliptic = draft.elliptic.value_or(true);
    nd.index_jump_odd = draft.jump_odd.value_or(false);
    orbit.normal_form = nd;
  } else {
    throw ParseError(line, "case must be 1, 2, 3, 4, or nd, got '" + draft.case_value + "'");
  }
  if (!draft.i1) throw ParseError(line, "orbit block needs i1");
  orbit.i1 = *draft.i1;
  orbit.mean_index_hint = draft.ihat;
  for (const auto& [cls, vec] : draft.k_vectors) orbit.k_vectors[cls] = vec;
  if ((draft.b && draft.case_value != "1" && draft.case_value != "3"))
    throw ParseError(line, "b applies only to cases 1 and 3");
  if (draft.theta && draft.case_value != "2")
    throw ParseError(line, "theta applies only to case 2");
  if ((draft.jump_odd || draft.elliptic) && draft.case_value != "nd")
    throw ParseError(line, "jump_parity and elliptic apply only to case nd");
  try {
    validate(orbit);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
  return orbit;
}

CriticalTypeVector parse_k_vector(int line, const std::string& value) {
  CriticalTypeVector v;
  std::string entry;
  std::stringstream ss(value);
  while (std::getline(ss, entry, ',')) {
    entry = trim(entry);
    const auto r = parse_rational(entry);
    if (!r || !is_integer(*r) || *r < 0)
      throw ParseError(line, "critical type numbers must be nonnegative integers, got '" + entry + "'");
    v.k.push_back(to_long(numerator(*r)));
  }
  if (v.k.empty()) throw ParseError(line, "empty critical type vector");
  return v;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string run_mode_to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Analyze: return "analyze";
    case RunMode::Sweep: return "sweep";
    case RunMode::Table: return "table";
    case RunMode::Resonance: return "resonance";
  }
  return "unknown";
}

std::string output_format_to_string(OutputFormat format) {
  return format == OutputFormat::Text ? "text" : "kv";
}

RunConfig parse_config(std::string_view text, const RunConfig& base) {
  RunConfig config = base;
  bool orbits_replaced = false;
  std::vector<OrbitDraft> drafts;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key before '='");
    if (value.empty()) throw ParseError(line_no, "missing value for '" + key + "'");

    if (key == "mode") {
      if (value == "analyze") config.mode = RunMode::Analyze;
      else if (value == "sweep") config.mode = RunMode::Sweep;
      else if (value == "table") config.mode = RunMode::Table;
      else if (value == "resonance") config.mode = RunMode::Resonance;
      else throw ParseError(line_no, "mode must be analyze, sweep, table, or resonance");
    } else if (key == "format") {
      if (value == "text") config.format = OutputFormat::Text;
      else if (value == "kv") config.format = OutputFormat::KeyValue;
      else throw ParseError(line_no, "format must be text or kv");
    } else if (key == "truncation") {
      config.truncation = parse_integer(line_no, key, value);
    } else if (key == "i1_min") {
      config.i1_min = parse_integer(line_no, key, value);
    } else if (key == "i1_max") {
      config.i1_max = parse_integer(line_no, key, value);
    } else if (key == "q_max") {
      const long long q = parse_integer(line_no, key, value);
      if (q < 1) throw ParseError(line_no, "q_max must be >= 1");
      config.q_max = static_cast<int>(q);
    } else if (key == "m_max") {
      config.m_max = parse_integer(line_no, key, value);
    } else if (key == "case") {
      if (!orbits_replaced) {
        orbits_replaced = true;
        config.orbits.clear();
      }
      OrbitDraft draft;
      draft.start_line = line_no;
      draft.case_value = value;
      drafts.push_back(std::move(draft));
    } else if (key == "b" || key == "theta" || key == "i1" || key == "ihat" ||
               key == "jump_parity" || key == "elliptic" || key.rfind("k.", 0) == 0) {
      if (drafts.empty())
        throw ParseError(line_no, "'" + key + "' belongs to an orbit block; add a case= line first");
      OrbitDraft& draft = drafts.back();
      if (key == "b") {
        draft.b = static_cast<int>(parse_integer(line_no, key, value));
      } else if (key == "theta") {
        draft.theta = parse_fraction(line_no, key, value);
      } else if (key == "i1") {
        draft.i1 = parse_integer(line_no, key, value);
      } else if (key == "ihat") {
        draft.ihat = parse_fraction(line_no, key, value);
      } else if (key == "jump_parity") {
        if (value == "even") draft.jump_odd = false;
        else if (value == "odd") draft.jump_odd = true;
        else throw ParseError(line_no, "jump_parity must be even or odd");
      } else if (key == "elliptic") {
        if (value == "0") draft.elliptic = false;
        else if (value == "1") draft.elliptic = true;
        else throw ParseError(line_no, "elliptic must be 0 or 1");
      } else {
        const std::string cls_text = key.substr(2);
        const auto cls = parse_rational(cls_text);
        if (!cls || !is_integer(*cls) || *cls < 1)
          throw ParseError(line_no, "k-vector key must be k.R with a residue class R >= 1");
        draft.k_vectors.emplace_back(static_cast<int>(to_long(numerator(*cls))),
                                     parse_k_vector(line_no, value));
      }
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }

  for (const auto& draft : drafts) config.orbits.push_back(finalize_orbit(draft));
  return config;
}

namespace {

void append_orbit_keys(std::string& out, const OrbitConfig& orbit) {
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Case1>) {
          out += "case=1\nb=" + std::to_string(c.b) + "\n";
        } else if constexpr (std::is_same_v<T, Case2>) {
          out += "case=2\ntheta=" + rational_to_string(c.rotation) + "\n";
        } else if constexpr (std::is_same_v<T, Case3>) {
          out += "case=3\nb=" + std::to_string(c.b) + "\n";
        } else if constexpr (std::is_same_v<T, Case4>) {
          out += "case=4\n";
        } else {
          out += "case=nd\nelliptic=";
          out += c.second_block_elliptic ? '1' : '0';
          out += "\njump_parity=";
          out += c.index_jump_odd ? "odd" : "even";
          out += "\n";
        }
      },
      orbit.normal_form);
  out += "i1=" + std::to_string(orbit.i1) + "\n";
  if (orbit.mean_index_hint) out += "ihat=" + rational_to_string(*orbit.mean_index_hint) + "\n";
  for (const auto& [cls, vec] : orbit.k_vectors) {
    out += "k." + std::to_string(cls) + "=";
    for (std::size_t i = 0; i < vec.k.size(); ++i)
      out += (i ? "," : "") + std::to_string(vec.k[i]);
    out += "\n";
  }
}

// The orbit identity keys of a kv record (same names as the config format).
void append_orbit_record_keys(std::string& out, const OrbitConfig& orbit) {
  append_orbit_keys(out, orbit);
}

}  // namespace

std::string format_config(const RunConfig& config) {
  std::string out;
  out += "mode=" + run_mode_to_string(config.mode) + "\n";
  out += "format=" + output_format_to_string(config.format) + "\n";
  out += "truncation=" + std::to_string(config.truncation) + "\n";
  out += "i1_min=" + std::to_string(config.i1_min) + "\n";
  out += "i1_max=" + std::to_string(config.i1_max) + "\n";
  out += "q_max=" + std::to_string(config.q_max) + "\n";
  out += "m_max=" + std::to_string(config.m_max) + "\n";
  for (const auto& orbit : config.orbits) {
    out += "\n";
    append_orbit_keys(out, orbit);
  }
  return out;
}

std::string emit_verdict_report(const OrbitConfig& orbit, const Verdict& verdict,
                                OutputFormat format) {
  std::string out;
  if (format == OutputFormat::KeyValue) {
    out += "record=verdict\n";
    append_orbit_record_keys(out, orbit);
    if (verdict.mean_index) out += "mean_index=" + rational_to_string(*verdict.mean_index) + "\n";
    out += "minimal_period=" + std::to_string(verdict.minimal_period) + "\n";
    out += "verdict=" + verdict_kind_to_string(verdict.kind) + "\n";
    if (verdict.first_violation) {
      out += "violation_degree=" + std::to_string(verdict.first_violation->first) + "\n";
      out += "violation_u=" + rational_to_string(verdict.first_violation->second) + "\n";
    }
    for (std::size_t i = 0; i < verdict.morse_survivors.size(); ++i)
      for (const auto& [cls, vec] : verdict.morse_survivors[i]) {
        out += "survivor." + std::to_string(i + 1) + ".k." + std::to_string(cls) + "=";
        for (std::size_t j = 0; j < vec.k.size(); ++j)
          out += (j ? "," : "") + std::to_string(vec.k[j]);
        out += "\n";
      }
    return out;
  }
  out += "orbit: " + case_label(orbit.normal_form) + ", i(y,1) = " + std::to_string(orbit.i1) + "\n";
  if (verdict.mean_index) out += "mean_index=" + rational_to_string(*verdict.mean_index) + "\n";
  out += "minimal_period=" + std::to_string(verdict.minimal_period) + "\n";
  out += "verdict=" + verdict_kind_to_string(verdict.kind);
  if (verdict.kind == VerdictKind::SymplecticallyDegenerateMaximum)
    out += " (SDM: symplectically degenerate maximum)";
  out += "\n";
  if (verdict.first_violation && verdict.kind == VerdictKind::MorseSeriesContradiction)
    out += "first positivity violation: degree " + std::to_string(verdict.first_violation->first) +
           ", u = " + rational_to_string(verdict.first_violation->second) + "\n";
  out += "trace:\n";
  for (const auto& line : verdict.trace) out += "  " + line + "\n";
  return out;
}

std::string emit_sweep_report(const SweepReport& report, OutputFormat format) {
  const auto kinds = {VerdictKind::ResonanceContradiction, VerdictKind::MorseSeriesContradiction,
                      VerdictKind::SymplecticallyDegenerateMaximum,
                      VerdictKind::NonDegenerateExternal, VerdictKind::Feasible};
  std::string out;
  if (format == OutputFormat::KeyValue) {
    out += "record=sweep\n";
    out += "i1_min=" + std::to_string(report.i1_min) + "\n";
    out += "i1_max=" + std::to_string(report.i1_max) + "\n";
    out += "q_max=" + std::to_string(report.q_max) + "\n";
    out += "truncation=" + std::to_string(report.truncation) + "\n";
    out += "worlds=" + std::to_string(report.entries.size()) + "\n";
    for (const VerdictKind kind : kinds)
      out += verdict_kind_to_string(kind) + "=" + std::to_string(report.count(kind)) + "\n";
    out += "inconclusive=" + std::to_string(report.inconclusive.size()) + "\n";
    out += "certified=" + std::to_string(report.certified() ? 1 : 0) + "\n";
    for (const auto& entry : report.entries) {
      out += "\nrecord=verdict\n";
      append_orbit_record_keys(out, entry.config);
      if (entry.verdict.mean_index)
        out += "mean_index=" + rational_to_string(*entry.verdict.mean_index) + "\n";
      out += "minimal_period=" + std::to_string(entry.verdict.minimal_period) + "\n";
      out += "verdict=" + verdict_kind_to_string(entry.verdict.kind) + "\n";
      if (entry.verdict.first_violation) {
        out += "violation_degree=" + std::to_string(entry.verdict.first_violation->first) + "\n";
        out += "violation_u=" + rational_to_string(entry.verdict.first_violation->second) + "\n";
      }
    }
    return out;
  }
  out += "sweep: i(y,1) in [" + std::to_string(report.i1_min) + ", " +
         std::to_string(report.i1_max) + "], q_max=" + std::to_string(report.q_max) +
         ", truncation=" + std::to_string(report.truncation) + "\n";
  out += "worlds=" + std::to_string(report.entries.size()) + "\n";
  for (const VerdictKind kind : kinds)
    out += verdict_kind_to_string(kind) + "=" + std::to_string(report.count(kind)) + "\n";
  out += "inconclusive=" + std::to_string(report.inconclusive.size()) + "\n";
  std::string sdm_lines;
  for (const auto& entry : report.entries)
    if (entry.verdict.kind == VerdictKind::SymplecticallyDegenerateMaximum)
      sdm_lines += "  " + case_label(entry.config.normal_form) +
                   ", i(y,1) = " + std::to_string(entry.config.i1) + "\n";
  if (!sdm_lines.empty()) out += "SDM worlds (eliminated via infinitely-many):\n" + sdm_lines;
  for (const auto& [config, message] : report.inconclusive)
    out += "inconclusive: " + case_label(config.normal_form) +
           ", i(y,1) = " + std::to_string(config.i1) + ": " + message + "\n";
  out += report.certified()
             ? "certified: every single-orbit world is eliminated; at least two closed "
               "characteristics exist\n"
             : "NOT certified\n";
  return out;
}

std::string emit_iterate_table(const OrbitConfig& orbit, const std::vector<IterationData>& rows,
                               OutputFormat format) {
  std::string out;
  if (format == OutputFormat::KeyValue) {
    for (const auto& row : rows) {
      if (!out.empty()) out += "\n";
      out += "record=iterate\n";
      append_orbit_record_keys(out, orbit);
      out += "m=" + std::to_string(row.m) + "\n";
      out += "maslov=" + std::to_string(row.maslov) + "\n";
      out += "morse=" + std::to_string(row.morse) + "\n";
      out += "nullity=" + std::to_string(row.nullity) + "\n";
    }
    return out;
  }
  out += "orbit: " + case_label(orbit.normal_form) + ", i(y,1) = " + std::to_string(orbit.i1) + "\n";
  out += "   m  i(y,m)  i(y^m)  nu(y^m)\n";
  for (const auto& row : rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%4lld  %6lld  %6lld  %7d\n", row.m, row.maslov, row.morse,
                  row.nullity);
    out += buf;
  }
  return out;
}

std::string emit_resonance_report(const std::vector<OrbitConfig>& orbits,
                                  const ResonanceReport& report, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::KeyValue) {
    out += "record=resonance\n";
    out += "orbits=" + std::to_string(orbits.size()) + "\n";
    out += "sum_positive=" + rational_to_string(report.sum_positive) + "\n";
    out += "sum_negative=" + rational_to_string(report.sum_negative) + "\n";
    out += "positive_holds=" + std::to_string(report.positive_holds ? 1 : 0) + "\n";
    out += "negative_holds=" + std::to_string(report.negative_holds ? 1 : 0) + "\n";
    return out;
  }
  out += "resonance identities over " + std::to_string(orbits.size()) + " orbit(s)\n";
  for (const auto& orbit : orbits) {
    const Contribution c = contribution_of(orbit);
    out += "  " + case_label(orbit.normal_form) + ", i(y,1) = " + std::to_string(orbit.i1) +
           ": chi-hat = " + rational_to_string(c.chi_hat) +
           ", i-hat = " + rational_to_string(c.mean_index) + "\n";
  }
  out += "sum over i-hat > 0 of chi-hat/i-hat = " + rational_to_string(report.sum_positive) +
         (report.positive_holds ? " (= 1/2, holds)\n" : " (!= 1/2, fails)\n");
  out += "sum over i-hat < 0 of chi-hat/i-hat = " + rational_to_string(report.sum_negative) +
         (report.negative_holds ? " (= 0, holds)\n" : " (!= 0, fails)\n");
  return out;
}

}  // namespace maslovkit
