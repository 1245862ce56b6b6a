#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "irfield/core.hpp"
#include "irfield/field.hpp"
#include "irfield/timescale.hpp"
#include "irfield/verify.hpp"

namespace irfield {

enum class Command {
  exponent,
  field_profile,
  flux,
  nullification_scan,
  verify_identities,
  timescale,
  sweep,
};

std::string command_name(Command command);

enum class OutputFormat { csv, json };

// Format used when the config does not pick one. Tabular physics output
// defaults to csv; report-style commands default to json.
OutputFormat default_format(Command command);

// Evaluation grid parsed from "log:lo:hi:n" or "lin:lo:hi:n". Endpoints are
// hit exactly; a log grid with hi < lo is the idiom for descending scans.
struct GridSpec {
  enum class Kind { log, lin };
  Kind kind = Kind::log;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;
  std::string text;  // original spec string, echoed in reports

  static GridSpec parse(const std::string& text);
  std::vector<double> values() const;
};

// Everything a run needs, collected up front so the CLI, the golden-file
// tool, and the tests drive the exact same entry point.
struct RunConfig {
  Command command = Command::exponent;

  double mass_eV = kDefaultMass_eV;
  double alpha = kDefaultAlpha;
  double temperature_eV = 0.0;

  double lambda_smear_eV = 0.0;       // propagator smearing scale; 0 = off
  std::optional<double> lambda0_eV;   // IR cutoff; alternative to tau_seconds
  std::optional<double> Lambda_eV;    // soft upper cutoff
  std::optional<double> tau_seconds;  // measurement duration; sets lambda0 = hbar/tau

  GaussianPacket packet;

  std::optional<GridSpec> r_grid;        // 1/eV
  std::optional<GridSpec> lambda0_grid;  // eV
  // Single radius: 1/eV for the field commands, meters for timescale.
  std::optional<double> r;

  Regime regime = Regime::zero_T;
  std::uint64_t seed = 1;
  unsigned n_max = 7;  // largest weight count in verify-identities, 2..8

  std::optional<OutputFormat> format;
  std::string out_path;  // empty = stdout
  double tol_rel = 1e-10;
  double hierarchy_ratio = 10.0;
  bool lenient = false;
};

// One table cell. long double exists solely for tau_seconds, which overflows
// double in the zero-temperature regime; it prints as %.21Lg and rides as a
// string in json so no reader silently rounds it to infinity.
using Cell = std::variant<double, long double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct RunReport {
  std::string command;
  std::string paper_anchor;
  nlohmann::ordered_json inputs;
  Table table;
  std::vector<VerificationItem> checks;
  // Informational only, never serialized: identical config and seed must
  // produce identical output bytes on one platform.
  double wall_time_s = 0.0;

  bool ok() const;
};

RunReport run(const RunConfig& config);

// csv: one header line, then %.17g doubles (%.21Lg for the long double
// column), text cells verbatim, every line newline-terminated.
std::string to_csv(const Table& table);
nlohmann::ordered_json to_json(const RunReport& report);

// Run, serialize, write to config.out_path or `out`. Exit code contract:
// 0 success, 1 a reported check failed, 2 bad configuration or domain error,
// 3 quadrature non-convergence.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace irfield
