#include "irfield/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "irfield/errors.hpp"
#include "irfield/formfactor.hpp"
#include "irfield/quadrature.hpp"

namespace irfield {

std::string command_name(Command command) {
  switch (command) {
    case Command::exponent: return "exponent";
    case Command::field_profile: return "field-profile";
    case Command::flux: return "flux";
    case Command::nullification_scan: return "nullification-scan";
    case Command::verify_identities: return "verify-identities";
    case Command::timescale: return "timescale";
    case Command::sweep: return "sweep";
  }
  throw ConfigError("unknown command");
}

OutputFormat default_format(Command command) {
  switch (command) {
    case Command::exponent:
    case Command::field_profile:
    case Command::nullification_scan:
    case Command::sweep: return OutputFormat::csv;
    case Command::flux:
    case Command::verify_identities:
    case Command::timescale: return OutputFormat::json;
  }
  return OutputFormat::csv;
}

GridSpec GridSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream stream(text);
  while (std::getline(stream, piece, ':')) parts.push_back(piece);
  if (parts.size() != 4) {
    throw ConfigError("grid must look like log:lo:hi:n or lin:lo:hi:n, got '" + text + "'");
  }
  GridSpec grid;
  grid.text = text;
  if (parts[0] == "log") {
    grid.kind = Kind::log;
  } else if (parts[0] == "lin") {
    grid.kind = Kind::lin;
  } else {
    throw ConfigError("grid kind must be log or lin, got '" + parts[0] + "'");
  }
  try {
    std::size_t used = 0;
    grid.lo = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    grid.hi = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    const long long count = std::stoll(parts[3], &used);
    if (used != parts[3].size() || count < 1) throw std::invalid_argument(parts[3]);
    grid.n = static_cast<std::size_t>(count);
  } catch (const std::exception&) {
    throw ConfigError("bad grid numbers in '" + text + "'");
  }
  if (grid.kind == Kind::log && !(grid.lo > 0.0 && grid.hi > 0.0)) {
    throw ConfigError("log grid endpoints must be positive in '" + text + "'");
  }
  return grid;
}

std::vector<double> GridSpec::values() const {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      out.push_back(lo);
    } else if (i == n - 1) {
      out.push_back(hi);
    } else {
      const double t = static_cast<double>(i) / static_cast<double>(n - 1);
      out.push_back(kind == Kind::log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
    }
  }
  return out;
}

bool RunReport::ok() const {
  for (const auto& check : checks) {
    if (!check.pass) return false;
  }
  return true;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_long_double(long double v) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.21Lg", v);
  return buf;
}

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* ld = std::get_if<long double>(&cell)) return format_long_double(*ld);
  return std::get<std::string>(cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* ld = std::get_if<long double>(&cell)) return format_long_double(*ld);
  return std::get<std::string>(cell);
}

const char* regime_name(Regime regime) {
  return regime == Regime::zero_T ? "zero_T" : "finite_T";
}

nlohmann::ordered_json inputs_echo(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["mass_eV"] = config.mass_eV;
  j["alpha"] = config.alpha;
  j["T_eV"] = config.temperature_eV;
  j["lambda_smear_eV"] = config.lambda_smear_eV;
  if (config.lambda0_eV) j["lambda0_eV"] = *config.lambda0_eV;
  if (config.Lambda_eV) j["Lambda_eV"] = *config.Lambda_eV;
  if (config.tau_seconds) j["tau_s"] = *config.tau_seconds;
  j["a_eV_inv"] = config.packet.width_a;
  j["x0_eV_inv"] = config.packet.center_x0;
  if (config.r_grid) j["r_grid"] = config.r_grid->text;
  if (config.lambda0_grid) j["lambda0_grid"] = config.lambda0_grid->text;
  if (config.r) {
    if (config.command == Command::timescale) {
      j["r_m"] = *config.r;
    } else {
      j["r_eV_inv"] = *config.r;
    }
  }
  if (config.command == Command::timescale) j["regime"] = regime_name(config.regime);
  if (config.command == Command::verify_identities) j["seed"] = config.seed;
  j["tol_rel"] = config.tol_rel;
  j["hierarchy_ratio"] = config.hierarchy_ratio;
  j["lenient"] = config.lenient;
  return j;
}

VerificationItem make_check(std::string name, double deviation, double tolerance) {
  VerificationItem item;
  item.name = std::move(name);
  item.max_deviation = deviation;
  item.tolerance = tolerance;
  item.pass = deviation <= tolerance;
  return item;
}

double require_Lambda(const RunConfig& config) {
  if (!config.Lambda_eV) throw ConfigError("--Lambda is required for this command");
  return *config.Lambda_eV;
}

// The IR cutoff may be given directly or through a measurement duration.
double resolve_lambda0(const RunConfig& config, const PhysParams& params) {
  if (config.lambda0_eV && config.tau_seconds) {
    throw ConfigError("give either --lambda0 or --tau, not both");
  }
  if (config.tau_seconds) return cutoff_from_duration(*config.tau_seconds, params);
  if (config.lambda0_eV) return *config.lambda0_eV;
  throw ConfigError("an IR cutoff is required: --lambda0 or --tau");
}

Tolerance run_tolerance(const RunConfig& config) { return Tolerance{config.tol_rel, 0.0}; }

void run_exponent(const RunConfig& config, RunReport& report) {
  const PhysParams params =
      make_params(config.mass_eV, config.alpha, config.temperature_eV);
  const double Lambda = require_Lambda(config);
  std::vector<double> lambda0s;
  if (config.lambda0_grid) {
    if (config.lambda0_eV || config.tau_seconds) {
      throw ConfigError("give either --lambda0-grid or a single cutoff, not both");
    }
    lambda0s = config.lambda0_grid->values();
  } else {
    lambda0s.push_back(resolve_lambda0(config, params));
  }
  report.table.columns = {"lambda0_eV",     "Lambda_eV",      "T_eV",
                          "vacuum_bracket", "thermal_bracket", "coefficient_C_eV_m2"};
  for (double lambda0 : lambda0s) {
    const IRExponent exponent =
        ir_brackets(params, CutoffScheme{config.lambda_smear_eV, lambda0, Lambda},
                    run_tolerance(config), config.hierarchy_ratio, config.lenient);
    report.table.rows.push_back({Cell{lambda0}, Cell{Lambda}, Cell{params.temperature_T},
                                 Cell{exponent.vacuum_bracket}, Cell{exponent.thermal_bracket},
                                 Cell{exponent.coefficient_C}});
  }
  report.paper_anchor = params.temperature_T > 0.0
                            ? "bracket_T_2T_over_lambda0_plus_ln_Lambda_over_T"
                            : "bracket_T0_ln_Lambda_over_lambda0";
}

void run_field_profile(const RunConfig& config, RunReport& report) {
  const PhysParams params =
      make_params(config.mass_eV, config.alpha, config.temperature_eV);
  const double Lambda = require_Lambda(config);
  const double lambda0 = resolve_lambda0(config, params);
  if (!config.r_grid) throw ConfigError("--r-grid is required for field-profile");
  const ScreeningProfile profile =
      field_profile(params, CutoffScheme{config.lambda_smear_eV, lambda0, Lambda}, config.packet,
                    config.r_grid->values(), run_tolerance(config), config.hierarchy_ratio,
                    config.lenient);
  report.table.columns = {"r_eV_inv", "S", "Q_frac"};
  double monotone_dev = 0.0;
  double range_dev = 0.0;
  for (std::size_t i = 0; i < profile.samples.size(); ++i) {
    const ProfileSample& s = profile.samples[i];
    report.table.rows.push_back({Cell{s.r}, Cell{s.S}, Cell{s.Q_frac}});
    if (i > 0) monotone_dev = std::max(monotone_dev, profile.samples[i - 1].S - s.S);
    range_dev = std::max({range_dev, -s.S, s.S - 1.0, -s.Q_frac, s.Q_frac - 1.0});
  }
  report.checks.push_back(make_check("S_monotone_in_r", monotone_dev, 1e-12));
  report.checks.push_back(make_check("S_and_Q_frac_in_unit_interval", range_dev, 0.0));
  report.paper_anchor = "screened_coulomb_erf_profile";
}

void run_flux(const RunConfig& config, RunReport& report) {
  const PhysParams params =
      make_params(config.mass_eV, config.alpha, config.temperature_eV);
  const double Lambda = require_Lambda(config);
  const double lambda0 = resolve_lambda0(config, params);
  const IRExponent exponent =
      ir_brackets(params, CutoffScheme{config.lambda_smear_eV, lambda0, Lambda},
                  run_tolerance(config), config.hierarchy_ratio, config.lenient);
  const double W = exponent.coefficient_C + 0.5 * config.packet.width_a * config.packet.width_a;
  const double r = config.r ? *config.r : 10.0 * std::sqrt(W);
  const double S = screening_factor(r, W);
  const double Q_frac = enclosed_charge_fraction(r, W);
  const double residual = std::abs(Q_frac - 1.0);
  report.table.columns = {"r_eV_inv", "S", "Q_frac", "gauss_residual"};
  report.table.rows.push_back({Cell{r}, Cell{S}, Cell{Q_frac}, Cell{residual}});
  report.checks.push_back(make_check("gauss_law_unit_enclosed_charge", residual, 1e-6));
  report.paper_anchor = "gauss_law_unit_enclosed_charge";
}

void run_nullification_scan(const RunConfig& config, RunReport& report) {
  const PhysParams params =
      make_params(config.mass_eV, config.alpha, config.temperature_eV);
  const double Lambda = require_Lambda(config);
  if (!config.lambda0_grid) throw ConfigError("--lambda0-grid is required for nullification-scan");
  if (!config.r) throw ConfigError("--r is required for nullification-scan");
  const auto scan =
      nullification_scan(params, Lambda, config.temperature_eV, *config.r,
                         config.lambda0_grid->values(), run_tolerance(config),
                         config.hierarchy_ratio, config.lenient);
  report.table.columns = {"lambda0_eV", "S_at_r"};
  double monotone_dev = 0.0;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    report.table.rows.push_back({Cell{scan[i].first}, Cell{scan[i].second}});
    if (i > 0) monotone_dev = std::max(monotone_dev, scan[i].second - scan[i - 1].second);
  }
  report.checks.push_back(make_check("S_monotone_decreasing", monotone_dev, 0.0));
  report.paper_anchor = "field_nullification_lambda0_to_0";
}

void run_verify_identities(const RunConfig& config, RunReport& report) {
  report.checks = verify_identities(config.seed, config.n_max);
  report.table.columns = {"check", "max_deviation", "tolerance", "pass"};
  for (const auto& item : report.checks) {
    report.table.rows.push_back({Cell{item.name}, Cell{item.max_deviation}, Cell{item.tolerance},
                                 Cell{std::string(item.pass ? "true" : "false")}});
  }
  report.paper_anchor = "eikonal_factorization_and_2term_vanishing";
}

void run_timescale(const RunConfig& config, RunReport& report) {
  const PhysParams params =
      make_params(config.mass_eV, config.alpha, config.temperature_eV);
  TimescaleReport ts;
  if (config.regime == Regime::zero_T) {
    ts = zero_T_threshold_time(params);
  } else {
    if (!config.r) throw ConfigError("--r (meters) is required in the finite_T regime");
    if (!(config.temperature_eV > 0.0)) {
      throw ConfigError("--T must be positive in the finite_T regime");
    }
    ts = finite_T_tau(*config.r, config.temperature_eV, params);
  }

  report.table.columns = {"regime", "r_m", "T_eV", "tau_seconds", "log10_tau"};
  report.table.rows.push_back({Cell{std::string(regime_name(ts.regime))}, Cell{ts.r_meters},
                               Cell{ts.T_eV}, Cell{ts.tau_seconds}, Cell{ts.log10_tau}});

  const double log_dev =
      std::abs(ts.log10_tau - static_cast<double>(std::log10(ts.tau_seconds)));
  report.checks.push_back(make_check("log10_matches_tau", log_dev, 1e-12));

  // Round trip: the reported duration fixes lambda0 = hbar/tau, and at that
  // cutoff the suppression exponent for the regime's momentum scale should
  // sit at order one. Carried in extended precision because the zero-T
  // cutoff underflows double.
  double roundtrip = 0.0;
  if (ts.regime == Regime::zero_T) {
    const long double x =
        ts.tau_seconds * static_cast<long double>(params.mass_m / params.hbar_eV_s);
    roundtrip = static_cast<double>(params.alpha / (3.0 * kPi) * std::log(x));
  } else {
    const double lambda0 = params.hbar_eV_s / static_cast<double>(ts.tau_seconds);
    const double r_eV_inv = ts.r_meters / (params.hbar_eV_s * kSpeedOfLight_m_s);
    const double p = 1.0 / r_eV_inv;
    roundtrip = params.alpha / (3.0 * kPi * params.mass_m * params.mass_m) *
                (2.0 * ts.T_eV / lambda0) * p * p;
  }
  const double window_dev = std::max(0.3 / roundtrip, roundtrip / 3.0);
  report.checks.push_back(make_check("tau_roundtrip_exponent_order_one", window_dev, 1.0));

  if (ts.regime == Regime::finite_T) {
    const double ratio = spreading_dominance_ratio(ts.T_eV, params);
    report.checks.push_back(make_check("spreading_dominates_by_1e9", 1e9 / ratio, 1.0));
  }
  report.paper_anchor = ts.regime == Regime::zero_T ? "tau_zero_T_10^540"
                                                    : "tau_finite_T_room_10^2_to_10^10";
}

void run_sweep(const RunConfig& config, RunReport& report) {
  const PhysParams params =
      make_params(config.mass_eV, config.alpha, config.temperature_eV);
  const double Lambda = require_Lambda(config);
  if (!config.lambda0_grid) throw ConfigError("--lambda0-grid is required for sweep");
  if (!config.r_grid) throw ConfigError("--r-grid is required for sweep");
  const std::vector<double> r_values = config.r_grid->values();
  report.table.columns = {"lambda0_eV", "r_eV_inv", "S", "Q_frac"};
  for (double lambda0 : config.lambda0_grid->values()) {
    const IRExponent exponent =
        ir_brackets(params, CutoffScheme{config.lambda_smear_eV, lambda0, Lambda},
                    run_tolerance(config), config.hierarchy_ratio, config.lenient);
    const double W =
        exponent.coefficient_C + 0.5 * config.packet.width_a * config.packet.width_a;
    for (double r : r_values) {
      report.table.rows.push_back({Cell{lambda0}, Cell{r}, Cell{screening_factor(r, W)},
                                   Cell{enclosed_charge_fraction(r, W)}});
    }
  }
  report.paper_anchor = "nullification_sweep_r_lambda0";
}

}  // namespace

RunReport run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command_name(config.command);
  report.inputs = inputs_echo(config);
  switch (config.command) {
    case Command::exponent: run_exponent(config, report); break;
    case Command::field_profile: run_field_profile(config, report); break;
    case Command::flux: run_flux(config, report); break;
    case Command::nullification_scan: run_nullification_scan(config, report); break;
    case Command::verify_identities: run_verify_identities(config, report); break;
    case Command::timescale: run_timescale(config, report); break;
    case Command::sweep: run_sweep(config, report); break;
  }
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["paper_anchor"] = report.paper_anchor;
  j["inputs"] = report.inputs;
  j["payload"]["columns"] = report.table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.table.rows) {
    auto cells = nlohmann::ordered_json::array();
    for (const auto& cell : row) cells.push_back(cell_json(cell));
    rows.push_back(std::move(cells));
  }
  j["payload"]["rows"] = std::move(rows);
  auto checks = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    nlohmann::ordered_json c;
    c["name"] = check.name;
    c["max_deviation"] = check.max_deviation;
    c["tolerance"] = check.tolerance;
    c["pass"] = check.pass;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const RunReport report = run(config);
    const OutputFormat format = config.format.value_or(default_format(config.command));
    const std::string text = format == OutputFormat::csv
                                 ? to_csv(report.table)
                                 : to_json(report).dump(2) + "\n";
    if (!config.out_path.empty()) {
      std::ofstream file(config.out_path);
      if (!file) throw IOError("cannot open output file: " + config.out_path);
      file << text;
      file.flush();
      if (!file) throw IOError("short write: " + config.out_path);
    } else {
      out << text;
    }
    if (!report.ok()) {
      for (const auto& check : report.checks) {
        if (!check.pass) {
          err << "check failed: " << check.name << " (deviation " << check.max_deviation
              << ", tolerance " << check.tolerance << ")\n";
        }
      }
      return 1;
    }
    return 0;
  } catch (const NonConvergence& e) {
    err << "non-convergence: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace irfield
