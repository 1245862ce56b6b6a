#include <array>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irfield/errors.hpp"
#include "irfield/run.hpp"

using namespace irfield;

int main(int argc, char** argv) {
  CLI::App app{
      "Infrared screening of the effective Coulomb field: suppression exponents,\n"
      "screened field profiles, nullification scans, and thermalization timescales.\n"
      "Energies are in eV and lengths in 1/eV unless a flag says otherwise."};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig config;
  double lambda0 = 0.0;
  double Lambda = 0.0;
  double tau = 0.0;
  double r = 0.0;
  std::vector<double> x0;
  std::string r_grid_text;
  std::string lambda0_grid_text;
  std::string regime_text = "zero_T";
  std::string format_text;

  app.add_option("--mass-eV", config.mass_eV, "electron mass in eV")->capture_default_str();
  app.add_option("--alpha", config.alpha, "fine-structure constant")->capture_default_str();
  app.add_option("--T", config.temperature_eV, "temperature in eV")->capture_default_str();
  app.add_option("--lambda-smear", config.lambda_smear_eV,
                 "propagator smearing scale in eV (0 = off)");
  auto* opt_lambda0 = app.add_option("--lambda0", lambda0, "IR cutoff lambda0 in eV");
  auto* opt_Lambda = app.add_option("--Lambda", Lambda, "soft upper cutoff Lambda in eV");
  app.add_option("--a", config.packet.width_a, "source packet rms width in 1/eV");
  app.add_option("--x0", x0, "source packet center, three components in 1/eV")->expected(3);
  app.add_option("--r-grid", r_grid_text, "radial grid in 1/eV: log:lo:hi:n or lin:lo:hi:n");
  app.add_option("--lambda0-grid", lambda0_grid_text,
                 "lambda0 grid in eV: log:lo:hi:n or lin:lo:hi:n");
  auto* opt_r =
      app.add_option("--r", r, "radius: 1/eV for field commands, meters for timescale");
  app.add_option("--regime", regime_text, "timescale regime")
      ->check(CLI::IsMember({"zero_T", "finite_T", "zero-T", "finite-T"}));
  auto* opt_tau =
      app.add_option("--tau", tau, "measurement duration in seconds; sets lambda0 = hbar/tau");
  app.add_option("--seed", config.seed, "PRNG seed for verify-identities")
      ->capture_default_str();
  app.add_option("--n-max", config.n_max, "largest weight count in verify-identities")
      ->check(CLI::Range(2u, 8u))
      ->capture_default_str();
  app.add_option("--format", format_text, "output format (default depends on the command)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", config.out_path, "write the report to this path instead of stdout");
  app.add_option("--tol-rel", config.tol_rel, "relative quadrature tolerance")
      ->capture_default_str();
  app.add_option("--hierarchy-ratio", config.hierarchy_ratio,
                 "required separation factor between adjacent scales")
      ->capture_default_str();
  app.add_flag("--lenient", config.lenient,
               "downgrade soft hierarchy violations to warnings when plain ordering holds");

  auto* cmd_exponent =
      app.add_subcommand("exponent", "suppression-exponent brackets and coefficient C");
  auto* cmd_profile =
      app.add_subcommand("field-profile", "screened field profile S(r) and enclosed charge");
  auto* cmd_flux = app.add_subcommand("flux", "enclosed-charge (Gauss law) check at one radius");
  auto* cmd_nullification = app.add_subcommand(
      "nullification-scan", "S at fixed r for a descending lambda0 grid");
  auto* cmd_verify =
      app.add_subcommand("verify-identities", "seeded identity and oracle cross-checks");
  auto* cmd_timescale =
      app.add_subcommand("timescale", "duration for the suppression to reach order one");
  auto* cmd_sweep = app.add_subcommand("sweep", "S and Q_frac over an r x lambda0 grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_exponent->parsed()) config.command = Command::exponent;
  if (cmd_profile->parsed()) config.command = Command::field_profile;
  if (cmd_flux->parsed()) config.command = Command::flux;
  if (cmd_nullification->parsed()) config.command = Command::nullification_scan;
  if (cmd_verify->parsed()) config.command = Command::verify_identities;
  if (cmd_timescale->parsed()) config.command = Command::timescale;
  if (cmd_sweep->parsed()) config.command = Command::sweep;

  if (opt_lambda0->count() > 0) config.lambda0_eV = lambda0;
  if (opt_Lambda->count() > 0) config.Lambda_eV = Lambda;
  if (opt_tau->count() > 0) config.tau_seconds = tau;
  if (opt_r->count() > 0) config.r = r;
  config.regime = (regime_text == "finite_T" || regime_text == "finite-T") ? Regime::finite_T
                                                                           : Regime::zero_T;
  if (!format_text.empty()) {
    config.format = format_text == "json" ? OutputFormat::json : OutputFormat::csv;
  }
  if (x0.size() == 3) config.packet.center_x0 = {x0[0], x0[1], x0[2]};

  try {
    if (!r_grid_text.empty()) config.r_grid = GridSpec::parse(r_grid_text);
    if (!lambda0_grid_text.empty()) config.lambda0_grid = GridSpec::parse(lambda0_grid_text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return execute(config, std::cout, std::cerr);
}
