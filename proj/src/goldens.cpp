#include "irfield/goldens.hpp"

#include <fstream>

#include "irfield/errors.hpp"

namespace irfield {

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;

  {
    GoldenCase c;
    c.name = "exponent_T0";
    c.config.command = Command::exponent;
    c.config.Lambda_eV = 1000.0;
    c.config.lambda0_grid = GridSpec::parse("log:0.1:10:5");
    c.file = "exponent_T0.csv";
    c.column_rel_tol = {1e-15, 1e-15, 1e-15, 1e-12, 1e-12, 1e-12};
    cases.push_back(c);
  }
  {
    GoldenCase c;
    c.name = "exponent_finite_T";
    c.config.command = Command::exponent;
    c.config.temperature_eV = 0.025;
    c.config.Lambda_eV = 25.0;
    c.config.lambda0_grid = GridSpec::parse("log:1e-8:0.0001:5");
    c.file = "exponent_finite_T.csv";
    c.column_rel_tol = {1e-15, 1e-15, 1e-15, 1e-12, 1e-10, 1e-10};
    cases.push_back(c);
  }
  {
    GoldenCase c;
    c.name = "field_profile";
    c.config.command = Command::field_profile;
    c.config.temperature_eV = 0.025;
    c.config.lambda0_eV = 1e-6;
    c.config.Lambda_eV = 25.0;
    c.config.r_grid = GridSpec::parse("log:1e-9:0.001:50");
    c.file = "field_profile.csv";
    c.column_rel_tol = {1e-15, 1e-10, 1e-10};
    cases.push_back(c);
  }
  {
    GoldenCase c;
    c.name = "nullification_scan";
    c.config.command = Command::nullification_scan;
    c.config.temperature_eV = 0.025;
    c.config.Lambda_eV = 25.0;
    c.config.r = 2e-4;
    c.config.lambda0_grid = GridSpec::parse("log:1e-6:1e-14:9");
    c.file = "nullification_scan.csv";
    c.column_rel_tol = {1e-15, 1e-10};
    cases.push_back(c);
  }
  {
    GoldenCase c;
    c.name = "timescale_zero_T";
    c.config.command = Command::timescale;
    c.config.regime = Regime::zero_T;
    c.file = "timescale_zero_T.csv";
    c.column_rel_tol = {-1.0, 1e-15, 1e-15, 1e-15, 1e-13};
    cases.push_back(c);
  }
  {
    GoldenCase c;
    c.name = "timescale_finite_T";
    c.config.command = Command::timescale;
    c.config.regime = Regime::finite_T;
    c.config.temperature_eV = kRoomTemperature_eV;
    c.config.r = 1e-6;
    c.file = "timescale_finite_T.csv";
    c.column_rel_tol = {-1.0, 1e-15, 1e-15, 1e-13, 1e-13};
    cases.push_back(c);
  }

  return cases;
}

int regenerate_goldens(const std::string& dir, const std::string& filter) {
  int written = 0;
  for (const GoldenCase& c : golden_cases()) {
    if (!filter.empty() && c.name.rfind(filter, 0) != 0) continue;
    const RunReport report = run(c.config);
    const std::string path = dir + "/" + c.file;
    std::ofstream file(path);
    if (!file) throw IOError("cannot open golden file for writing: " + path);
    file << to_csv(report.table);
    file.flush();
    if (!file) throw IOError("short write: " + path);
    ++written;
  }
  return written;
}

}  // namespace irfield
