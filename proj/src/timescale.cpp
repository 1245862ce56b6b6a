#include "irfield/timescale.hpp"

#include <cmath>

#include "irfield/errors.hpp"

namespace irfield {

namespace {

void check_params(const PhysParams& params) {
  if (!(params.mass_m > 0.0) || !(params.alpha > 0.0) || !(params.hbar_eV_s > 0.0)) {
    throw DomainError("timescale requires positive mass, alpha, hbar");
  }
}

}  // namespace

double cutoff_from_duration(double tau_seconds, const PhysParams& params) {
  check_params(params);
  if (!(tau_seconds > 0.0)) throw DomainError("duration must be > 0");
  return params.hbar_eV_s / tau_seconds;
}

TimescaleReport zero_T_threshold_time(const PhysParams& params) {
  check_params(params);
  TimescaleReport report;
  report.regime = Regime::zero_T;
  report.params = params;
  const long double base = static_cast<long double>(params.hbar_eV_s) / params.mass_m;
  report.tau_seconds = base * std::exp(static_cast<long double>(3.0L * kPi / params.alpha));
  report.log10_tau = static_cast<double>(std::log10(report.tau_seconds));
  return report;
}

TimescaleReport finite_T_tau(double r_meters, double T_eV, const PhysParams& params) {
  check_params(params);
  if (!(r_meters > 0.0)) throw DomainError("r must be > 0");
  if (!(T_eV > 0.0)) throw DomainError("T must be > 0");
  TimescaleReport report;
  report.regime = Regime::finite_T;
  report.params = params;
  report.r_meters = r_meters;
  report.T_eV = T_eV;
  const double r_over_lc = r_meters / params.compton_length_m;
  report.tau_seconds = static_cast<long double>(3.0 * kPi * params.hbar_eV_s /
                                                (2.0 * params.alpha * T_eV)) *
                       r_over_lc * r_over_lc;
  report.log10_tau = static_cast<double>(std::log10(report.tau_seconds));
  return report;
}

double spreading_dominance_ratio(double T_eV, const PhysParams& params) {
  check_params(params);
  if (!(T_eV > 0.0)) throw DomainError("T must be > 0");
  return 3.0 * kPi / (2.0 * params.alpha) * (params.mass_m / T_eV);
}

}  // namespace irfield
