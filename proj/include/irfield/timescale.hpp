#pragma once

#include "irfield/core.hpp"

namespace irfield {

enum class Regime { zero_T, finite_T };

struct TimescaleReport {
  Regime regime = Regime::zero_T;
  // The zero-T threshold time is ~1e540 s, beyond double range, so tau is
  // carried in extended precision; log10_tau is always log10(tau_seconds).
  long double tau_seconds = 0.0L;
  double log10_tau = 0.0;
  double r_meters = 0.0;  // 0 when the regime has no length scale
  double T_eV = 0.0;      // 0 in the zero-T regime
  PhysParams params;
};

// Measurement of duration tau restricts resolvable momenta: lambda0 = hbar/tau.
double cutoff_from_duration(double tau_seconds, const PhysParams& params);

// Duration at which the vacuum suppression exponent reaches unity,
// (alpha/3 pi) ln(m tau / hbar) = 1, i.e. tau = (hbar/m) exp(3 pi / alpha).
TimescaleReport zero_T_threshold_time(const PhysParams& params);

// Duration at which the thermal suppression at scale r reaches unity:
// tau = (3 pi hbar / (2 alpha T)) (r / l_c)^2, l_c the Compton length.
TimescaleReport finite_T_tau(double r_meters, double T_eV, const PhysParams& params);

// tau_thermal / tau_spread = (3 pi / (2 alpha)) (m / T), independent of r;
// much greater than 1 means free quantum spreading buries the IR effect.
double spreading_dominance_ratio(double T_eV, const PhysParams& params);

}  // namespace irfield
