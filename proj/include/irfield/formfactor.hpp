#pragma once

#include <cstddef>

#include "irfield/core.hpp"
#include "irfield/quadrature.hpp"

namespace irfield {

// Infrared exponent of the resummed soft-photon form factor
//
//   R(p) = exp(-coefficient_C * p^2),
//   coefficient_C = (alpha / (3 pi m^2)) * (vacuum_bracket + thermal_bracket),
//
// with the master integrand (1 + 2 n(k))/k over the soft window
// [lambda0, Lambda]: the vacuum part integrates dk/k to ln(Lambda/lambda0),
// the thermal part carries the Bose factor n(k) = 1/(e^{k/T} - 1).
struct IRExponent {
  double coefficient_C = 0.0;   // eV^-2
  double vacuum_bracket = 0.0;  // dimensionless
  double thermal_bracket = 0.0; // dimensionless; exactly 0 at T = 0
  CutoffScheme cutoffs;
  PhysParams params;
};

// Raw bracket integrals, no hierarchy gate. vacuum_bracket_quadrature
// integrates dk/k numerically (the analytic value is ln(Lambda/lambda0));
// thermal_bracket_quadrature integrates 2 n(k) dk/k on a log abscissa.
double vacuum_bracket_quadrature(const CutoffScheme& cutoffs, Tolerance tol = {});
double thermal_bracket_quadrature(double temperature_T, const CutoffScheme& cutoffs,
                                  Tolerance tol = {});

// Full exponent with the hierarchy enforced. The vacuum bracket is computed
// both analytically and by quadrature; disagreement beyond tol is an error.
// The stored vacuum_bracket is the analytic value.
IRExponent ir_brackets(const PhysParams& params, const CutoffScheme& cutoffs, Tolerance tol = {},
                       double hierarchy_ratio = 10.0, bool lenient = false);

// Independent series oracle for the thermal bracket:
//
//   2 sum_{j=1..terms} [ E1(j lambda0/T) - E1(j Lambda/T) ],
//
// the expansion of the Bose factor in powers of e^{-k/T}. Plain truncation:
// the caller picks `terms` to cover the tail, which needs roughly
// 25 T/lambda0 terms for rel 1e-8.
double thermal_bracket_oracle(const PhysParams& params, const CutoffScheme& cutoffs,
                              std::size_t terms);

struct FormFactorValue {
  double R = 1.0;       // in (0, 1]
  double p_sq = 0.0;    // spatial momentum-transfer squared, eV^2
  IRExponent exponent;
};

// R = exp(-coefficient_C * p_sq); valid for |p| <= m/10.
FormFactorValue form_factor(double p_sq, const IRExponent& exponent);

// Suppression of the off-diagonal effective-density-matrix element
// rho(q, q+p): R evaluated at the transfer |p|. The diagonal momentum
// q_diag does not enter at this order; p = 0 returns exactly 1.
double effective_rho_suppression(double q_diag, double p, const IRExponent& exponent);

}  // namespace irfield
