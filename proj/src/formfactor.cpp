#include "irfield/formfactor.hpp"

#include <cmath>

#include "irfield/errors.hpp"

namespace irfield {

namespace {

void check_window(const CutoffScheme& cutoffs) {
  if (!(cutoffs.lambda0_ir > 0.0) || !(cutoffs.Lambda_soft > cutoffs.lambda0_ir)) {
    throw DomainError("soft window requires 0 < lambda0 < Lambda");
  }
}

}  // namespace

double vacuum_bracket_quadrature(const CutoffScheme& cutoffs, Tolerance tol) {
  check_window(cutoffs);
  const auto result = adaptive_integrate([](double k) { return 1.0 / k; }, cutoffs.lambda0_ir,
                                         cutoffs.Lambda_soft, tol);
  return result.value;
}

double thermal_bracket_quadrature(double temperature_T, const CutoffScheme& cutoffs,
                                  Tolerance tol) {
  check_window(cutoffs);
  if (!(temperature_T > 0.0)) throw DomainError("thermal bracket requires T > 0");
  const double T = temperature_T;
  // Log abscissa u = ln k flattens the decades:
  //   integral 2 n(k) dk/k = integral 2/expm1(e^u/T) du.
  const auto integrand = [T](double u) {
    const double ratio = std::exp(u) / T;
    if (ratio > 700.0) return 0.0;  // Bose factor below double underflow
    return 2.0 / std::expm1(ratio);
  };
  const auto result = adaptive_integrate(integrand, std::log(cutoffs.lambda0_ir),
                                         std::log(cutoffs.Lambda_soft), tol);
  return result.value;
}

IRExponent ir_brackets(const PhysParams& params, const CutoffScheme& cutoffs, Tolerance tol,
                       double hierarchy_ratio, bool lenient) {
  require_hierarchy(params, cutoffs, hierarchy_ratio, lenient);

  // Integrate tighter than the agreement gate so the gate tests the paths,
  // not the integrator's own margin.
  Tolerance inner{tol.rel / 4.0, tol.abs / 4.0};
  const double vacuum_analytic = std::log(cutoffs.Lambda_soft / cutoffs.lambda0_ir);
  const double vacuum_numeric = vacuum_bracket_quadrature(cutoffs, inner);
  if (std::abs(vacuum_numeric - vacuum_analytic) >
      std::max(tol.abs, tol.rel * std::abs(vacuum_analytic))) {
    throw NonConvergence("vacuum bracket: quadrature and analytic paths disagree");
  }

  IRExponent exponent;
  exponent.vacuum_bracket = vacuum_analytic;
  exponent.thermal_bracket =
      params.temperature_T > 0.0
          ? thermal_bracket_quadrature(params.temperature_T, cutoffs, inner)
          : 0.0;
  exponent.coefficient_C = params.alpha / (3.0 * kPi * params.mass_m * params.mass_m) *
                           (exponent.vacuum_bracket + exponent.thermal_bracket);
  exponent.cutoffs = cutoffs;
  exponent.params = params;
  return exponent;
}

double thermal_bracket_oracle(const PhysParams& params, const CutoffScheme& cutoffs,
                              std::size_t terms) {
  check_window(cutoffs);
  if (!(params.temperature_T > 0.0)) throw DomainError("thermal bracket requires T > 0");
  if (terms == 0) throw DomainError("oracle needs at least one term");
  const double x0 = cutoffs.lambda0_ir / params.temperature_T;
  const double x1 = cutoffs.Lambda_soft / params.temperature_T;
  double sum = 0.0;
  for (std::size_t j = terms; j >= 1; --j) {  // small terms first
    sum += exp_integral_E1(j * x0) - exp_integral_E1(j * x1);
  }
  return 2.0 * sum;
}

FormFactorValue form_factor(double p_sq, const IRExponent& exponent) {
  if (!(p_sq >= 0.0)) throw DomainError("p_sq must be >= 0");
  const double m = exponent.params.mass_m;
  if (p_sq > (m / 10.0) * (m / 10.0)) {
    throw NonrelativisticViolation("momentum transfer outside |p| <= m/10");
  }
  FormFactorValue out;
  out.p_sq = p_sq;
  out.exponent = exponent;
  out.R = std::exp(-exponent.coefficient_C * p_sq);
  return out;
}

double effective_rho_suppression(double q_diag, double p, const IRExponent& exponent) {
  if (!std::isfinite(q_diag)) throw DomainError("q_diag must be finite");
  if (p == 0.0) return 1.0;
  return form_factor(p * p, exponent).R;
}

}  // namespace irfield
