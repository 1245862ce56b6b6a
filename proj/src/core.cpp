#include "irfield/core.hpp"

#include <cmath>

#include "irfield/errors.hpp"

namespace irfield {

double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

PhysParams make_params(double mass_m, double alpha, double temperature_T, double hbar_eV_s) {
  PhysParams p;
  p.mass_m = mass_m;
  p.alpha = alpha;
  p.temperature_T = temperature_T;
  p.hbar_eV_s = hbar_eV_s;
  p.compton_length_m = hbar_eV_s * kSpeedOfLight_m_s / mass_m;
  return p;
}

namespace {

// One strict separation a < b/ratio. Lenient mode keeps it alive as a warning
// while the plain ordering a < b still holds.
void check_separation(const std::string& name, double a, double b, double ratio, bool lenient,
                      HierarchyReport& report) {
  if (a < b / ratio) return;
  if (lenient && a < b) {
    report.warnings.push_back(name);
  } else {
    report.violations.push_back(name);
  }
}

}  // namespace

HierarchyReport validate_hierarchy(const PhysParams& params, const CutoffScheme& cutoffs,
                                   double ratio, bool lenient) {
  if (!(ratio > 1.0)) throw DomainError("hierarchy ratio must exceed 1");
  HierarchyReport report;
  const auto hard = [&report](const std::string& name, bool ok) {
    if (!ok) report.violations.push_back(name);
  };

  hard("mass_positive", params.mass_m > 0.0);
  hard("alpha_in_range", params.alpha > 0.0 && params.alpha < 0.1);
  hard("temperature_nonnegative", params.temperature_T >= 0.0);
  hard("hbar_positive", params.hbar_eV_s > 0.0);
  if (params.mass_m > 0.0 && params.hbar_eV_s > 0.0) {
    const double derived = params.hbar_eV_s * kSpeedOfLight_m_s / params.mass_m;
    hard("compton_length_consistent",
         std::abs(params.compton_length_m - derived) <= 1e-12 * derived);
  }
  hard("lambda0_positive", cutoffs.lambda0_ir > 0.0);
  hard("lambda_smear_nonnegative", cutoffs.lambda_smear >= 0.0);
  hard("lambda0_below_Lambda_soft", cutoffs.lambda0_ir < cutoffs.Lambda_soft);

  if (params.temperature_T > 0.0 && params.mass_m > 0.0) {
    // Fixed bound: T/m < 1e-2 regardless of the configurable ratio.
    const bool strict = params.temperature_T < kMaxTemperatureMassRatio * params.mass_m;
    if (!strict) {
      if (lenient && params.temperature_T < params.mass_m) {
        report.warnings.push_back("temperature_below_mass");
      } else {
        report.violations.push_back("temperature_below_mass");
      }
    }
  }
  if (cutoffs.lambda_smear > 0.0) {
    check_separation("lambda_smear_below_lambda0", cutoffs.lambda_smear, cutoffs.lambda0_ir,
                     ratio, lenient, report);
  }
  check_separation("Lambda_soft_below_mass", cutoffs.Lambda_soft, params.mass_m, ratio, lenient,
                   report);
  if (params.temperature_T > 0.0) {
    check_separation("lambda0_below_temperature", cutoffs.lambda0_ir, params.temperature_T, ratio,
                     lenient, report);
    check_separation("temperature_below_Lambda_soft", params.temperature_T, cutoffs.Lambda_soft,
                     ratio, lenient, report);
  }
  return report;
}

void require_hierarchy(const PhysParams& params, const CutoffScheme& cutoffs, double ratio,
                       bool lenient) {
  HierarchyReport report = validate_hierarchy(params, cutoffs, ratio, lenient);
  if (!report.ok()) throw HierarchyViolation(report.violations);
}

}  // namespace irfield
