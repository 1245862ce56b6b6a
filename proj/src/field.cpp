#include "irfield/field.hpp"

#include <cmath>

#include "irfield/errors.hpp"
#include "irfield/quadrature.hpp"

namespace irfield {

double packet_form_factor(const GaussianPacket& packet, double p_sq) {
  if (packet.width_a < 0.0) throw DomainError("packet width must be >= 0");
  if (!(p_sq >= 0.0)) throw DomainError("p_sq must be >= 0");
  return std::exp(-0.5 * packet.width_a * packet.width_a * p_sq);
}

namespace {

void check_profile_args(double r, double W) {
  if (!(r > 0.0)) throw DomainError("radius must be > 0");
  if (!(W >= 0.0)) throw DomainError("effective width squared must be >= 0");
}

}  // namespace

double screening_factor(double r, double W) {
  check_profile_args(r, W);
  if (W == 0.0) return 1.0;
  return erf(r / (2.0 * std::sqrt(W)));
}

double enclosed_charge_fraction(double r, double W) {
  check_profile_args(r, W);
  if (W == 0.0) return 1.0;
  const double x = r / (2.0 * std::sqrt(W));
  return erf(x) - r / std::sqrt(kPi * W) * std::exp(-x * x);
}

ScreeningProfile profile_from_width(double W, const std::vector<double>& r_grid) {
  if (r_grid.empty()) throw DomainError("empty r grid");
  ScreeningProfile profile;
  profile.effective_width_sq = W;
  profile.samples.reserve(r_grid.size());
  for (double r : r_grid) {
    profile.samples.push_back({r, screening_factor(r, W), enclosed_charge_fraction(r, W)});
  }
  return profile;
}

ScreeningProfile field_profile(const PhysParams& params, const CutoffScheme& cutoffs,
                               const GaussianPacket& packet, const std::vector<double>& r_grid,
                               Tolerance tol, double hierarchy_ratio, bool lenient) {
  if (packet.width_a < 0.0) throw DomainError("packet width must be >= 0");
  const IRExponent exponent = ir_brackets(params, cutoffs, tol, hierarchy_ratio, lenient);
  // Widths add in quadrature: IR suppression and packet spreading enter the
  // momentum integrand through the same Gaussian.
  const double W = exponent.coefficient_C + 0.5 * packet.width_a * packet.width_a;
  return profile_from_width(W, r_grid);
}

std::vector<std::pair<double, double>> nullification_scan(
    const PhysParams& params, double Lambda_soft, double temperature_T, double r,
    const std::vector<double>& lambda0_grid, Tolerance tol, double hierarchy_ratio,
    bool lenient) {
  if (lambda0_grid.empty()) throw DomainError("empty lambda0 grid");
  for (std::size_t i = 1; i < lambda0_grid.size(); ++i) {
    if (!(lambda0_grid[i] < lambda0_grid[i - 1])) {
      throw DomainError("lambda0 grid must be strictly descending");
    }
  }
  PhysParams scan_params = make_params(params.mass_m, params.alpha, temperature_T,
                                       params.hbar_eV_s);
  std::vector<std::pair<double, double>> out;
  out.reserve(lambda0_grid.size());
  for (double lambda0 : lambda0_grid) {
    CutoffScheme cutoffs{0.0, lambda0, Lambda_soft};
    const IRExponent exponent =
        ir_brackets(scan_params, cutoffs, tol, hierarchy_ratio, lenient);
    out.emplace_back(lambda0, screening_factor(r, exponent.coefficient_C));
  }
  return out;
}

}  // namespace irfield
