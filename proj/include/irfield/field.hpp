#pragma once

#include <array>
#include <utility>
#include <vector>

#include "irfield/core.hpp"
#include "irfield/formfactor.hpp"

namespace irfield {

// Gaussian wave packet of the source electron. Momentum-space form factor
// exp(-a^2 p^2 / 2), so F(0) = 1 and the packet only ever adds a^2/2 to the
// effective Gaussian width below.
struct GaussianPacket {
  std::array<double, 3> center_x0{0.0, 0.0, 0.0};  // eV^-1
  double width_a = 0.0;                            // position rms width, eV^-1; 0 = point
};

double packet_form_factor(const GaussianPacket& packet, double p_sq);

struct ProfileSample {
  double r = 0.0;       // distance from the packet center, eV^-1
  double S = 0.0;       // screening factor, potential / Coulomb
  double Q_frac = 0.0;  // enclosed-charge fraction
};

struct ScreeningProfile {
  std::vector<ProfileSample> samples;
  double effective_width_sq = 0.0;  // W = coefficient_C + width_a^2/2, eV^-2
};

// Screening factor of the effective potential, S(r) = erf(r / (2 sqrt(W)))
// for W > 0 and 1 at W = 0 (bare Coulomb): the radial Fourier transform of
// exp(-W p^2)/p^2 against the point-charge one. The closed form is pinned to
// a brute-force radial-Fourier quadrature oracle in the tests.
double screening_factor(double r, double W);

// Fraction of the source charge inside radius r, from the flux of the
// effective field: S(r) - (r/sqrt(pi W)) exp(-r^2/(4W)) for W > 0, 1 at
// W = 0. Equals the Gaussian ball integral of the equivalent charge density
// (per-axis variance 2W); pinned to that oracle in the tests.
double enclosed_charge_fraction(double r, double W);

// Profile for any effective width; the shared core of the ops below.
ScreeningProfile profile_from_width(double W, const std::vector<double>& r_grid);

// Full pipeline: hierarchy gate, IR exponent, W = C + a^2/2, profile.
ScreeningProfile field_profile(const PhysParams& params, const CutoffScheme& cutoffs,
                               const GaussianPacket& packet, const std::vector<double>& r_grid,
                               Tolerance tol = {}, double hierarchy_ratio = 10.0,
                               bool lenient = false);

// S(r; lambda0) for a descending lambda0 grid at fixed r and a point source;
// monotone decreasing, exponentially in 1/lambda0 once T > 0.
std::vector<std::pair<double, double>> nullification_scan(
    const PhysParams& params, double Lambda_soft, double temperature_T, double r,
    const std::vector<double>& lambda0_grid, Tolerance tol = {}, double hierarchy_ratio = 10.0,
    bool lenient = false);

}  // namespace irfield
