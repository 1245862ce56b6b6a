#pragma once

#include <string>
#include <vector>

namespace irfield {

// Units: energies in eV, lengths in eV^-1, throughout the library. Meters and
// seconds appear only in names that say so (_m, _s) at reporting boundaries.

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLight_m_s = 2.99792458e8;

// CODATA defaults; the source only fixes the symbols.
inline constexpr double kDefaultAlpha = 7.2973525693e-3;
inline constexpr double kDefaultMass_eV = 0.51099895e6;
inline constexpr double kDefaultHbar_eV_s = 6.582119569e-16;

// 293 K, the temperature behind every "room temperature" number emitted here.
inline constexpr double kRoomTemperature_eV = 0.02525;

// "T much below m" is a fixed model assumption, not tied to the cutoff ratio.
inline constexpr double kMaxTemperatureMassRatio = 1e-2;

struct FourVector {
  double t = 0.0;  // energy component, eV
  double x = 0.0;  // momentum components, eV
  double y = 0.0;
  double z = 0.0;
};

// Signature (+,-,-,-).
double minkowski_dot(const FourVector& a, const FourVector& b);

struct PhysParams {
  double mass_m = kDefaultMass_eV;       // electron rest energy, eV
  double alpha = kDefaultAlpha;          // fine-structure constant
  double temperature_T = 0.0;            // photon bath temperature, eV; 0 = vacuum
  double hbar_eV_s = kDefaultHbar_eV_s;  // hbar, eV s
  double compton_length_m =
      kDefaultHbar_eV_s * kSpeedOfLight_m_s / kDefaultMass_eV;  // hbar c / m
};

// Builds a parameter set with compton_length_m derived from the rest.
PhysParams make_params(double mass_m = kDefaultMass_eV, double alpha = kDefaultAlpha,
                       double temperature_T = 0.0, double hbar_eV_s = kDefaultHbar_eV_s);

struct CutoffScheme {
  double lambda_smear = 0.0;  // vertex smearing width, eV; 0 = unsmeared
  double lambda0_ir = 0.0;    // infrared cutoff, eV; must be > 0
  double Lambda_soft = 0.0;   // soft-photon threshold, eV
};

struct HierarchyReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;  // lenient-mode downgrades land here
  bool ok() const { return violations.empty(); }
};

// Checks every scale inequality the model rests on. Strict separations
// ("much less than") are a < b/ratio; in lenient mode a separation that still
// satisfies the plain ordering a < b is reported as a warning, not a failure.
// Positivity, range, and plain-ordering checks never soften. The report lists
// every violated inequality by name, not just the first.
HierarchyReport validate_hierarchy(const PhysParams& params, const CutoffScheme& cutoffs,
                                   double ratio = 10.0, bool lenient = false);

// Same checks; throws HierarchyViolation carrying the full violation list.
void require_hierarchy(const PhysParams& params, const CutoffScheme& cutoffs,
                       double ratio = 10.0, bool lenient = false);

}  // namespace irfield
