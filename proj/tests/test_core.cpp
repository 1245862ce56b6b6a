#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "irfield/core.hpp"
#include "irfield/errors.hpp"

using namespace irfield;

namespace {

bool lists(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

PhysParams thermal_params() { return make_params(0.511e6, kDefaultAlpha, 0.025); }

}  // namespace

TEST_CASE("minkowski dot uses signature (+,-,-,-)") {
  CHECK(minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);
  CHECK(minkowski_dot({1, 1, 0, 0}, {1, 1, 0, 0}) == 0.0);
  CHECK(minkowski_dot({2, 1, 0, 0}, {3, 0, 1, 0}) == 6.0);
  CHECK(minkowski_dot({0, 1, 2, 3}, {0, 1, 2, 3}) == -14.0);
}

TEST_CASE("minkowski dot is symmetric and bilinear") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const auto draw = [&] { return FourVector{u(rng), u(rng), u(rng), u(rng)}; };
  for (int i = 0; i < 64; ++i) {
    const FourVector a = draw();
    const FourVector b = draw();
    const FourVector c = draw();
    const double s = u(rng);
    CHECK(minkowski_dot(a, b) == minkowski_dot(b, a));
    const FourVector sbc{s * b.t + c.t, s * b.x + c.x, s * b.y + c.y, s * b.z + c.z};
    const double lhs = minkowski_dot(a, sbc);
    const double rhs = s * minkowski_dot(a, b) + minkowski_dot(a, c);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs) + std::abs(rhs)));
  }
}

TEST_CASE("make_params derives the compton length from the inputs") {
  const PhysParams p = make_params();
  CHECK(p.compton_length_m == doctest::Approx(3.8615926796e-13).epsilon(1e-9));
  const PhysParams q = make_params(1.0, 0.05, 0.0, 2.0);
  CHECK(q.compton_length_m == doctest::Approx(2.0 * kSpeedOfLight_m_s).epsilon(1e-15));
  CHECK(q.mass_m == 1.0);
  CHECK(q.alpha == 0.05);
  CHECK(q.temperature_T == 0.0);
}

TEST_CASE("a well-separated thermal configuration validates cleanly") {
  const CutoffScheme cutoffs{1e-8, 1e-6, 25.0};
  const HierarchyReport report = validate_hierarchy(thermal_params(), cutoffs, 10.0, false);
  CHECK(report.ok());
  CHECK(report.violations.empty());
  CHECK(report.warnings.empty());
  CHECK_NOTHROW(require_hierarchy(thermal_params(), cutoffs));
}

TEST_CASE("at T = 0 the thermal separations are waived") {
  // lambda0 = 20 eV sits nowhere near any temperature scale; only the plain
  // ordering against Lambda_soft and the mass separation are in play.
  const PhysParams vacuum = make_params();
  const HierarchyReport report = validate_hierarchy(vacuum, {0.0, 20.0, 25.0});
  CHECK(report.ok());
}

TEST_CASE("coincident cutoffs violate the plain ordering") {
  const HierarchyReport report = validate_hierarchy(make_params(), {0.0, 25.0, 25.0});
  CHECK_FALSE(report.ok());
  CHECK(lists(report.violations, "lambda0_below_Lambda_soft"));
}

TEST_CASE("every broken inequality is reported, not just the first") {
  // lambda0 above Lambda_soft, above the temperature, and below the smearing
  // width: three independent breaks at once.
  const CutoffScheme cutoffs{50.0, 30.0, 25.0};
  const HierarchyReport report = validate_hierarchy(thermal_params(), cutoffs);
  CHECK(lists(report.violations, "lambda0_below_Lambda_soft"));
  CHECK(lists(report.violations, "lambda0_below_temperature"));
  CHECK(lists(report.violations, "lambda_smear_below_lambda0"));
  CHECK(report.violations.size() >= 3);

  CHECK_THROWS_AS(require_hierarchy(thermal_params(), cutoffs), HierarchyViolation);
  try {
    require_hierarchy(thermal_params(), cutoffs);
  } catch (const HierarchyViolation& e) {
    CHECK(e.violations == report.violations);
    CHECK(std::string(e.what()).find("hierarchy violated:") == 0);
    CHECK(std::string(e.what()).find("lambda0_below_temperature") != std::string::npos);
  }
}

TEST_CASE("positivity and range checks") {
  const CutoffScheme good{0.0, 1e-6, 25.0};

  PhysParams p = make_params(0.0);
  CHECK(lists(validate_hierarchy(p, good).violations, "mass_positive"));

  p = make_params(0.511e6, 0.2);
  CHECK(lists(validate_hierarchy(p, good).violations, "alpha_in_range"));
  p = make_params(0.511e6, 0.0);
  CHECK(lists(validate_hierarchy(p, good).violations, "alpha_in_range"));

  p = make_params(0.511e6, kDefaultAlpha, -1.0);
  CHECK(lists(validate_hierarchy(p, good).violations, "temperature_nonnegative"));

  p = make_params(0.511e6, kDefaultAlpha, 0.0, 0.0);
  CHECK(lists(validate_hierarchy(p, good).violations, "hbar_positive"));

  CHECK(lists(validate_hierarchy(make_params(), {0.0, 0.0, 25.0}).violations, "lambda0_positive"));
  CHECK(lists(validate_hierarchy(make_params(), {-1.0, 1e-6, 25.0}).violations,
              "lambda_smear_nonnegative"));
}

TEST_CASE("a stale compton length is caught") {
  PhysParams p;  // aggregate default: compton length for the default mass
  p.mass_m = 1.0e6;
  const HierarchyReport report = validate_hierarchy(p, {0.0, 1e-6, 25.0});
  CHECK(lists(report.violations, "compton_length_consistent"));
}

TEST_CASE("the temperature-mass bound is fixed, independent of the ratio knob") {
  // T = 0.02 m breaks T < 1e-2 m for any configurable ratio.
  const PhysParams hot = make_params(0.511e6, kDefaultAlpha, 0.02 * 0.511e6);
  const CutoffScheme cutoffs{0.0, 1e-2, 1e3};
  CHECK(lists(validate_hierarchy(hot, cutoffs, 2.0).violations, "temperature_below_mass"));
  // Lenient mode downgrades it while T < m still holds.
  const HierarchyReport lenient = validate_hierarchy(hot, cutoffs, 2.0, true);
  CHECK_FALSE(lists(lenient.violations, "temperature_below_mass"));
  CHECK(lists(lenient.warnings, "temperature_below_mass"));
}

TEST_CASE("ratio at or below 1 is rejected") {
  CHECK_THROWS_AS(validate_hierarchy(make_params(), {0.0, 1e-6, 25.0}, 1.0), DomainError);
  CHECK_THROWS_AS(validate_hierarchy(make_params(), {0.0, 1e-6, 25.0}, 0.5), DomainError);
}

TEST_CASE("lenient mode downgrades soft separations but never plain orderings") {
  // lambda0 = 0.01 eV < T = 0.025 eV holds plainly but not by a factor 10.
  const CutoffScheme soft{0.0, 0.01, 25.0};
  const HierarchyReport strict = validate_hierarchy(thermal_params(), soft);
  CHECK(lists(strict.violations, "lambda0_below_temperature"));
  const HierarchyReport relaxed = validate_hierarchy(thermal_params(), soft, 10.0, true);
  CHECK(relaxed.ok());
  CHECK(lists(relaxed.warnings, "lambda0_below_temperature"));

  // lambda0 above T violates the plain ordering: no downgrade.
  const CutoffScheme broken{0.0, 0.03, 25.0};
  const HierarchyReport still_broken = validate_hierarchy(thermal_params(), broken, 10.0, true);
  CHECK(lists(still_broken.violations, "lambda0_below_temperature"));
}
