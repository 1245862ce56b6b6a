#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "irfield/errors.hpp"
#include "irfield/oracles.hpp"
#include "irfield/quadrature.hpp"

using namespace irfield;

namespace {

double rel_dev(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("textbook integrals") {
  const IntegrationResult linear = adaptive_integrate([](double x) { return x; }, 0.0, 1.0);
  CHECK(rel_dev(linear.value, 0.5) <= 1e-14);
  CHECK(linear.evaluations >= 15);
  CHECK(linear.error_estimate >= 0.0);

  const IntegrationResult unit_log =
      adaptive_integrate([](double x) { return 1.0 / x; }, 1.0, std::exp(1.0));
  CHECK(rel_dev(unit_log.value, 1.0) <= 1e-12);
}

TEST_CASE("six-decade logarithmic integrand") {
  const IntegrationResult r =
      adaptive_integrate([](double x) { return 1.0 / x; }, 1e-6, 1.0, {1e-12, 0.0});
  const double exact = std::log(1e6);
  CHECK(rel_dev(r.value, exact) <= 1e-10);
  // The returned estimate must cover the true error.
  CHECK(std::abs(r.value - exact) <= r.error_estimate + 1e-12 * exact);
}

TEST_CASE("interval additivity") {
  const auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
  const IntegrationResult whole = adaptive_integrate(f, 0.0, 2.0, {1e-12, 1e-15});
  const IntegrationResult left = adaptive_integrate(f, 0.0, 0.7, {1e-12, 1e-15});
  const IntegrationResult right = adaptive_integrate(f, 0.7, 2.0, {1e-12, 1e-15});
  CHECK(std::abs(whole.value - (left.value + right.value)) <=
        whole.error_estimate + left.error_estimate + right.error_estimate + 1e-13);
}

TEST_CASE("domain and tolerance validation") {
  const auto f = [](double x) { return x; };
  CHECK_THROWS_AS(adaptive_integrate(f, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(adaptive_integrate(f, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(adaptive_integrate(f, 0.0, 1.0, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(adaptive_integrate(f, 0.0, 1.0, {-1e-10, 0.0}), DomainError);
  CHECK_THROWS_AS(adaptive_integrate(f, 0.0, 1.0, {1e-10, -1.0}), DomainError);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(adaptive_integrate(f, 0.0, inf, {1e-10, 0.0}), DomainError);
}

TEST_CASE("non-finite integrand values are reported with their abscissa") {
  const auto spiky = [](double x) {
    return x > 0.5 ? std::numeric_limits<double>::infinity() : 1.0;
  };
  CHECK_THROWS_AS(adaptive_integrate(spiky, 0.0, 1.0), NonFiniteEvaluation);
  try {
    adaptive_integrate(spiky, 0.0, 1.0);
  } catch (const NonFiniteEvaluation& e) {
    CHECK(e.where > 0.5);
    CHECK(e.where <= 1.0);
  }
  const auto nan_tail = [](double x) {
    return x > 0.9 ? std::numeric_limits<double>::quiet_NaN() : x;
  };
  CHECK_THROWS_AS(adaptive_integrate(nan_tail, 0.0, 1.0), NonFiniteEvaluation);
}

TEST_CASE("an unreachable tolerance raises NonConvergence") {
  CHECK_THROWS_AS(
      adaptive_integrate([](double x) { return 1.0 / x; }, 0.1, 25.0, {1e-30, 0.0}),
      NonConvergence);
}

TEST_CASE("erf basics") {
  CHECK(irfield::erf(0.0) == 0.0);
  CHECK(rel_dev(irfield::erf(1.0), 0.842700792949715) <= 1e-14);
  for (double x : {0.3, 0.8, 1.5, 2.5, 4.0}) {
    CHECK(irfield::erf(-x) == -irfield::erf(x));
  }
  for (double x : {6.0, 8.0, 12.0}) {
    CHECK(std::abs(irfield::erf(x) - 1.0) <= 1e-12);
  }
}

TEST_CASE("erf against the Taylor oracle and the complement") {
  for (double x = 0.1; x <= 1.95; x += 0.2) {
    CHECK(rel_dev(irfield::erf(x), erf_taylor_oracle(x)) <= 1e-12);
  }
  double prev = irfield::erf(0.0);
  for (double x = 0.1; x <= 4.0; x += 0.1) {
    const double cur = irfield::erf(x);
    CHECK(cur > prev);
    prev = cur;
  }
  for (double x : {0.2, 1.0, 2.0, 3.0}) {
    CHECK(std::abs(irfield::erf(x) + std::erfc(x) - 1.0) <= 1e-12);
  }
}

TEST_CASE("exponential integral E1") {
  CHECK_THROWS_AS(exp_integral_E1(0.0), DomainError);
  CHECK_THROWS_AS(exp_integral_E1(-1.0), DomainError);

  CHECK(rel_dev(exp_integral_E1(1.0), 0.219383934395520) <= 1e-13);
  CHECK(rel_dev(exp_integral_E1(1.0), exp_integral_E1_oracle(1.0)) <= 1e-10);
  CHECK(rel_dev(exp_integral_E1(10.0), 4.15697e-6) <= 1e-5);
  CHECK(rel_dev(exp_integral_E1(10.0), exp_integral_E1_oracle(10.0)) <= 1e-10);

  // Both branches against the defining-integral oracle, straddling the
  // series/continued-fraction seam at x = 1.
  for (double x : {0.05, 0.3, 0.7, 0.999, 1.0, 1.001, 1.5, 3.0, 8.0, 20.0}) {
    CHECK(rel_dev(exp_integral_E1(x), exp_integral_E1_oracle(x)) <= 1e-10);
  }
}

TEST_CASE("E1 asymptotics and the Laplace representation") {
  // x e^x E1(x) = 1 - 1/x + 2/x^2 - ...
  const double r50 = exp_integral_E1(50.0) * 50.0 * std::exp(50.0);
  CHECK(r50 > 0.975);
  CHECK(r50 < 0.985);
  const double r600 = exp_integral_E1(600.0) * 600.0 * std::exp(600.0);
  CHECK(std::abs(r600 - 1.0) < 2e-3);

  // E1(x) = e^{-x} int_0^inf e^{-x t} / (1 + t) dt, truncated far past the
  // exponential tail.
  for (double x : {0.5, 2.0}) {
    const IntegrationResult laplace = adaptive_integrate(
        [x](double t) { return std::exp(-x * t) / (1.0 + t); }, 0.0, 200.0 / x, {1e-12, 1e-16});
    CHECK(rel_dev(exp_integral_E1(x), std::exp(-x) * laplace.value) <= 1e-9);
  }
}

TEST_CASE("dawson basics") {
  CHECK(dawson(0.0) == 0.0);
  CHECK(rel_dev(dawson(1.0), 0.538079506912768) <= 1e-13);
  CHECK(rel_dev(dawson(1.0), dawson_oracle(1.0)) <= 1e-12);
  for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
    CHECK(dawson(-x) == -dawson(x));
  }
}

TEST_CASE("dawson against the defining-integral oracle") {
  // Straddles the series/sampling seam at |x| = 0.2.
  for (double x : {0.05, 0.15, 0.19999, 0.20001, 0.5, 1.0, 1.5, 2.0, 3.0, 4.5, 6.0}) {
    CHECK(rel_dev(dawson(x), dawson_oracle(x)) <= 1e-10);
  }
}

TEST_CASE("dawson asymptote 2 x D(x) -> 1") {
  // At x = 20 the exact deviation is 1/(2 x^2) + 3/(4 x^4) = 1.2519e-3.
  const double dev = 2.0 * 20.0 * dawson(20.0) - 1.0;
  CHECK(dev > 1.1e-3);
  CHECK(dev < 1.4e-3);
}

TEST_CASE("dawson satisfies D'(x) = 1 - 2 x D(x)") {
  for (double x : {0.3, 1.0, 2.5}) {
    const auto central = [x](double h) { return (dawson(x + h) - dawson(x - h)) / (2.0 * h); };
    const double h = 1e-3;
    const double derivative = (4.0 * central(h / 2.0) - central(h)) / 3.0;
    CHECK(std::abs(derivative - (1.0 - 2.0 * x * dawson(x))) <= 1e-6);
  }
}
