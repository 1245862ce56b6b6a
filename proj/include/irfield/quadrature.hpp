#pragma once

#include <cstddef>
#include <functional>

namespace irfield {

struct Tolerance {
  double rel = 1e-10;
  double abs = 0.0;
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, conservative
  std::size_t evaluations = 0;
};

// Globally adaptive bisection driven by an embedded Gauss-Kronrod 7-15 pair:
// the interval with the largest error estimate is split first. Integrands
// with integrable endpoint growth (dk/k down to a small positive cutoff) are
// in scope; the caller supplies the exact finite limits.
IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                     Tolerance tol = {}, std::size_t max_evaluations = 2000000);

double erf(double x);

/*
 *           inf
 *           /    -t
 *  E1(x) =  |   e   / t  dt ,    x > 0
 *           /
 *           x
 *
 *  Power series for x <= 1, modified-Lentz continued fraction above.
 */
double exp_integral_E1(double x);

/*
 *            2   x
 *          -x    /    t*t
 *  D(x) =  e     |   e    dt
 *                /
 *                0
 *
 *  Maclaurin series for |x| < 0.2, exponentially convergent sampling
 *  expansion elsewhere.
 */
double dawson(double x);

}  // namespace irfield
