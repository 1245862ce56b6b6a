#include "irfield/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "irfield/errors.hpp"

namespace irfield {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1].
constexpr double kWG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
constexpr double kXGK[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWGK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

struct Interval {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

// Larger error first; ties broken by position so the split order is fully
// deterministic.
struct ByError {
  bool operator()(const Interval& p, const Interval& q) const {
    if (p.error != q.error) return p.error < q.error;
    return p.a > q.a;
  }
};

double checked_eval(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw NonFiniteEvaluation(x);
  return y;
}

Interval gk15(const std::function<double(double)>& f, double a, double b,
              std::size_t& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = checked_eval(f, center);
  double result_gauss = kWG[3] * fc;
  double result_kronrod = kWGK[7] * fc;
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;  // Gauss nodes sit at the odd Kronrod indices
    const double dx = half * kXGK[jtw];
    const double f1 = checked_eval(f, center - dx);
    const double f2 = checked_eval(f, center + dx);
    result_gauss += kWG[j] * (f1 + f2);
    result_kronrod += kWGK[jtw] * (f1 + f2);
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double dx = half * kXGK[jtwm1];
    const double f1 = checked_eval(f, center - dx);
    const double f2 = checked_eval(f, center + dx);
    result_kronrod += kWGK[jtwm1] * (f1 + f2);
  }
  evaluations += 15;

  Interval out;
  out.a = a;
  out.b = b;
  out.value = result_kronrod * half;
  out.error = std::abs((result_kronrod - result_gauss) * half);
  return out;
}

}  // namespace

IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                     Tolerance tol, std::size_t max_evaluations) {
  if (!(a < b)) throw DomainError("adaptive_integrate requires a < b");
  if (!(tol.rel > 0.0) || tol.abs < 0.0) throw DomainError("invalid tolerance");
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("infinite integration limit");

  std::size_t evaluations = 0;
  std::priority_queue<Interval, std::vector<Interval>, ByError> queue;
  queue.push(gk15(f, a, b, evaluations));

  double total_value = queue.top().value;
  double total_error = queue.top().error;
  const auto target = [&tol](double value) {
    return std::max(tol.abs, tol.rel * std::abs(value));
  };

  while (total_error > target(total_value)) {
    if (evaluations + 30 > max_evaluations) {
      throw NonConvergence("adaptive_integrate: evaluation budget exhausted after " +
                           std::to_string(evaluations) + " evaluations");
    }
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      throw NonConvergence("adaptive_integrate: interval underflow near x = " +
                           std::to_string(worst.a));
    }
    const Interval left = gk15(f, worst.a, mid, evaluations);
    const Interval right = gk15(f, mid, worst.b, evaluations);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  IntegrationResult out;
  out.value = total_value;
  out.error_estimate = total_error;
  out.evaluations = evaluations;
  return out;
}

double erf(double x) { return std::erf(x); }

namespace {
constexpr double kEulerGamma = 0.57721566490153286061;
}

double exp_integral_E1(double x) {
  if (!(x > 0.0)) throw DomainError("exp_integral_E1 requires x > 0");
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    double sum = -kEulerGamma - std::log(x);
    double power = 1.0;  // x^k / k!
    for (int k = 1; k <= 40; ++k) {
      power *= x / k;
      const double term = ((k & 1) ? power : -power) / k;
      sum += term;
      if (std::abs(term) <= 1e-18 * std::max(1.0, std::abs(sum))) break;
    }
    return sum;
  }
  // E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...)))), modified Lentz.
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) <= std::numeric_limits<double>::epsilon()) break;
  }
  return h * std::exp(-x);
}

double dawson(double x) {
  const double ax = std::abs(x);
  if (ax < 0.2) {
    // D(x) = sum_k (-2 x^2)^k x / (2k+1)!!
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k <= 20; ++k) {
      term *= -2.0 * x2 / (2 * k + 1);
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }

  // Sampling expansion on the grid (2i+1)H; the sampling error decays as
  // exp(-(pi/2H)^2), below double rounding at H = 0.25.
  constexpr double kH = 0.25;
  constexpr int kNMax = 14;
  static const std::vector<double> coeff = [] {
    std::vector<double> c(kNMax);
    for (int i = 0; i < kNMax; ++i) {
      const double y = (2.0 * i + 1.0) * kH;
      c[i] = std::exp(-y * y);
    }
    return c;
  }();

  const int n0 = 2 * static_cast<int>(0.5 * ax / kH + 0.5);
  const double xp = ax - n0 * kH;
  double e1 = std::exp(2.0 * xp * kH);
  const double e2 = e1 * e1;
  double d1 = n0 + 1.0;
  double d2 = d1 - 2.0;
  double sum = 0.0;
  for (int i = 0; i < kNMax; ++i) {
    sum += coeff[i] * (e1 / d1 + 1.0 / (d2 * e1));
    d1 += 2.0;
    d2 -= 2.0;
    e1 *= e2;
  }
  const double value = 0.5641895835477563 * std::exp(-xp * xp) * sum;  // 1/sqrt(pi)
  return x >= 0.0 ? value : -value;
}

}  // namespace irfield
