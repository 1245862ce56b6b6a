#include "irfield/oracles.hpp"

#include <cmath>
#include <vector>

#include "irfield/errors.hpp"

namespace irfield {

double principal_value_oracle(const std::function<double(double)>& integrand, double a, double b,
                              double delta0, int levels, Tolerance tol) {
  if (!(a < 0.0 && 0.0 < b)) throw DomainError("pole must lie inside (a, b)");
  if (!(delta0 > 0.0) || delta0 >= std::min(-a, b)) throw DomainError("bad excision width");
  if (levels < 1 || levels > 12) throw DomainError("bad extrapolation depth");

  const auto excised = [&](double delta) {
    const double left = adaptive_integrate(integrand, a, -delta, tol).value;
    const double right = adaptive_integrate(integrand, delta, b, tol).value;
    return left + right;
  };

  // Richardson on the odd-power error series: exponents 1, 3, 5, ...
  std::vector<double> row(levels);
  double delta = delta0;
  for (int k = 0; k < levels; ++k) {
    double next = excised(delta);
    for (int j = 0; j < k; ++j) {
      const double factor = std::exp2(2 * j + 1);  // 2^(2j+1)
      const double lifted = next + (next - row[j]) / (factor - 1.0);
      row[j] = next;
      next = lifted;
    }
    row[k] = next;
    delta *= 0.5;
  }
  return row[levels - 1];
}

namespace {

// integral over one component of the delta_star convolution:
//   J(w_i) = integral dxi exp(-[(w_i-xi)^2 + (w_i+xi)^2] / (4 lambda^2))
double convolution_component(double w_i, double lambda, Tolerance tol) {
  const double reach = 12.0 * lambda + 2.0 * std::abs(w_i);
  const auto f = [w_i, lambda](double xi) {
    const double u = 0.5 * (w_i - xi) / lambda;
    const double v = 0.5 * (w_i + xi) / lambda;
    return std::exp(-(u * u + v * v));
  };
  return adaptive_integrate(f, -reach, reach, tol).value;
}

}  // namespace

double delta_star_convolution_oracle(const FourVector& w, const SmearKernel& kernel,
                                     Tolerance tol) {
  if (!(kernel.lambda > 0.0)) throw DomainError("smearing width lambda must be > 0");
  const double l = kernel.lambda;
  const double components[4] = {w.t, w.x, w.y, w.z};
  double product = 1.0 / 16.0;
  for (double c : components) {
    product *= convolution_component(c, l, tol) / (kPi * l * l);
  }
  return product;
}

double delta_lambda_normalization_oracle(const SmearKernel& kernel, Tolerance tol) {
  if (!(kernel.lambda > 0.0)) throw DomainError("smearing width lambda must be > 0");
  const double l = kernel.lambda;
  const auto marginal = [l](double u) { return gaussian_marginal(u, l); };
  double product = 1.0;
  for (int i = 0; i < 4; ++i) {
    product *= adaptive_integrate(marginal, -12.0 * l, 12.0 * l, tol).value;
  }
  return product;
}

double delta_star_normalization_oracle(const SmearKernel& kernel, Tolerance tol) {
  if (!(kernel.lambda > 0.0)) throw DomainError("smearing width lambda must be > 0");
  // The closed form factorizes into four normalized Gaussians of variance
  // lambda^2; integrate those marginals numerically.
  const double l = kernel.lambda;
  const auto marginal = [l](double u) {
    return std::exp(-u * u / (2.0 * l * l)) / (std::sqrt(2.0 * kPi) * l);
  };
  double product = 1.0;
  for (int i = 0; i < 4; ++i) {
    product *= adaptive_integrate(marginal, -16.0 * l, 16.0 * l, tol).value;
  }
  return product;
}

double smeared_denominator_pv_oracle(double k_t, double m, const SmearKernel& kernel) {
  if (!(m > 0.0)) throw DomainError("mass must be > 0");
  if (!(kernel.lambda > 0.0)) throw DomainError("smearing width lambda must be > 0");
  const double l = kernel.lambda;
  const double a = std::min(-4.0 * l, k_t - 12.0 * l);
  const double b = std::max(4.0 * l, k_t + 12.0 * l);
  const auto integrand = [k_t, l](double u) { return gaussian_marginal(u - k_t, l) / u; };
  const Tolerance piece_tol{1e-12, 1e-14 / l};
  return principal_value_oracle(integrand, a, b, 0.25 * l, 5, piece_tol) / m;
}

double screening_fourier_oracle(double r, double W, Tolerance tol) {
  if (!(r > 0.0) || !(W > 0.0)) throw DomainError("oracle needs r > 0, W > 0");
  const double p_max = 7.5 / std::sqrt(W);
  const auto integrand = [r, W](double p) {
    const double envelope = std::exp(-W * p * p);
    if (p == 0.0) return r * envelope;
    return std::sin(p * r) / p * envelope;
  };
  return 2.0 / kPi * adaptive_integrate(integrand, 0.0, p_max, tol).value;
}

double enclosed_charge_ball_oracle(double r, double W, Tolerance tol) {
  if (!(r > 0.0) || !(W > 0.0)) throw DomainError("oracle needs r > 0, W > 0");
  // Equivalent charge density exp(-s^2/(4W)) / (4 pi W)^(3/2), radial shells.
  const double norm = 4.0 * kPi / std::pow(4.0 * kPi * W, 1.5);
  const auto shell = [W](double s) { return s * s * std::exp(-s * s / (4.0 * W)); };
  return norm * adaptive_integrate(shell, 0.0, r, tol).value;
}

double exp_integral_E1_oracle(double x) {
  if (!(x > 0.0)) throw DomainError("oracle needs x > 0");
  const auto integrand = [](double t) { return std::exp(-t) / t; };
  return adaptive_integrate(integrand, x, x + 60.0, {1e-12, 0.0}).value;
}

double dawson_oracle(double x) {
  if (std::abs(x) > 6.0) throw DomainError("dawson oracle limited to |x| <= 6");
  if (x == 0.0) return 0.0;
  const double ax = std::abs(x);
  const auto integrand = [](double t) { return std::exp(t * t); };
  const double value = std::exp(-ax * ax) * adaptive_integrate(integrand, 0.0, ax, {1e-12, 0.0}).value;
  return x > 0.0 ? value : -value;
}

double erf_taylor_oracle(double x) {
  if (std::abs(x) > 2.0) throw DomainError("erf Taylor oracle limited to |x| <= 2");
  // erf(x) = (2/sqrt(pi)) sum_n (-1)^n x^(2n+1) / (n! (2n+1))
  const double x2 = x * x;
  double power = x;  // (-1)^n x^(2n+1) / n!
  double sum = x;
  for (int n = 1; n <= 60; ++n) {
    power *= -x2 / n;
    const double term = power / (2 * n + 1);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return 2.0 / std::sqrt(kPi) * sum;
}

}  // namespace irfield
