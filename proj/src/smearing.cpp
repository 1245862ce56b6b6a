#include "irfield/smearing.hpp"

#include <cmath>

#include "irfield/errors.hpp"
#include "irfield/quadrature.hpp"

namespace irfield {

namespace {

void check_kernel(const SmearKernel& kernel) {
  if (!(kernel.lambda > 0.0)) throw DomainError("smearing width lambda must be > 0");
}

double euclidean_sq(const FourVector& w) {
  return w.t * w.t + w.x * w.x + w.y * w.y + w.z * w.z;
}

}  // namespace

double delta_lambda(const FourVector& w, const SmearKernel& kernel) {
  check_kernel(kernel);
  const double l2 = kernel.lambda * kernel.lambda;
  return std::exp(-euclidean_sq(w) / l2) / (kPi * kPi * l2 * l2);
}

double delta_star(const FourVector& w, const SmearKernel& kernel) {
  check_kernel(kernel);
  const double l2 = kernel.lambda * kernel.lambda;
  return std::exp(-euclidean_sq(w) / (2.0 * l2)) / (4.0 * kPi * kPi * l2 * l2);
}

double gaussian_marginal(double u, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("smearing width lambda must be > 0");
  const double s = u / lambda;
  return std::exp(-s * s) / (std::sqrt(kPi) * lambda);
}

std::complex<double> smeared_denominator(const FourVector& k, const FourVector& q,
                                         const SmearKernel& kernel, int prescription_sign) {
  check_kernel(kernel);
  if (prescription_sign != 1 && prescription_sign != -1) {
    throw DomainError("prescription_sign must be +1 or -1");
  }
  if (q.x != 0.0 || q.y != 0.0 || q.z != 0.0 || !(q.t > 0.0)) {
    throw RestFrameRequired("smeared_denominator requires q = (m, 0, 0, 0) with m > 0");
  }
  const double m = q.t;
  const double real_part = (2.0 / kernel.lambda) * dawson(k.t / kernel.lambda) / m;
  const double imag_part =
      -prescription_sign * kPi * gaussian_marginal(k.t, kernel.lambda) / m;
  return {real_part, imag_part};
}

}  // namespace irfield
