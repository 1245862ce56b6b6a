#pragma once

#include <complex>

#include "irfield/core.hpp"

namespace irfield {

struct SmearKernel {
  double lambda = 1.0;  // smearing width, eV; must be > 0
};

// Finite-epsilon stand-in for a +-i0 boundary prescription.
struct EpsilonPrescription {
  int sign = +1;         // +1 or -1
  double epsilon = 0.0;  // > 0, eV
};

// Momentum-conservation smearing kernel
//
//   Delta_lambda(w) = exp(-(w.t^2 + |w_vec|^2)/lambda^2) / (pi^2 lambda^4).
//
// The exponent is the Euclidean square, not the Minkowski one; that breaks
// Lorentz invariance on purpose and the sign pattern is load-bearing.
double delta_lambda(const FourVector& w, const SmearKernel& kernel);

// Two-vertex kernel, defined as the self-convolution
//
//   Delta*_lambda(w) = (1/16) integral d^4 xi
//                      Delta_lambda((w-xi)/2) Delta_lambda((w+xi)/2),
//
// which collapses to the same Gaussian at doubled variance:
//
//   Delta*_lambda(w) = exp(-|w|_E^2 / (2 lambda^2)) / (4 pi^2 lambda^4).
//
// The closed form is checked pointwise against the defining convolution in
// the test suite.
double delta_star(const FourVector& w, const SmearKernel& kernel);

// 1D marginal g_lambda(u) = exp(-u^2/lambda^2) / (sqrt(pi) lambda).
double gaussian_marginal(double u, double lambda);

// integral d^4 w Delta_lambda(w - k) / (w.q +- i0) for a source at rest,
// q = (m, 0, 0, 0). The spatial directions integrate out and
//
//   value = (1/m) [ (2/lambda) D(k.t/lambda) -+ i pi g_lambda(k.t) ],
//
// D the Dawson function; the real part is the principal value of the
// Gaussian marginal against 1/u, the imaginary part its delta-function limit.
// prescription_sign = +1 picks +i0, -1 picks -i0.
std::complex<double> smeared_denominator(const FourVector& k, const FourVector& q,
                                         const SmearKernel& kernel, int prescription_sign);

}  // namespace irfield
