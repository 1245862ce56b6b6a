#pragma once

#include <functional>

#include "irfield/core.hpp"
#include "irfield/quadrature.hpp"
#include "irfield/smearing.hpp"

namespace irfield {

// Brute-force counterparts of the closed forms shipped in the library. Each
// one evaluates the defining integral by quadrature along an independent
// route, so agreement pins the closed form rather than restating it.

// Principal value of integrand(u) du over [a,b] with a simple pole at u = 0:
// symmetric excision of (-delta, delta) and Richardson extrapolation in
// delta over `levels` halvings (the excision error is odd in delta).
// tol.abs should reflect the overall scale; a pure relative target can stall
// on the near-zero tail pieces.
double principal_value_oracle(const std::function<double(double)>& integrand, double a, double b,
                              double delta0, int levels = 5, Tolerance tol = {1e-12, 1e-14});

// Defining self-convolution of the two-vertex kernel, reduced to a product
// of four 1D quadratures (the integrand factorizes per component).
double delta_star_convolution_oracle(const FourVector& w, const SmearKernel& kernel,
                                     Tolerance tol = {1e-11, 0.0});

// 4D normalization integrals via factorized 1D marginals.
double delta_lambda_normalization_oracle(const SmearKernel& kernel, Tolerance tol = {1e-10, 0.0});
double delta_star_normalization_oracle(const SmearKernel& kernel, Tolerance tol = {1e-10, 0.0});

// Real part of the smeared denominator (source mass m) by the excision
// oracle; the closed form routes through the Dawson function instead.
double smeared_denominator_pv_oracle(double k_t, double m, const SmearKernel& kernel);

// Radial Fourier route to the screening factor:
//   S(r, W) = (2/pi) integral_0^inf dp sin(p r)/p exp(-W p^2).
double screening_fourier_oracle(double r, double W, Tolerance tol = {1e-11, 0.0});

// Gaussian ball integral route to the enclosed-charge fraction.
double enclosed_charge_ball_oracle(double r, double W, Tolerance tol = {1e-11, 0.0});

// Defining-integral routes to the special functions.
double exp_integral_E1_oracle(double x);
double dawson_oracle(double x);      // |x| <= 6; the defining integral overflows beyond
double erf_taylor_oracle(double x);  // |x| <= 2; alternating series loses digits beyond

}  // namespace irfield
