#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace irfield {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

// Weights a_j = w_j.q entering the eikonal denominator chains. The prefix
// sums of every permutation are exactly the nonempty subset sums, so the
// no-singular-prefix invariant is checked over all 2^n - 1 subsets.
struct EikonalWeights {
  std::vector<double> a;  // eV^2, all nonzero
  double epsilon = 0.0;   // finite +-i0 stand-in, >= 0, eV^2
};

// Validating constructor: 1 <= n <= 8, epsilon >= 0, no vanishing subset sum.
EikonalWeights make_weights(std::vector<double> a, double epsilon = 0.0);

// Seeded draw of n weights uniform in [-1,1], rejected until every nonempty
// subset sum clears 1e-3 * max|a_j|. Uses the raw engine stream so identical
// seeds give identical weights on every standard library.
EikonalWeights random_weights(std::mt19937_64& rng, std::size_t n, double epsilon = 0.0);

// Sum over all n! orderings of the nested-denominator chain:
//
//   perm_sum = sum_sigma prod_{j=1..n} 1 / (a_sigma(1) + ... + a_sigma(j) + i eps)
//
// At eps = 0 it collapses to the factorized product below; that identity is
// what licenses exponentiating the soft-photon ladder.
Complex perm_sum(const EikonalWeights& weights);

// prod_j 1 / (a_j + i eps).
Complex eikonal_product(const EikonalWeights& weights);

struct BracketValue {
  Complex value;
  double scale = 0.0;  // magnitude of the largest single permutation term
};

// Lower-branch ("2-vertex") chain with the difference factor at position m,
// summed over all permutations of the first m indices; trailing denominators
// keep the original order and +i eps.
//
// For m > 1 the position-m denominator is the permutation-invariant block sum
// X = a_1 + ... + a_m, which the weights invariant keeps away from zero, so
// its boundary prescription is inert: both branches carry the same factor
// 1/X and the bracket is a difference of two identical permutation sums. The
// two sums are accumulated in different enumeration orders, so the returned
// value measures genuine floating cancellation rather than an algebraic 0.
//
// For m = 1 the difference factor keeps the live prescriptions,
// 1/(a_1 - i eps) - 1/(a_1 + i eps), and the bracket vanishes O(eps).
BracketValue two_term_bracket_detail(const EikonalWeights& weights, std::size_t m);
Complex two_term_bracket(const EikonalWeights& weights, std::size_t m);

// One-loop photon attachments between the in/in, out/out, and in/out electron
// lines, after extracting the coupling e^2.
struct DstTriple {
  Complex d11;
  Complex d22;
  Complex d12;
};

// Order-N coefficient of the ladder series by direct triple sum:
//
//   sum_{ni+nf+n0=N} d11^ni/(ni! 2^ni) d22^nf/(nf! 2^nf) d12^n0/n0!
//
// which the multinomial theorem collapses to (d11+d22+2 d12)^N / (N! 2^N).
Complex i_n_bruteforce(const DstTriple& d, unsigned N);

// sum_{N=0..N_max} e_sq^N i_n_bruteforce(d, N); converges to
// exp((e_sq/2)(d11+d22+2 d12)).
Complex resummed_series(const DstTriple& d, double e_sq, unsigned N_max);

// Exact-rational path for the same coefficient, making the combinatorial
// identity exact rather than approximate.
struct RationalDstTriple {
  Rational d11;
  Rational d22;
  Rational d12;
};

Rational i_n_bruteforce_exact(const RationalDstTriple& d, unsigned N);

}  // namespace irfield
