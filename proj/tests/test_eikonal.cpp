#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "irfield/eikonal.hpp"
#include "irfield/errors.hpp"

using namespace irfield;

namespace {

double rel_dev(const Complex& a, const Complex& b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

double min_subset_magnitude(const std::vector<double>& a) {
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t mask = 1; mask < (std::size_t{1} << a.size()); ++mask) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (mask & (std::size_t{1} << j)) sum += a[j];
    }
    smallest = std::min(smallest, std::abs(sum));
  }
  return smallest;
}

}  // namespace

TEST_CASE("permutation sum collapses to the factorized product") {
  // n = 2, a = (2, 3): 1/(2*5) + 1/(3*5) = 1/6 = 1/(2*3).
  const Complex two_three = perm_sum(make_weights({2.0, 3.0}));
  CHECK(rel_dev(two_three, Complex{1.0 / 6.0, 0.0}) <= 1e-15);

  // n = 1 is the trivial chain.
  CHECK(rel_dev(perm_sum(make_weights({2.5})), Complex{0.4, 0.0}) <= 1e-15);

  std::mt19937_64 rng(101);
  for (int i = 0; i < 20; ++i) {
    const EikonalWeights w = random_weights(rng, 6);
    CHECK(rel_dev(perm_sum(w), eikonal_product(w)) <= 1e-9);
  }
}

TEST_CASE("factorized product handles negative weights without prefix constraints") {
  // (1, -1, 2) has a vanishing pairwise sum, so the permutation-sum invariant
  // rejects it, but the product itself only needs nonzero single weights.
  const EikonalWeights raw{{1.0, -1.0, 2.0}, 0.0};
  CHECK(rel_dev(eikonal_product(raw), Complex{-0.5, 0.0}) <= 1e-15);
  CHECK_THROWS_AS(perm_sum(raw), SingularPrefix);
  CHECK_THROWS_AS(make_weights({1.0, -1.0, 2.0}), SingularPrefix);
  // A finite epsilon regulates the permutation sum again.
  const EikonalWeights regulated{{1.0, -1.0, 2.0}, 0.5};
  CHECK_NOTHROW(perm_sum(regulated));
}

TEST_CASE("weights validation") {
  CHECK_THROWS_AS(make_weights({}), DomainError);
  CHECK_THROWS_AS(make_weights({1, 1, 1, 1, 1, 1, 1, 1, 1}), TooLarge);
  CHECK_THROWS_AS(make_weights({1.0}, -0.1), DomainError);
  CHECK_THROWS_AS(eikonal_product(EikonalWeights{{1.0, 0.0}, 0.0}), SingularPrefix);
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(random_weights(rng, 0), TooLarge);
  CHECK_THROWS_AS(random_weights(rng, 9), TooLarge);
}

TEST_CASE("seeded weight draws are reproducible and well-conditioned") {
  std::mt19937_64 rng_a(42);
  std::mt19937_64 rng_b(42);
  const EikonalWeights wa = random_weights(rng_a, 7);
  const EikonalWeights wb = random_weights(rng_b, 7);
  REQUIRE(wa.a.size() == 7);
  for (std::size_t j = 0; j < 7; ++j) CHECK(wa.a[j] == wb.a[j]);

  double largest = 0.0;
  for (double v : wa.a) largest = std::max(largest, std::abs(v));
  CHECK(min_subset_magnitude(wa.a) > 1e-3 * largest);
}

TEST_CASE("two-term bracket cancels exactly for an inner difference position") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const EikonalWeights w = random_weights(rng, 5, 1e-3);
    for (std::size_t m : {2, 3, 5}) {
      const BracketValue bracket = two_term_bracket_detail(w, m);
      REQUIRE(bracket.scale > 0.0);
      CHECK(std::abs(bracket.value) <= 1e-12 * bracket.scale);
    }
  }
}

TEST_CASE("two-term bracket vanishes linearly when the first denominator is live") {
  const std::vector<double> a{0.7, 1.1, -0.4};
  const double eps = 1e-4 * 0.7;
  const Complex v1 = two_term_bracket(make_weights(a, eps), 1);
  const Complex v2 = two_term_bracket(make_weights(a, 2.0 * eps), 1);
  CHECK(std::abs(v1) > 0.0);
  CHECK(std::abs(std::abs(v1) / std::abs(v2) - 0.5) <= 1e-3);
  // Extrapolation to epsilon = 0: four decades down shrinks the bracket by
  // the same factor.
  const Complex tiny = two_term_bracket(make_weights(a, 1e-8 * 0.7), 1);
  CHECK(std::abs(tiny) <= 1.01e-4 * std::abs(v1));
}

TEST_CASE("two-term bracket argument validation") {
  const EikonalWeights w = make_weights({0.5, 1.5}, 1e-3);
  CHECK_THROWS_AS(two_term_bracket(w, 0), DomainError);
  CHECK_THROWS_AS(two_term_bracket(w, 3), DomainError);
  CHECK_THROWS_AS(two_term_bracket(make_weights({0.5, 1.5}, 0.0), 2), DomainError);
  CHECK_THROWS_AS(two_term_bracket(EikonalWeights{{1.0, -1.0, 2.0}, 1e-3}, 2), SingularPrefix);
}

TEST_CASE("ladder coefficient by brute force matches the multinomial closed form") {
  const DstTriple zero{};
  CHECK(i_n_bruteforce(zero, 0) == Complex{1.0, 0.0});

  const DstTriple d{{0.6, 0.3}, {-0.2, 0.1}, {0.4, -0.25}};
  const Complex base = d.d11 + d.d22 + 2.0 * d.d12;
  CHECK(rel_dev(i_n_bruteforce(d, 1), base / 2.0) <= 1e-15);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    DstTriple t{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    // Keep the collapsed base away from 0 so the comparison is conditioned.
    while (std::abs(t.d11 + t.d22 + 2.0 * t.d12) < 1.0) {
      t = DstTriple{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    }
    const Complex b = t.d11 + t.d22 + 2.0 * t.d12;
    Complex expected{1.0, 0.0};
    double norm = 1.0;
    for (unsigned k = 1; k <= 5; ++k) {
      expected *= b;
      norm *= 2.0 * k;
    }
    CHECK(rel_dev(i_n_bruteforce(t, 5), expected / norm) <= 1e-12);
  }
}

TEST_CASE("ladder coefficient is symmetric under swapping the two diagonal attachments") {
  const DstTriple d{{0.6, 0.3}, {-0.2, 0.1}, {0.4, -0.25}};
  const DstTriple swapped{d.d22, d.d11, d.d12};
  for (unsigned N : {2u, 5u, 8u}) {
    CHECK(rel_dev(i_n_bruteforce(d, N), i_n_bruteforce(swapped, N)) <= 1e-14);
  }
}

TEST_CASE("resummed series converges to the exponential") {
  const DstTriple zero{};
  CHECK(resummed_series(zero, 1.0, 12) == Complex{1.0, 0.0});

  // d11 = -2 alone gives exp(-1) at unit coupling.
  const DstTriple minus_two{{-2.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
  CHECK(rel_dev(resummed_series(minus_two, 1.0, 20), Complex{std::exp(-1.0), 0.0}) <= 1e-12);

  const DstTriple d{{0.6, 0.3}, {-0.2, 0.1}, {0.4, -0.25}};
  const double e_sq = 0.8;
  const Complex x = 0.5 * e_sq * (d.d11 + d.d22 + 2.0 * d.d12);
  CHECK(rel_dev(resummed_series(d, e_sq, 18), std::exp(x)) <= 1e-12);
}

TEST_CASE("series truncation obeys the Taylor remainder bound") {
  const DstTriple d{{0.6, 0.3}, {-0.2, 0.1}, {0.4, -0.25}};
  const double e_sq = 2.5;
  const Complex x = 0.5 * e_sq * (d.d11 + d.d22 + 2.0 * d.d12);
  const double ax = std::abs(x);
  for (unsigned n_max : {4u, 6u, 8u}) {
    double bound = std::exp(ax);
    for (unsigned k = 1; k <= n_max + 1; ++k) bound *= ax / k;
    const double actual = std::abs(resummed_series(d, e_sq, n_max) - std::exp(x));
    CHECK(actual <= bound);
  }
}

TEST_CASE("exact-rational route makes the multinomial identity an identity") {
  const RationalDstTriple d{Rational(3, 7), Rational(-2, 5), Rational(1, 3)};
  const Rational base = d.d11 + d.d22 + 2 * d.d12;  // 73/105
  Rational power = 1;
  boost::multiprecision::cpp_int factorial = 1;
  boost::multiprecision::cpp_int two_pow = 1;
  for (unsigned N = 0; N <= 10; ++N) {
    CHECK(i_n_bruteforce_exact(d, N) * Rational(factorial * two_pow) == power);
    power *= base;
    factorial *= (N + 1);
    two_pow <<= 1;
  }
}

TEST_CASE("enumeration size limits") {
  const DstTriple d{{0.1, 0.0}, {0.2, 0.0}, {0.3, 0.0}};
  CHECK_THROWS_AS(i_n_bruteforce(d, 21), TooLarge);
  CHECK_THROWS_AS(resummed_series(d, 1.0, 21), TooLarge);
  const RationalDstTriple r{Rational(1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(i_n_bruteforce_exact(r, 21), TooLarge);
}
