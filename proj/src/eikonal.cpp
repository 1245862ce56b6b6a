#include "irfield/eikonal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "irfield/errors.hpp"

namespace irfield {

namespace {

constexpr std::size_t kMaxN = 8;

double unit_draw(std::mt19937_64& rng) {
  // 53 uniform bits in [0,1); identical on every conforming engine.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_sizes(const EikonalWeights& w) {
  if (w.a.empty()) throw DomainError("eikonal weights must be nonempty");
  if (w.a.size() > kMaxN) throw TooLarge("eikonal enumeration supports n <= 8");
  if (w.epsilon < 0.0) throw DomainError("epsilon must be >= 0");
}

// Smallest |subset sum| over all nonempty subsets; 0 means singular.
double min_subset_sum_magnitude(const std::vector<double>& a) {
  const std::size_t n = a.size();
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) sum += a[j];
    }
    smallest = std::min(smallest, std::abs(sum));
  }
  return smallest;
}

const std::array<double, 21>& factorial_table() {
  static const std::array<double, 21> table = [] {
    std::array<double, 21> t{};
    t[0] = 1.0;
    for (int k = 1; k <= 20; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table;
}

Complex complex_pow(Complex base, unsigned n) {
  Complex out{1.0, 0.0};
  for (unsigned k = 0; k < n; ++k) out *= base;
  return out;
}

}  // namespace

EikonalWeights make_weights(std::vector<double> a, double epsilon) {
  EikonalWeights w{std::move(a), epsilon};
  check_sizes(w);
  if (min_subset_sum_magnitude(w.a) == 0.0) {
    throw SingularPrefix("a permutation prefix sum vanishes at epsilon = 0");
  }
  return w;
}

EikonalWeights random_weights(std::mt19937_64& rng, std::size_t n, double epsilon) {
  if (n == 0 || n > kMaxN) throw TooLarge("random_weights requires 1 <= n <= 8");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<double> a(n);
    double largest = 0.0;
    for (double& v : a) {
      v = 2.0 * unit_draw(rng) - 1.0;
      largest = std::max(largest, std::abs(v));
    }
    if (largest == 0.0) continue;
    if (min_subset_sum_magnitude(a) > 1e-3 * largest) {
      return EikonalWeights{std::move(a), epsilon};
    }
  }
  throw NonConvergence("random_weights: rejection sampling failed");
}

Complex perm_sum(const EikonalWeights& weights) {
  check_sizes(weights);
  if (weights.epsilon == 0.0 && min_subset_sum_magnitude(weights.a) == 0.0) {
    throw SingularPrefix("a permutation prefix sum vanishes at epsilon = 0");
  }
  const std::size_t n = weights.a.size();
  const Complex i_eps{0.0, weights.epsilon};

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Complex total{0.0, 0.0};
  do {
    double prefix = 0.0;
    Complex term{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      prefix += weights.a[order[j]];
      term /= prefix + i_eps;
    }
    total += term;
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

Complex eikonal_product(const EikonalWeights& weights) {
  check_sizes(weights);
  const Complex i_eps{0.0, weights.epsilon};
  Complex product{1.0, 0.0};
  for (double aj : weights.a) {
    if (aj == 0.0) throw SingularPrefix("zero weight");
    product /= aj + i_eps;
  }
  return product;
}

BracketValue two_term_bracket_detail(const EikonalWeights& weights, std::size_t m) {
  check_sizes(weights);
  const std::size_t n = weights.a.size();
  if (m < 1 || m > n) throw DomainError("two_term_bracket requires 1 <= m <= n");
  if (!(weights.epsilon > 0.0)) throw DomainError("two_term_bracket requires epsilon > 0");
  if (min_subset_sum_magnitude(weights.a) == 0.0) {
    throw SingularPrefix("a permutation prefix sum vanishes at epsilon = 0");
  }
  const double eps = weights.epsilon;
  const Complex plus_i_eps{0.0, eps};

  // Trailing chain, fixed order, +i eps throughout.
  const double block_sum =
      std::accumulate(weights.a.begin(), weights.a.begin() + m, 0.0);
  Complex trailing{1.0, 0.0};
  double partial = block_sum;
  for (std::size_t j = m; j < n; ++j) {
    partial += weights.a[j];
    trailing /= partial + plus_i_eps;
  }

  BracketValue out;
  if (m == 1) {
    const double a1 = weights.a[0];
    const Complex lower = 1.0 / (Complex{a1, 0.0} - plus_i_eps);
    const Complex upper = 1.0 / (Complex{a1, 0.0} + plus_i_eps);
    out.value = (lower - upper) * trailing;
    out.scale = std::abs(lower * trailing);
    return out;
  }

  // One branch term per permutation of the block: -i eps on the m-1 running
  // prefixes, the inert 1/X at position m, then the trailing chain.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Complex> terms;
  do {
    double prefix = 0.0;
    Complex term{1.0, 0.0};
    for (std::size_t j = 0; j + 1 < m; ++j) {
      prefix += weights.a[order[j]];
      term /= prefix - plus_i_eps;
    }
    term *= trailing / block_sum;
    terms.push_back(term);
  } while (std::next_permutation(order.begin(), order.end()));

  Complex forward{0.0, 0.0};
  Complex backward{0.0, 0.0};
  double scale = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    forward += terms[i];
    backward += terms[terms.size() - 1 - i];
    scale = std::max(scale, std::abs(terms[i]));
  }
  out.value = forward - backward;
  out.scale = scale;
  return out;
}

Complex two_term_bracket(const EikonalWeights& weights, std::size_t m) {
  return two_term_bracket_detail(weights, m).value;
}

Complex i_n_bruteforce(const DstTriple& d, unsigned N) {
  if (N > 20) throw TooLarge("i_n_bruteforce supports N <= 20");
  const auto& fact = factorial_table();
  Complex total{0.0, 0.0};
  for (unsigned ni = 0; ni <= N; ++ni) {
    for (unsigned nf = 0; ni + nf <= N; ++nf) {
      const unsigned n0 = N - ni - nf;
      Complex term = complex_pow(d.d11, ni) / (fact[ni] * std::exp2(ni));
      term *= complex_pow(d.d22, nf) / (fact[nf] * std::exp2(nf));
      term *= complex_pow(d.d12, n0) / fact[n0];
      total += term;
    }
  }
  return total;
}

Complex resummed_series(const DstTriple& d, double e_sq, unsigned N_max) {
  if (N_max > 20) throw TooLarge("resummed_series supports N_max <= 20");
  Complex total{0.0, 0.0};
  double coupling_power = 1.0;
  for (unsigned N = 0; N <= N_max; ++N) {
    total += coupling_power * i_n_bruteforce(d, N);
    coupling_power *= e_sq;
  }
  return total;
}

Rational i_n_bruteforce_exact(const RationalDstTriple& d, unsigned N) {
  if (N > 20) throw TooLarge("i_n_bruteforce_exact supports N <= 20");
  using Int = boost::multiprecision::cpp_int;
  const auto factorial = [](unsigned k) {
    Int f = 1;
    for (unsigned j = 2; j <= k; ++j) f *= j;
    return f;
  };
  const auto rational_pow = [](const Rational& base, unsigned k) {
    Rational p = 1;
    for (unsigned j = 0; j < k; ++j) p *= base;
    return p;
  };
  Rational total = 0;
  for (unsigned ni = 0; ni <= N; ++ni) {
    for (unsigned nf = 0; ni + nf <= N; ++nf) {
      const unsigned n0 = N - ni - nf;
      Rational term = rational_pow(d.d11, ni) / Rational(factorial(ni) * (Int(1) << ni));
      term *= rational_pow(d.d22, nf) / Rational(factorial(nf) * (Int(1) << nf));
      term *= rational_pow(d.d12, n0) / Rational(factorial(n0));
      total += term;
    }
  }
  return total;
}

}  // namespace irfield
