#pragma once

#include <cstdint>
#include <vector>

#include "twoconn/log_real.hpp"

namespace twoconn {

class DegreeSequence;

/// Scalar parameters derived from a vertex count n and edge count m.
/// lambda_c is the positive root of g(lambda) = c.
struct ModelParams {
  std::int64_t n = 0;
  std::int64_t m = 0;
  double c = 0.0;          ///< average degree 2m/n
  std::int64_t r = 0;      ///< 2m - 2n
  double lambda_c = 0.0;
  double eta_bar = 0.0;    ///< lambda e^lambda / (e^lambda - 1)
  double p_c = 0.0;        ///< P(Y = 2) for Y ~ TP(2, lambda_c)
  double delta = 0.0;      ///< (lambda_c / c)^2
  double p_a = 0.0;        ///< exp(-c/2 - lambda_c^2/4)
};

/// e^lambda - 1 - lambda without cancellation for small lambda.
double poisson_tail2(double lambda);

/// ln(e^lambda - 1 - lambda), finite for every lambda > 0.
double log_poisson_tail2(double lambda);

/// g(lambda) = lambda (e^lambda - 1) / (e^lambda - 1 - lambda). Tends to 2 as lambda -> 0.
double g_function(double lambda);

/// Solves g(lambda) = c for c > 2. Bisection followed by bracketed Newton polishing;
/// the result satisfies |g(lambda) - c| <= 1e-10.
double solve_lambda(double c);

/// Requires m > n >= 3 (so c > 2).
ModelParams derive_params(std::int64_t n, std::int64_t m);

/// Derived quantities for an arbitrary real average degree c > 2; n, m and r are
/// left at zero. Used by sweeps and property tests.
ModelParams params_for_degree(double c);

/// ln((2m-1)!!); m = 0 gives the empty product.
LogReal log_double_factorial(std::int64_t m);

/// ln(n!) via lgamma.
double log_factorial(std::int64_t n);

/// ln C(n, k); -inf outside 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

/// ln of the number of (n,m)-graphs, C(n(n-1)/2, m).
double log_graph_count(std::int64_t n, std::int64_t m);

/// Poisson(lambda) conditioned on the value being at least 2.
class TruncatedPoisson {
 public:
  explicit TruncatedPoisson(double lambda);

  double lambda() const { return lambda_; }

  double log_pmf(std::int64_t j) const;
  /// Zero outside the support j >= 2.
  double pmf(std::int64_t j) const;
  /// Equals g(lambda).
  double mean() const;
  /// E[Y (Y-1)] = lambda^2 e^lambda / (e^lambda - 1 - lambda).
  double second_factorial_moment() const;

  /// pmf(2), pmf(3), ... until the term drops below 1e-15 of the running sum;
  /// element k holds pmf(k + 2).
  std::vector<double> pmf_table() const;

 private:
  double lambda_;
  double log_normalizer_;  // ln(e^lambda - 1 - lambda)
};

double trunc_poisson_pmf(double lambda, std::int64_t j);

/// eta(d) = sum d_i (d_i - 1) / sum d_i.
double eta_of(const DegreeSequence& d);

}  // namespace twoconn
