#include "twoconn/numeric.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "twoconn/degree_sequence.hpp"
#include "twoconn/error.hpp"

namespace twoconn {

namespace {

constexpr double kSeriesCutoff = 1e-3;

}  // namespace

double log_poisson_tail2(double lambda) {
  if (lambda < 30.0) return std::log(poisson_tail2(lambda));
  return lambda + std::log1p(-(1.0 + lambda) * std::exp(-lambda));
}

double poisson_tail2(double lambda) {
  if (lambda < kSeriesCutoff) {
    // lambda^2/2! + ... + lambda^8/8!, Horner form.
    double sum = 1.0 / 40320.0;
    for (int k = 7; k >= 2; --k) sum = sum * lambda + 1.0 / std::tgamma(k + 1.0);
    return sum * lambda * lambda;
  }
  return std::expm1(lambda) - lambda;
}

double g_function(double lambda) {
  if (lambda <= 0.0) return 2.0;
  if (lambda < 1.0) return lambda * std::expm1(lambda) / poisson_tail2(lambda);
  // lambda / (1 - lambda / (e^lambda - 1)) stays finite when e^lambda overflows.
  return lambda / (1.0 - lambda / std::expm1(lambda));
}

double solve_lambda(double c) {
  if (!std::isfinite(c)) throw DomainError("average degree must be finite");
  if (c <= 2.0) throw DomainError("average degree must exceed 2");

  // g is increasing with g(0+) = 2, so [0, hi] brackets the root.
  double lo = 0.0;
  double hi = std::max(20.0, c + 10.0);
  for (;;) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g_function(mid) < c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double best = (std::fabs(g_function(lo) - c) <= std::fabs(g_function(hi) - c)) ? lo : hi;
  if (best <= 0.0) best = hi;

  // Newton polish, kept only while it stays in the bracket and lowers the residual.
  for (int step = 0; step < 3; ++step) {
    double e = std::expm1(best);
    double t = poisson_tail2(best);
    double slope = (e * e - best * best * std::exp(best)) / (t * t);
    if (!(slope > 0.0) || !std::isfinite(slope)) break;
    double next = best - (g_function(best) - c) / slope;
    if (!(next > 0.0) || std::fabs(g_function(next) - c) >= std::fabs(g_function(best) - c)) break;
    best = next;
  }
  return best;
}

ModelParams params_for_degree(double c) {
  ModelParams p;
  p.c = c;
  p.lambda_c = solve_lambda(c);
  const double lambda = p.lambda_c;
  p.eta_bar = lambda / -std::expm1(-lambda);
  p.p_c = std::exp(2.0 * std::log(lambda) - std::log(2.0) - log_poisson_tail2(lambda));
  p.delta = (lambda / c) * (lambda / c);
  p.p_a = std::exp(-c / 2.0 - lambda * lambda / 4.0);
  return p;
}

ModelParams derive_params(std::int64_t n, std::int64_t m) {
  if (n < 3) throw DomainError("vertex count must be at least 3");
  if (m <= n) throw DomainError("average degree must exceed 2 (need m > n)");
  ModelParams p = params_for_degree(2.0 * static_cast<double>(m) / static_cast<double>(n));
  p.n = n;
  p.m = m;
  p.r = 2 * m - 2 * n;
  return p;
}

LogReal log_double_factorial(std::int64_t m) {
  if (m < 0) throw DomainError("double factorial of a negative count");
  if (m == 0) return LogReal::from_log(0.0);
  double mm = static_cast<double>(m);
  return LogReal::from_log(std::lgamma(2.0 * mm + 1.0) - mm * std::numbers::ln2 - std::lgamma(mm + 1.0));
}

double log_factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return -std::numeric_limits<double>::infinity();
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double log_graph_count(std::int64_t n, std::int64_t m) { return log_binomial(n * (n - 1) / 2, m); }

TruncatedPoisson::TruncatedPoisson(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("truncated Poisson needs lambda > 0");
  log_normalizer_ = log_poisson_tail2(lambda);
}

double TruncatedPoisson::log_pmf(std::int64_t j) const {
  if (j < 2) return -std::numeric_limits<double>::infinity();
  double jj = static_cast<double>(j);
  return jj * std::log(lambda_) - std::lgamma(jj + 1.0) - log_normalizer_;
}

double TruncatedPoisson::pmf(std::int64_t j) const { return j < 2 ? 0.0 : std::exp(log_pmf(j)); }

double TruncatedPoisson::mean() const { return g_function(lambda_); }

double TruncatedPoisson::second_factorial_moment() const {
  return std::exp(2.0 * std::log(lambda_) + lambda_ - log_normalizer_);
}

std::vector<double> TruncatedPoisson::pmf_table() const {
  std::vector<double> table;
  double sum = 0.0;
  for (std::int64_t j = 2;; ++j) {
    double term = pmf(j);
    table.push_back(term);
    sum += term;
    if (static_cast<double>(j) > lambda_ && term < 1e-15 * sum) break;
  }
  return table;
}

double trunc_poisson_pmf(double lambda, std::int64_t j) {
  if (j < 2) return 0.0;
  return TruncatedPoisson(lambda).pmf(j);
}

double eta_of(const DegreeSequence& d) {
  if (d.empty()) throw DomainError("eta of an empty degree sequence");
  if (d.total() == 0) throw DomainError("eta of an all-zero degree sequence");
  double num = 0.0;
  for (int x : d.degrees()) num += static_cast<double>(x) * (x - 1);
  return num / static_cast<double>(d.total());
}

}  // namespace twoconn
