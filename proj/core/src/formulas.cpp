#include "twoconn/formulas.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "twoconn/degree_sequence.hpp"
#include "twoconn/error.hpp"

namespace twoconn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CountEstimate finish(Regime regime, const ModelParams& p, std::vector<std::pair<std::string, double>> parts) {
  CountEstimate out;
  out.regime = regime;
  out.params = p;
  out.breakdown = std::move(parts);
  double total = 0.0;
  for (const auto& [name, value] : out.breakdown) total += value;
  out.log_count = LogReal::from_log(total);
  return out;
}

// (2m-1)!! (e^lambda - 1 - lambda)^n / lambda^(2m): the pairing count times
// the truncated-Poisson weight shared by every (n,m) formula.
std::vector<std::pair<std::string, double>> shared_factors(const ModelParams& p) {
  const double n = static_cast<double>(p.n);
  const double m = static_cast<double>(p.m);
  return {
      {"double_factorial", log_double_factorial(p.m).log_magnitude()},
      {"poisson_normalizer", n * log_poisson_tail2(p.lambda_c)},
      {"lambda_power", -2.0 * m * std::log(p.lambda_c)},
  };
}

void require_valid(const ModelParams& p) {
  if (p.n < 3 || p.m <= p.n) throw DomainError("formula requires m > n >= 3");
}

// -1/2 ln(2 pi n c (1 + eta_bar - c)), the local-limit estimate of P(sum Y_i = 2m).
double sum_probability(const ModelParams& p) {
  const double spread = 1.0 + p.eta_bar - p.c;
  if (!(spread > 0.0)) throw InternalError("1 + eta_bar - c must be positive for c > 2");
  return -0.5 * std::log(kTwoPi * static_cast<double>(p.n) * p.c * spread);
}

std::vector<std::pair<std::string, double>> main_factors(const ModelParams& p) {
  auto parts = shared_factors(p);
  parts.emplace_back("sum_probability", sum_probability(p));
  // c - 2 p_c equals lambda_c exactly; the latter avoids cancellation near c = 2.
  parts.emplace_back("kernel_fraction", 0.5 * std::log(p.lambda_c / p.c));
  parts.emplace_back("obstruction", -p.c / 2.0 - p.lambda_c * p.lambda_c / 4.0);
  return parts;
}

void check_degree_sequence(const DegreeSequence& d) {
  if (d.empty()) throw DomainError("empty degree sequence");
  if (!d.has_even_total()) throw DomainError("degree sum is odd");
  if (d.min_degree() < 2) throw DomainError("all degrees must be at least 2");
}

}  // namespace

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::kMain: return "main";
    case Regime::kCaseA: return "a";
    case Regime::kCaseB: return "b";
    case Regime::kCaseC: return "c";
    case Regime::kTwoEdge: return "two-edge";
    case Regime::kWright: return "wright";
    case Regime::kMinDeg2: return "mindeg2";
    case Regime::kDegSeqA: return "degseq-a";
    case Regime::kDegSeqB: return "degseq-b";
    case Regime::kDegSeqC: return "degseq-c";
  }
  return "unknown";
}

double CountEstimate::factor(std::string_view name) const {
  for (const auto& [key, value] : breakdown) {
    if (key == name) return value;
  }
  return 0.0;
}

double log_ratio(const CountEstimate& a, const CountEstimate& b) {
  std::map<std::string, double, std::less<>> diff;
  for (const auto& [key, value] : a.breakdown) diff[key] += value;
  for (const auto& [key, value] : b.breakdown) diff[key] -= value;
  double total = 0.0;
  for (const auto& [key, value] : diff) total += value;
  return total;
}

CountEstimate log_count_main(const ModelParams& p) {
  require_valid(p);
  return finish(Regime::kMain, p, main_factors(p));
}

CountEstimate log_count_case_a(const ModelParams& p) {
  require_valid(p);
  if (p.r <= 0) throw DomainError("case (a) requires r = 2m - 2n > 0");
  const double r = static_cast<double>(p.r);
  auto parts = shared_factors(p);
  // n (c - 2) = r.
  parts.emplace_back("sum_probability_a", -0.5 * std::log(kTwoPi * r));
  parts.emplace_back("kernel_fraction_a", 0.5 * std::log(3.0 * r) - 0.5 * std::log(2.0 * static_cast<double>(p.m)));
  parts.emplace_back("obstruction_a", -1.0);
  return finish(Regime::kCaseA, p, std::move(parts));
}

CountEstimate log_count_case_b(const ModelParams& p) {
  require_valid(p);
  return finish(Regime::kCaseB, p, main_factors(p));
}

CountEstimate log_count_case_c(const ModelParams& p) {
  require_valid(p);
  auto parts = shared_factors(p);
  parts.emplace_back("sum_probability_c", -0.5 * std::log(kTwoPi * static_cast<double>(p.n) * p.c));
  parts.emplace_back("obstruction_c", -p.eta_bar / 2.0 - p.eta_bar * p.eta_bar / 4.0);
  return finish(Regime::kCaseC, p, std::move(parts));
}

CountEstimate log_count_two_edge(const ModelParams& p) {
  require_valid(p);
  auto parts = main_factors(p);
  const double l = p.lambda_c;
  const double e = std::expm1(l);
  parts.emplace_back("two_edge_term", l * l * l / (2.0 * e * e));
  return finish(Regime::kTwoEdge, p, std::move(parts));
}

CountEstimate log_count_mindeg2(const ModelParams& p) {
  CountEstimate out = log_count_case_c(p);
  out.regime = Regime::kMinDeg2;
  return out;
}

CountEstimate log_count_wright(std::int64_t n, std::int64_t k) {
  if (k < 1) throw DomainError("Wright's formula requires k = m - n >= 1");
  ModelParams p = derive_params(n, n + k);
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  std::vector<std::pair<std::string, double>> parts{
      {"constant", 0.5 * std::log(3.0) - 1.0 - 0.5 * std::log(kTwoPi)},
      {"vertex_power", (nn + 3.0 * kk - 0.5) * std::log(nn)},
      {"exponential", 2.0 * kk - nn + 3.0 * kk * kk / (2.0 * nn)},
      {"excess_power", -kk * std::log(18.0 * kk * kk)},
  };
  return finish(Regime::kWright, p, std::move(parts));
}

CountEstimate log_count_degseq(const DegreeSequence& d, DegSeqRegime regime) {
  check_degree_sequence(d);
  const auto n = static_cast<std::int64_t>(d.size());
  const std::int64_t m = d.edge_count();
  double factorials = 0.0;
  for (int x : d.degrees()) factorials += log_factorial(x);
  std::vector<std::pair<std::string, double>> parts{
      {"double_factorial", log_double_factorial(m).log_magnitude()},
      {"degree_factorials", -factorials},
  };
  ModelParams p;
  p.n = n;
  p.m = m;
  p.r = 2 * m - 2 * n;
  p.c = 2.0 * static_cast<double>(m) / static_cast<double>(n);
  Regime tag = Regime::kDegSeqC;
  switch (regime) {
    case DegSeqRegime::kA: {
      if (p.r <= 0) throw DomainError("regime (a) requires r = 2m - 2n > 0");
      const double r = static_cast<double>(p.r);
      parts.emplace_back("kernel_fraction_a", 0.5 * std::log(3.0 * r) - 0.5 * std::log(2.0 * static_cast<double>(m)));
      parts.emplace_back("obstruction_a", -1.0);
      if (n >= 3) p = derive_params(n, m);
      tag = Regime::kDegSeqA;
      break;
    }
    case DegSeqRegime::kB: {
      p = derive_params(n, m);
      parts.emplace_back("kernel_fraction", 0.5 * std::log(p.lambda_c / p.c));
      parts.emplace_back("obstruction", -p.c / 2.0 - p.lambda_c * p.lambda_c / 4.0);
      tag = Regime::kDegSeqB;
      break;
    }
    case DegSeqRegime::kC: {
      const double eta = eta_of(d);
      parts.emplace_back("obstruction_eta", -eta / 2.0 - eta * eta / 4.0);
      if (n >= 3 && m > n) p = derive_params(n, m);
      break;
    }
  }
  return finish(tag, p, std::move(parts));
}

Regime auto_regime(double c) {
  if (c < 2.2) return Regime::kCaseA;
  if (c > 30.0) return Regime::kCaseC;
  return Regime::kMain;
}

CountEstimate log_count(const ModelParams& p, Regime regime) {
  switch (regime) {
    case Regime::kMain: return log_count_main(p);
    case Regime::kCaseA: return log_count_case_a(p);
    case Regime::kCaseB: return log_count_case_b(p);
    case Regime::kCaseC: return log_count_case_c(p);
    case Regime::kTwoEdge: return log_count_two_edge(p);
    case Regime::kMinDeg2: return log_count_mindeg2(p);
    case Regime::kWright: return log_count_wright(p.n, p.m - p.n);
    default: throw DomainError("degree-sequence regimes need a degree sequence");
  }
}

}  // namespace twoconn
