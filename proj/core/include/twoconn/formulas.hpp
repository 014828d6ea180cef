#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twoconn/log_real.hpp"
#include "twoconn/numeric.hpp"

namespace twoconn {

class DegreeSequence;

enum class Regime { kMain, kCaseA, kCaseB, kCaseC, kTwoEdge, kWright, kMinDeg2, kDegSeqA, kDegSeqB, kDegSeqC };

std::string_view regime_name(Regime regime);

// Natural-log estimate of a graph count, split into named additive factors.
struct CountEstimate {
  LogReal log_count;
  Regime regime = Regime::kMain;
  ModelParams params;
  std::vector<std::pair<std::string, double>> breakdown;

  double log_value() const { return log_count.log_magnitude(); }
  double log10_value() const { return log_count.log10_magnitude(); }
  /// Zero when the factor is absent.
  double factor(std::string_view name) const;
};

/// ln(a / b) computed factor by factor, so that factors shared by both
/// estimates cancel exactly instead of losing precision in the totals.
double log_ratio(const CountEstimate& a, const CountEstimate& b);

/// 2-connected (n,m)-graphs, valid for all c > 2.
CountEstimate log_count_main(const ModelParams& p);
/// c -> 2 form.
CountEstimate log_count_case_a(const ModelParams& p);
/// Bounded c; identical expression to the main formula.
CountEstimate log_count_case_b(const ModelParams& p);
/// c -> infinity form.
CountEstimate log_count_case_c(const ModelParams& p);
/// 2-edge-connected (n,m)-graphs.
CountEstimate log_count_two_edge(const ModelParams& p);
/// Wright's range m = n + k with k = o(n^{2/3}).
CountEstimate log_count_wright(std::int64_t n, std::int64_t k);
/// (n,m)-graphs of minimum degree 2; same value as case (c).
CountEstimate log_count_mindeg2(const ModelParams& p);

enum class DegSeqRegime { kA, kB, kC };

/// 2-connected graphs with degree sequence d, leading-order estimate.
CountEstimate log_count_degseq(const DegreeSequence& d, DegSeqRegime regime);

/// Regime used by `count asymptotic --regime auto`: a below c = 2.2, c above 30, main otherwise.
Regime auto_regime(double c);

CountEstimate log_count(const ModelParams& p, Regime regime);

}  // namespace twoconn
