#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twoconn/degree_sequence.hpp"
#include "twoconn/models.hpp"

namespace twoconn {

struct Estimate {
  std::string statistic;
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

enum class Model { kPairing, kKernelConfig };

enum class Event {
  kSimple,
  kTwoConnectedAndSimple,
  k2cs,
  kTwoEdgeConnectedPreKernel,
  kProp5Discrepancy,
};

std::string_view model_name(Model m);
std::string_view event_name(Event e);
Model parse_model(std::string_view name);
Event parse_event(std::string_view name);

// Where the degree sequences come from: either one fixed sequence, or a fresh
// TP(2, lambda_c) sequence conditioned on summing to 2m for every sample.
struct SampleSpec {
  Model model = Model::kKernelConfig;
  std::optional<DegreeSequence> degrees;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t max_tries = kDefaultMaxTries;

  static SampleSpec fixed(Model model, DegreeSequence d);
  static SampleSpec conditioned(Model model, std::int64_t n, std::int64_t m);
};

// Samples are split into fixed-size batches; batch b draws from stream
// stream_seed(seed, b), and batch results are merged in batch order. Results are
// therefore identical for every thread count.
inline constexpr std::int64_t kBatchSize = 64;

struct RunOptions {
  std::int64_t samples = 1000;
  std::uint64_t seed = 1;
  int threads = 1;
};

/// Frequency of the event over independent model draws.
Estimate estimate_event(const SampleSpec& spec, Event event, const RunOptions& options);

/// Fraction of conditioned-sampler attempts that hit the degree sum 2m;
/// options.samples is the number of attempts.
Estimate estimate_acceptance_rate(std::int64_t n, std::int64_t m, const RunOptions& options);

enum class XyzMode { kSection5, kSection8 };
std::string_view xyz_mode_name(XyzMode mode);
XyzMode parse_xyz_mode(std::string_view name);

// Obstruction counts of one kernel configuration.
//   X: kernel loops (kSection5), or loops at kernel vertices of degree 3 (kSection8).
//   Y: unordered pairs of parallel non-loop kernel edges that both receive no
//      degree-2 vertex.
//   Z: loops at kernel vertices of degree >= 4 that receive at most one
//      degree-2 vertex.
struct XYZStats {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  XyzMode mode = XyzMode::kSection5;
};

XYZStats xyz_of(const KernelConfig& config, XyzMode mode);

struct XyzSummary {
  XyzMode mode = XyzMode::kSection5;
  std::vector<XYZStats> per_sample;
  Estimate mean_x;
  Estimate mean_y;
  Estimate mean_z;
  Estimate mean_x_plus_y;
  Estimate falling2_x_plus_y;  ///< E[(X+Y)(X+Y-1)]
  Estimate mean_x_plus_y_plus_z;
};

/// Kernel configuration model only.
XyzSummary collect_xyz(const SampleSpec& spec, XyzMode mode, const RunOptions& options);

struct KernelShapeSummary {
  Estimate mean_kernel_edges;      ///< m'
  Estimate mean_d3_fraction;       ///< D_3 / m'
  Estimate empty_edge_rate;        ///< fraction of kernel edges with no degree-2 vertex
  double target_kernel_edges = 0;  ///< 3r/2
  double target_d3_fraction = 2.0 / 3.0;
  double target_empty_rate = 0;    ///< sqrt(delta) = lambda_c / c
};

KernelShapeSummary kernel_shape_stats(std::int64_t n, std::int64_t m, const RunOptions& options);

/// Sum over distinct ordered q-tuples of kernel vertices of prod C(d'_i, 2),
/// divided by (2M)^q. q in {1, 2, 3}; computed from power sums.
double lemma9_sum(const DegreeSequence& d, int q);

}  // namespace twoconn
