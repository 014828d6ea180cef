#include "twoconn/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "twoconn/error.hpp"

namespace twoconn {

std::string_view model_name(Model m) { return m == Model::kPairing ? "pairing" : "kernel"; }

std::string_view event_name(Event e) {
  switch (e) {
    case Event::kSimple: return "simple";
    case Event::kTwoConnectedAndSimple: return "two_connected_and_simple";
    case Event::k2cs: return "2cs";
    case Event::kTwoEdgeConnectedPreKernel: return "two_edge_connected_pre_kernel";
    case Event::kProp5Discrepancy: return "prop5_discrepancy";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  if (name == "pairing") return Model::kPairing;
  if (name == "kernel" || name == "kernel_config" || name == "kernel-config") return Model::kKernelConfig;
  throw DomainError("unknown model: " + std::string(name));
}

Event parse_event(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (Event e : {Event::kSimple, Event::kTwoConnectedAndSimple, Event::k2cs, Event::kTwoEdgeConnectedPreKernel,
                  Event::kProp5Discrepancy}) {
    if (key == event_name(e)) return e;
  }
  throw DomainError("unknown event: " + std::string(name));
}

std::string_view xyz_mode_name(XyzMode mode) { return mode == XyzMode::kSection5 ? "section5" : "section8"; }

XyzMode parse_xyz_mode(std::string_view name) {
  if (name == "section5") return XyzMode::kSection5;
  if (name == "section8") return XyzMode::kSection8;
  throw DomainError("unknown xyz mode: " + std::string(name));
}

SampleSpec SampleSpec::fixed(Model model, DegreeSequence d) {
  SampleSpec spec;
  spec.model = model;
  spec.degrees = std::move(d);
  spec.n = static_cast<std::int64_t>(spec.degrees->size());
  spec.m = spec.degrees->has_even_total() ? spec.degrees->edge_count() : 0;
  return spec;
}

SampleSpec SampleSpec::conditioned(Model model, std::int64_t n, std::int64_t m) {
  SampleSpec spec;
  spec.model = model;
  spec.n = n;
  spec.m = m;
  return spec;
}

namespace {

// Supplies the degree sequence of each sample.
class DegreeSource {
 public:
  explicit DegreeSource(const SampleSpec& spec) : spec_(spec) {
    if (spec.degrees) {
      if (!spec.degrees->has_even_total()) throw DomainError("degree sum is odd");
      if (spec.model == Model::kKernelConfig) {
        if (spec.degrees->empty() || spec.degrees->min_degree() < 2 || spec.degrees->kernel_vertex_count() == 0) {
          throw DomainError("kernel model needs min degree 2 and some degree >= 3");
        }
      }
    } else {
      sampler_.emplace(spec.n, spec.m);
    }
  }

  const DegreeSequence& next(Rng& rng) {
    if (spec_.degrees) return *spec_.degrees;
    current_ = sampler_->draw(rng, spec_.max_tries).degrees;
    return current_;
  }

  DegreeSource(const DegreeSource& other) : spec_(other.spec_), sampler_(other.sampler_) {}

 private:
  const SampleSpec& spec_;
  std::optional<ConditionedDegreeSampler> sampler_;
  DegreeSequence current_;
};

// Runs `per_batch(batch_index, batch_samples, rng, source)` for every batch and
// returns the per-batch results in batch order.
template <typename Result, typename Fn>
std::vector<Result> run_batches(const SampleSpec& spec, const RunOptions& options, Fn per_batch) {
  if (options.samples < 1) throw DomainError("samples must be positive");
  const DegreeSource prototype(spec);
  const std::int64_t batches = (options.samples + kBatchSize - 1) / kBatchSize;
  std::vector<Result> results(static_cast<std::size_t>(batches));
  std::atomic<std::int64_t> next_batch{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    DegreeSource source = prototype;
    for (;;) {
      const std::int64_t b = next_batch.fetch_add(1);
      if (b >= batches) return;
      const std::int64_t count = std::min(kBatchSize, options.samples - b * kBatchSize);
      Rng rng(stream_seed(options.seed, static_cast<std::uint64_t>(b)));
      try {
        results[static_cast<std::size_t>(b)] = per_batch(count, rng, source);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next_batch.store(batches);
        return;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(batches)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

bool event_holds(Model model, Event event, const DegreeSequence& d, Rng& rng) {
  if (model == Model::kPairing) {
    Multigraph g = sample_pairing(d, rng);
    switch (event) {
      case Event::kSimple: return is_simple(g);
      case Event::kTwoConnectedAndSimple:
      case Event::k2cs: return is_simple(g) && is_two_connected(g);
      case Event::kTwoEdgeConnectedPreKernel: return is_simple(g) && is_two_edge_connected(g);
      case Event::kProp5Discrepancy: {
        Multigraph k = kernel(g);
        return k.vertex_count() >= 3 && is_two_connected(k) != is_two_edge_connected(k);
      }
    }
    return false;
  }
  const bool need_pre_kernel = event != Event::kProp5Discrepancy;
  KernelConfig config = sample_kernel_config(d, rng, need_pre_kernel);
  switch (event) {
    case Event::kSimple: return is_simple(config.pre_kernel);
    case Event::kTwoConnectedAndSimple:
    case Event::k2cs: return is_simple(config.pre_kernel) && is_two_connected(config.pre_kernel);
    case Event::kTwoEdgeConnectedPreKernel:
      return is_simple(config.pre_kernel) && is_two_edge_connected(config.pre_kernel);
    case Event::kProp5Discrepancy:
      // Kernels below three vertices are outside the statistic's domain.
      return config.kernel.vertex_count() >= 3 &&
             is_two_connected(config.kernel) != is_two_edge_connected(config.kernel);
  }
  return false;
}

// Mean and standard error of integer observations from exact sums.
Estimate integer_mean(std::string statistic, std::int64_t sum, std::int64_t sum_sq, std::int64_t samples,
                      std::uint64_t seed) {
  Estimate e;
  e.statistic = std::move(statistic);
  e.samples = samples;
  e.seed = seed;
  const double n = static_cast<double>(samples);
  e.value = static_cast<double>(sum) / n;
  if (samples > 1) {
    const double var = (static_cast<double>(sum_sq) - static_cast<double>(sum) * e.value) / (n - 1.0);
    e.std_error = std::sqrt(std::max(0.0, var) / n);
  }
  return e;
}

Estimate real_mean(std::string statistic, double sum, double sum_sq, std::int64_t samples, std::uint64_t seed) {
  Estimate e;
  e.statistic = std::move(statistic);
  e.samples = samples;
  e.seed = seed;
  const double n = static_cast<double>(samples);
  e.value = sum / n;
  if (samples > 1) {
    const double var = (sum_sq - sum * e.value) / (n - 1.0);
    e.std_error = std::sqrt(std::max(0.0, var) / n);
  }
  return e;
}

}  // namespace

Estimate estimate_event(const SampleSpec& spec, Event event, const RunOptions& options) {
  auto counts = run_batches<std::int64_t>(spec, options, [&](std::int64_t count, Rng& rng, DegreeSource& source) {
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < count; ++i) hits += event_holds(spec.model, event, source.next(rng), rng) ? 1 : 0;
    return hits;
  });
  std::int64_t hits = 0;
  for (std::int64_t c : counts) hits += c;
  Estimate e;
  e.statistic = std::string(event_name(event));
  e.samples = options.samples;
  e.seed = options.seed;
  e.value = static_cast<double>(hits) / static_cast<double>(options.samples);
  e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(options.samples));
  return e;
}

Estimate estimate_acceptance_rate(std::int64_t n, std::int64_t m, const RunOptions& options) {
  const SampleSpec spec = SampleSpec::conditioned(Model::kKernelConfig, n, m);
  const ConditionedDegreeSampler sampler(n, m);
  auto counts = run_batches<std::int64_t>(spec, options, [&](std::int64_t count, Rng& rng, DegreeSource&) {
    return sampler.count_accepted(rng, count);
  });
  std::int64_t accepted = 0;
  for (std::int64_t c : counts) accepted += c;
  Estimate e;
  e.statistic = "acceptance_rate";
  e.samples = options.samples;
  e.seed = options.seed;
  e.value = static_cast<double>(accepted) / static_cast<double>(options.samples);
  e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(options.samples));
  return e;
}

XYZStats xyz_of(const KernelConfig& config, XyzMode mode) {
  XYZStats s;
  s.mode = mode;
  const std::vector<int> degree = config.kernel.degrees();
  std::vector<Edge> bare;
  auto edges = config.kernel.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    const std::size_t assigned = config.assignment[e].size();
    if (u == v) {
      if (mode == XyzMode::kSection5 || degree[u] == 3) ++s.x;
      if (degree[u] >= 4 && assigned <= 1) ++s.z;
    } else if (assigned == 0) {
      bare.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::sort(bare.begin(), bare.end());
  for (std::size_t i = 0; i < bare.size();) {
    std::size_t j = i;
    while (j < bare.size() && bare[j] == bare[i]) ++j;
    const auto k = static_cast<std::int64_t>(j - i);
    s.y += k * (k - 1) / 2;
    i = j;
  }
  return s;
}

XyzSummary collect_xyz(const SampleSpec& spec, XyzMode mode, const RunOptions& options) {
  if (spec.model != Model::kKernelConfig) throw DomainError("xyz statistics need the kernel configuration model");
  auto batches = run_batches<std::vector<XYZStats>>(spec, options, [&](std::int64_t count, Rng& rng,
                                                                      DegreeSource& source) {
    std::vector<XYZStats> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
      KernelConfig config = sample_kernel_config(source.next(rng), rng, false);
      out.push_back(xyz_of(config, mode));
    }
    return out;
  });

  XyzSummary summary;
  summary.mode = mode;
  for (auto& b : batches) summary.per_sample.insert(summary.per_sample.end(), b.begin(), b.end());

  struct Sums {
    std::int64_t sum = 0, sum_sq = 0;
    void add(std::int64_t v) {
      sum += v;
      sum_sq += v * v;
    }
  } x, y, z, xy, fall, xyz;
  for (const auto& s : summary.per_sample) {
    x.add(s.x);
    y.add(s.y);
    z.add(s.z);
    xy.add(s.x + s.y);
    fall.add((s.x + s.y) * (s.x + s.y - 1));
    xyz.add(s.x + s.y + s.z);
  }
  const std::int64_t n = options.samples;
  const std::uint64_t seed = options.seed;
  summary.mean_x = integer_mean("E[X]", x.sum, x.sum_sq, n, seed);
  summary.mean_y = integer_mean("E[Y]", y.sum, y.sum_sq, n, seed);
  summary.mean_z = integer_mean("E[Z]", z.sum, z.sum_sq, n, seed);
  summary.mean_x_plus_y = integer_mean("E[X+Y]", xy.sum, xy.sum_sq, n, seed);
  summary.falling2_x_plus_y = integer_mean("E[(X+Y)_2]", fall.sum, fall.sum_sq, n, seed);
  summary.mean_x_plus_y_plus_z = integer_mean("E[X+Y+Z]", xyz.sum, xyz.sum_sq, n, seed);
  return summary;
}

KernelShapeSummary kernel_shape_stats(std::int64_t n, std::int64_t m, const RunOptions& options) {
  const SampleSpec spec = SampleSpec::conditioned(Model::kKernelConfig, n, m);
  struct Sums {
    double edges = 0, edges_sq = 0, frac = 0, frac_sq = 0, empty = 0, empty_sq = 0;
  };
  auto batches = run_batches<Sums>(spec, options, [&](std::int64_t count, Rng& rng, DegreeSource& source) {
    Sums s;
    for (std::int64_t i = 0; i < count; ++i) {
      const DegreeSequence& d = source.next(rng);
      const auto kernel_edges = static_cast<double>(d.kernel_edge_total());
      const double frac = static_cast<double>(d.count_of(3)) / kernel_edges;
      KernelConfig config = sample_kernel_config(d, rng, false);
      std::int64_t bare = 0;
      for (const auto& list : config.assignment) bare += list.empty() ? 1 : 0;
      const double empty = static_cast<double>(bare) / kernel_edges;
      s.edges += kernel_edges;
      s.edges_sq += kernel_edges * kernel_edges;
      s.frac += frac;
      s.frac_sq += frac * frac;
      s.empty += empty;
      s.empty_sq += empty * empty;
    }
    return s;
  });
  Sums total;
  for (const Sums& s : batches) {
    total.edges += s.edges;
    total.edges_sq += s.edges_sq;
    total.frac += s.frac;
    total.frac_sq += s.frac_sq;
    total.empty += s.empty;
    total.empty_sq += s.empty_sq;
  }
  KernelShapeSummary out;
  out.mean_kernel_edges = real_mean("m'", total.edges, total.edges_sq, options.samples, options.seed);
  out.mean_d3_fraction = real_mean("D3/m'", total.frac, total.frac_sq, options.samples, options.seed);
  out.empty_edge_rate = real_mean("empty_edge_rate", total.empty, total.empty_sq, options.samples, options.seed);
  const ModelParams p = derive_params(n, m);
  out.target_kernel_edges = 1.5 * static_cast<double>(p.r);
  out.target_empty_rate = p.lambda_c / p.c;
  return out;
}

double lemma9_sum(const DegreeSequence& d, int q) {
  if (q < 1 || q > 3) throw LimitError("lemma9_sum supports q in {1, 2, 3}");
  if (d.empty() || d.min_degree() < 2) throw DomainError("lemma9_sum needs all degrees >= 2");
  if (d.kernel_vertex_count() == 0) throw DomainError("lemma9_sum needs a vertex of degree >= 3");
  long double p1 = 0, p2 = 0, p3 = 0;
  for (int x : d.degrees()) {
    if (x < 3) continue;
    const long double a = static_cast<long double>(x) * (x - 1) / 2;
    p1 += a;
    p2 += a * a;
    p3 += a * a * a;
  }
  // Ordered tuples of distinct indices, by inclusion-exclusion over coincidences.
  long double distinct = p1;
  if (q == 2) distinct = p1 * p1 - p2;
  if (q == 3) distinct = p1 * p1 * p1 - 3 * p1 * p2 + 2 * p3;
  const long double two_m = 2.0L * static_cast<long double>(d.kernel_edge_total());
  long double scale = 1;
  for (int i = 0; i < q; ++i) scale *= two_m;
  return static_cast<double>(distinct / scale);
}

}  // namespace twoconn
