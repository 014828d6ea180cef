#include "twoconn/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "twoconn/error.hpp"

namespace twoconn {

PointMatching sample_point_matching(int points, Rng& rng) {
  if (points < 0 || points % 2 != 0) throw DomainError("perfect matching needs an even number of points");
  std::vector<int> perm(static_cast<std::size_t>(points));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span<int>(perm));
  PointMatching out;
  out.reserve(perm.size() / 2);
  for (std::size_t i = 0; i < perm.size(); i += 2) {
    out.emplace_back(std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1]));
  }
  return out;
}

namespace {

// cell[p] = vertex owning point p, for the vertices selected by `use`.
template <typename Pred>
std::vector<int> point_cells(const DegreeSequence& d, Pred use) {
  std::vector<int> cell;
  cell.reserve(static_cast<std::size_t>(d.total()));
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (!use(d[v])) continue;
    cell.insert(cell.end(), static_cast<std::size_t>(d[v]), static_cast<int>(v));
  }
  return cell;
}

}  // namespace

Multigraph sample_pairing(const DegreeSequence& d, Rng& rng) {
  if (!d.has_even_total()) throw DomainError("degree sum is odd");
  std::vector<int> cell = point_cells(d, [](int) { return true; });
  PointMatching matching = sample_point_matching(static_cast<int>(cell.size()), rng);
  Multigraph g(static_cast<int>(d.size()));
  for (auto [a, b] : matching) g.add_edge(cell[a], cell[b]);
  return g;
}

Multigraph sample_pairing(const DegreeSequence& d, std::uint64_t seed) {
  Rng rng(seed);
  return sample_pairing(d, rng);
}

Multigraph subdivide(const Multigraph& kernel, const std::vector<std::vector<int>>& assignment, int vertex_count) {
  if (assignment.size() != kernel.edge_count()) throw DomainError("assignment size differs from kernel edge count");
  Multigraph g(vertex_count);
  auto edges = kernel.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int prev = kernel.label(edges[e].first);
    for (int w : assignment[e]) {
      g.add_edge(prev, w);
      prev = w;
    }
    g.add_edge(prev, kernel.label(edges[e].second));
  }
  return g;
}

KernelConfig sample_kernel_config(const DegreeSequence& d, Rng& rng, bool build_pre_kernel) {
  if (d.empty() || d.min_degree() < 2) throw DomainError("kernel configuration needs all degrees >= 2");
  if (d.kernel_vertex_count() == 0) throw DomainError("kernel configuration needs a vertex of degree >= 3");
  if (d.kernel_degree_total() % 2 != 0) throw DomainError("degree sum is odd");

  std::vector<int> cell = point_cells(d, [](int x) { return x >= 3; });
  std::vector<int> labels;
  std::vector<int> local(d.size(), -1);
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] >= 3) {
      local[v] = static_cast<int>(labels.size());
      labels.push_back(static_cast<int>(v));
    }
  }

  KernelConfig config;
  config.points = sample_point_matching(static_cast<int>(cell.size()), rng);
  std::vector<Edge> edges;
  edges.reserve(config.points.size());
  for (auto [a, b] : config.points) edges.emplace_back(local[cell[a]], local[cell[b]]);
  config.kernel = Multigraph(std::move(labels), std::move(edges));

  // Sequential insertion: degree-2 vertex i goes into one of the M + i gaps,
  // chosen uniformly. Node e < M heads the chain of kernel edge e; node M + i is
  // the i-th degree-2 vertex, and choosing a node means "insert right after it".
  const auto kernel_edges = static_cast<int>(config.points.size());
  std::vector<int> deg2;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] == 2) deg2.push_back(static_cast<int>(v));
  }
  std::vector<int> next(static_cast<std::size_t>(kernel_edges) + deg2.size(), -1);
  for (std::size_t i = 0; i < deg2.size(); ++i) {
    auto node = static_cast<int>(kernel_edges + i);
    auto after = static_cast<int>(rng.below(static_cast<std::uint64_t>(node)));
    next[node] = next[after];
    next[after] = node;
  }
  config.assignment.resize(static_cast<std::size_t>(kernel_edges));
  for (int e = 0; e < kernel_edges; ++e) {
    for (int node = next[e]; node >= 0; node = next[node]) config.assignment[e].push_back(deg2[node - kernel_edges]);
  }
  if (build_pre_kernel) config.pre_kernel = subdivide(config.kernel, config.assignment, static_cast<int>(d.size()));
  return config;
}

KernelConfig sample_kernel_config(const DegreeSequence& d, std::uint64_t seed) {
  Rng rng(seed);
  return sample_kernel_config(d, rng, true);
}

DegreeSequence sample_degrees(std::int64_t n, double lambda, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_degrees needs n >= 1");
  TruncatedPoisson tp(lambda);
  std::vector<double> cdf = tp.pmf_table();
  std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
  Rng rng(seed);
  std::vector<int> degrees(static_cast<std::size_t>(n));
  for (auto& x : degrees) {
    double u = rng.uniform();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it != cdf.end()) {
      x = static_cast<int>(it - cdf.begin()) + 2;
      continue;
    }
    // Beyond the table: keep accumulating terms.
    double acc = cdf.back();
    auto j = static_cast<std::int64_t>(cdf.size()) + 2;
    while (true) {
      double term = tp.pmf(j);
      acc += term;
      if (u < acc || term == 0.0) break;
      ++j;
    }
    x = static_cast<int>(j);
  }
  return DegreeSequence(std::move(degrees));
}

ConditionedDegreeSampler::ConditionedDegreeSampler(std::int64_t n, std::int64_t m) : params_(derive_params(n, m)) {
  TruncatedPoisson tp(params_.lambda_c);
  // Extend well past the usual table so the last category's mass is negligible
  // even relative to the rarest accepted configurations.
  std::vector<double> pmf;
  for (std::int64_t j = 2;; ++j) {
    double term = tp.pmf(j);
    pmf.push_back(term);
    if (static_cast<double>(j) > params_.lambda_c && term < 1e-30) break;
  }
  std::vector<double> tail(pmf.size());
  double acc = 0.0;
  for (std::size_t k = pmf.size(); k-- > 0;) {
    acc += pmf[k];
    tail[k] = acc;
  }
  conditional_.resize(pmf.size());
  for (std::size_t k = 0; k < pmf.size(); ++k) conditional_[k] = std::min(1.0, pmf[k] / tail[k]);
  conditional_.back() = 1.0;
}

bool ConditionedDegreeSampler::attempt(Rng& rng, std::vector<std::int64_t>& counts) const {
  const std::int64_t target = 2 * params_.m;
  std::int64_t remaining = params_.n;
  std::int64_t sum = 0;
  counts.assign(conditional_.size(), 0);
  for (std::size_t k = 0; k < conditional_.size() && remaining > 0; ++k) {
    const auto j = static_cast<std::int64_t>(k) + 2;
    // Every remaining vertex has degree >= j.
    if (sum + j * remaining > target) return false;
    std::int64_t x = rng.binomial(remaining, conditional_[k]);
    counts[k] = x;
    sum += j * x;
    remaining -= x;
  }
  return remaining == 0 && sum == target;
}

ConditionedDraw ConditionedDegreeSampler::draw(Rng& rng, std::int64_t max_tries) const {
  if (max_tries < 1) throw DomainError("max_tries must be positive");
  std::vector<std::int64_t> counts;
  for (std::int64_t attempt_no = 1; attempt_no <= max_tries; ++attempt_no) {
    if (!attempt(rng, counts)) continue;
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(params_.n));
    for (std::size_t k = 0; k < counts.size(); ++k) {
      degrees.insert(degrees.end(), static_cast<std::size_t>(counts[k]), static_cast<int>(k) + 2);
    }
    rng.shuffle(std::span<int>(degrees));
    return {DegreeSequence(std::move(degrees)), attempt_no};
  }
  throw RetryExhausted("conditioned degree sampling: no sequence summing to 2m within max_tries", max_tries, 0);
}

std::int64_t ConditionedDegreeSampler::count_accepted(Rng& rng, std::int64_t attempts) const {
  std::vector<std::int64_t> counts;
  std::int64_t accepted = 0;
  for (std::int64_t i = 0; i < attempts; ++i) accepted += attempt(rng, counts) ? 1 : 0;
  return accepted;
}

DegreeSequence sample_degrees_conditioned(std::int64_t n, std::int64_t m, std::uint64_t seed, std::int64_t max_tries) {
  ConditionedDegreeSampler sampler(n, m);
  Rng rng(seed);
  return sampler.draw(rng, max_tries).degrees;
}

DegreeExpectations degree_expectations(const ModelParams& p) {
  TruncatedPoisson tp(p.lambda_c);
  const double n = static_cast<double>(p.n);
  return {n * tp.pmf(2), n * tp.pmf(3), n * tp.second_factorial_moment() / 2.0};
}

TypicalityReport classify_typical(const DegreeSequence& d, const ModelParams& p, TypicalRegime regime,
                                  double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.25)) throw DomainError("epsilon must lie in (0, 1/4)");
  if (d.empty()) throw DomainError("empty degree sequence");
  if (regime == TypicalRegime::kA && p.r <= 0) throw DomainError("regime (a) requires r > 0");

  TypicalityReport report;
  report.regime = regime;
  report.epsilon = epsilon;
  const double n = static_cast<double>(d.size());
  const double d2 = static_cast<double>(d.count_of(2));
  const double d3 = static_cast<double>(d.count_of(3));
  const double pairs = static_cast<double>(d.sum_pairs());
  const double n_prime = static_cast<double>(d.kernel_vertex_count());
  const double max_degree = d.max_degree();
  report.measured = {{"D2", d2},
                     {"D3", d3},
                     {"sum_pairs", pairs},
                     {"max_degree", max_degree},
                     {"n_prime", n_prime},
                     {"degree_sum", static_cast<double>(d.total())}};
  if (d.total() > 0) report.measured["eta"] = eta_of(d);

  if (d.total() != 2 * p.m) report.violations.emplace_back("degree_sum");
  if (d.min_degree() < 2) report.violations.emplace_back("min_degree");

  if (regime == TypicalRegime::kA) {
    const DegreeExpectations mu = degree_expectations(p);
    report.psi = std::pow(static_cast<double>(p.r), 1.0 - epsilon);
    report.targets = {{"mu2", mu.mu2}, {"mu3", mu.mu3}, {"mu", mu.mu_pairs}};
    const double max_bound = n_prime > 1.0 ? 8.0 * std::log(n_prime) : 0.0;
    report.targets["max_degree_bound"] = max_bound;
    if (std::fabs(d2 - mu.mu2) > report.psi) report.violations.emplace_back("D2");
    if (std::fabs(d3 - mu.mu3) > report.psi) report.violations.emplace_back("D3");
    if (std::fabs(pairs - mu.mu_pairs) > report.psi) report.violations.emplace_back("sum_pairs");
    if (max_degree > max_bound) report.violations.emplace_back("max_degree");
    report.notes.emplace_back(
        "max-degree condition uses 8 ln n'(d) as in the degree-sequence theorem; the c -> 2 discussion "
        "elsewhere quotes 6 ln n");
  } else {
    report.psi = std::pow(n, -epsilon);
    const double max_bound = 6.0 * std::log(n);
    report.targets = {{"eta_bar", p.eta_bar}, {"p_c_n", p.p_c * n}, {"max_degree_bound", max_bound}};
    if (max_degree > max_bound) report.violations.emplace_back("max_degree");
    if (d.total() == 0 || std::fabs(eta_of(d) - p.eta_bar) > report.psi) report.violations.emplace_back("eta");
    if (std::fabs(d2 - p.p_c * n) > n * report.psi) report.violations.emplace_back("D2");
  }
  report.member = report.violations.empty();
  return report;
}

}  // namespace twoconn
