#include "twoconn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "twoconn/error.hpp"

namespace twoconn {

std::string_view predicate_name(Predicate p) {
  switch (p) {
    case Predicate::kTwoConnected: return "two-connected";
    case Predicate::kTwoEdgeConnected: return "two-edge-connected";
    case Predicate::kMinDegree2: return "min-degree-2";
    case Predicate::kConnected: return "connected";
    case Predicate::kAll: return "all";
  }
  return "unknown";
}

Predicate parse_predicate(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '_', '-');
  for (Predicate p : {Predicate::kTwoConnected, Predicate::kTwoEdgeConnected, Predicate::kMinDegree2,
                      Predicate::kConnected, Predicate::kAll}) {
    if (key == predicate_name(p)) return p;
  }
  throw DomainError("unknown predicate: " + std::string(name));
}

namespace oracle {

bool connected_without(const SmallGraph& g, std::uint32_t removed) {
  const std::uint32_t all = (g.n == 32) ? ~0u : ((1u << g.n) - 1u);
  const std::uint32_t wanted = all & ~removed;
  if (wanted == 0) return true;
  std::uint32_t seen = 1u << std::countr_zero(wanted);
  std::uint32_t frontier = seen;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint32_t fresh = g.adj[v] & wanted & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == wanted;
}

bool satisfies(const SmallGraph& g, Predicate p) {
  switch (p) {
    case Predicate::kAll:
      return true;
    case Predicate::kConnected:
      return g.n > 0 && connected_without(g, 0);
    case Predicate::kMinDegree2:
      return std::all_of(g.adj.begin(), g.adj.end(), [](std::uint32_t a) { return std::popcount(a) >= 2; });
    case Predicate::kTwoConnected:
      if (g.n < 3 || !connected_without(g, 0)) return false;
      for (int v = 0; v < g.n; ++v) {
        if (!connected_without(g, 1u << v)) return false;
      }
      return true;
    case Predicate::kTwoEdgeConnected: {
      if (g.n == 0 || !connected_without(g, 0)) return false;
      SmallGraph h = g;
      for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
          if (!(g.adj[u] >> v & 1u)) continue;
          h.adj[u] &= ~(1u << v);
          h.adj[v] &= ~(1u << u);
          bool still = connected_without(h, 0);
          h.adj[u] |= 1u << v;
          h.adj[v] |= 1u << u;
          if (!still) return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace oracle

BigInt double_factorial(int k) {
  BigInt out = 1;
  for (int odd = 1; odd < 2 * k; odd += 2) out *= odd;
  return out;
}

BigInt rising_factorial(int base, int k) {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out *= base + i;
  return out;
}

namespace {

// Edge subsets of size `size` among `universe` edges, as bitmasks (Gosper's hack).
template <typename Visit>
void for_each_subset(int universe, int size, Visit visit) {
  if (size == 0) {
    visit(std::uint64_t{0});
    return;
  }
  if (size > universe) return;
  const std::uint64_t limit = std::uint64_t{1} << universe;
  std::uint64_t s = (std::uint64_t{1} << size) - 1;
  while (s < limit) {
    visit(s);
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace

BigInt exact_count(int n, int m, Predicate predicate, bool allow_nine, int threads) {
  if (n < 3) throw DomainError("exact_count requires n >= 3");
  const int cap = allow_nine ? oracle::kMaxVerticesOverride : oracle::kMaxVertices;
  if (n > cap) {
    throw LimitError("exact_count: n = " + std::to_string(n) + " exceeds the enumeration guard of " +
                     std::to_string(cap));
  }
  const int universe = n * (n - 1) / 2;
  if (m < 0 || m > universe) throw DomainError("exact_count: m outside [0, n(n-1)/2]");

  std::vector<std::pair<int, int>> edge_of;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edge_of.emplace_back(u, v);
  }
  auto test = [&](std::uint64_t mask) {
    oracle::SmallGraph g(n);
    while (mask) {
      int e = std::countr_zero(mask);
      mask &= mask - 1;
      g.add_edge(edge_of[e].first, edge_of[e].second);
    }
    return oracle::satisfies(g, predicate);
  };

  if (m == 0) return test(0) ? 1 : 0;

  // Split by the smallest chosen edge; each prefix is enumerated independently.
  std::vector<std::uint64_t> per_prefix(static_cast<std::size_t>(universe), 0);
  auto work = [&](int first, int stride) {
    for (int lead = first; lead < universe; lead += stride) {
      std::uint64_t count = 0;
      const int rest = universe - lead - 1;
      for_each_subset(rest, m - 1, [&](std::uint64_t tail) {
        if (test((tail << (lead + 1)) | (std::uint64_t{1} << lead))) ++count;
      });
      per_prefix[lead] = count;
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  BigInt total = 0;
  for (std::uint64_t c : per_prefix) total += c;
  return total;
}

MatchingCount count_favorable_matchings(const DegreeSequence& d, Predicate predicate) {
  if (d.total() > oracle::kMaxPoints) {
    throw LimitError("pairing enumeration limited to degree sum <= " + std::to_string(oracle::kMaxPoints));
  }
  if (!d.has_even_total()) throw DomainError("degree sum is odd");
  const int n = static_cast<int>(d.size());
  if (n > 32) throw LimitError("pairing enumeration limited to 32 vertices");
  std::vector<int> cell;
  for (int v = 0; v < n; ++v) cell.insert(cell.end(), static_cast<std::size_t>(d[v]), v);
  const int points = static_cast<int>(cell.size());

  oracle::SmallGraph g(n);
  std::vector<char> used(static_cast<std::size_t>(points), 0);
  std::uint64_t favorable = 0;
  // Smallest unmatched point first. A loop or a repeated pair makes every
  // completion non-simple, so those branches are cut immediately.
  auto recurse = [&](auto&& self, int matched) -> void {
    if (matched == points) {
      if (oracle::satisfies(g, predicate)) ++favorable;
      return;
    }
    int p = 0;
    while (used[p]) ++p;
    used[p] = 1;
    for (int q = p + 1; q < points; ++q) {
      if (used[q]) continue;
      const int u = cell[p], v = cell[q];
      if (u == v || (g.adj[u] >> v & 1u)) continue;
      used[q] = 1;
      g.add_edge(u, v);
      self(self, matched + 2);
      g.adj[u] &= ~(1u << v);
      g.adj[v] &= ~(1u << u);
      used[q] = 0;
    }
    used[p] = 0;
  };
  recurse(recurse, 0);
  return {BigInt(favorable), double_factorial(points / 2)};
}

BigInt exact_count_degseq(const DegreeSequence& d, Predicate predicate) {
  MatchingCount mc = count_favorable_matchings(d, predicate);
  BigInt labelings = 1;
  for (int x : d.degrees()) {
    for (int k = 2; k <= x; ++k) labelings *= k;
  }
  if (mc.favorable % labelings != 0) {
    throw InternalError("favorable matchings not divisible by the product of degree factorials");
  }
  return mc.favorable / labelings;
}

Rational exact_U(const DegreeSequence& d) {
  MatchingCount mc = count_favorable_matchings(d, Predicate::kAll);
  return Rational(mc.favorable, mc.total);
}

Rational exact_Uprime(const DegreeSequence& d) {
  MatchingCount mc = count_favorable_matchings(d, Predicate::kTwoConnected);
  return Rational(mc.favorable, mc.total);
}

void for_each_kernel_config(const DegreeSequence& d, const std::function<void(const KernelConfig&)>& visit) {
  if (d.empty() || d.min_degree() < 2) throw DomainError("kernel configuration needs all degrees >= 2");
  if (d.kernel_vertex_count() == 0) throw DomainError("kernel configuration needs a vertex of degree >= 3");
  if (d.kernel_degree_total() % 2 != 0) throw DomainError("degree sum is odd");
  if (d.kernel_degree_total() > kMaxKernelPoints) {
    throw LimitError("kernel enumeration limited to " + std::to_string(kMaxKernelPoints) + " kernel points");
  }
  if (d.count_of(2) > kMaxDegreeTwo) {
    throw LimitError("kernel enumeration limited to " + std::to_string(kMaxDegreeTwo) + " degree-2 vertices");
  }

  std::vector<int> cell, labels, deg2;
  std::vector<int> local(d.size(), -1);
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] >= 3) {
      local[v] = static_cast<int>(labels.size());
      labels.push_back(static_cast<int>(v));
      cell.insert(cell.end(), static_cast<std::size_t>(d[v]), local[v]);
    } else {
      deg2.push_back(static_cast<int>(v));
    }
  }
  const int points = static_cast<int>(cell.size());
  const int kernel_edges = points / 2;
  const int n = static_cast<int>(d.size());

  KernelConfig config;
  std::vector<char> used(static_cast<std::size_t>(points), 0);
  std::vector<int> target(deg2.size(), 0);

  auto emit_orders = [&](auto&& self, int edge) -> void {
    if (edge == kernel_edges) {
      config.pre_kernel = subdivide(config.kernel, config.assignment, n);
      visit(config);
      return;
    }
    auto& list = config.assignment[edge];
    std::sort(list.begin(), list.end());
    do {
      self(self, edge + 1);
    } while (std::next_permutation(list.begin(), list.end()));
  };

  // Every map from degree-2 vertices to kernel edges, base-M counter style.
  auto emit_assignments = [&]() {
    const std::size_t k = deg2.size();
    std::fill(target.begin(), target.end(), 0);
    while (true) {
      config.assignment.assign(static_cast<std::size_t>(kernel_edges), {});
      for (std::size_t i = 0; i < k; ++i) config.assignment[target[i]].push_back(deg2[i]);
      emit_orders(emit_orders, 0);
      std::size_t pos = 0;
      while (pos < k && ++target[pos] == kernel_edges) target[pos++] = 0;
      if (pos == k) break;
    }
  };

  auto match = [&](auto&& self, int matched) -> void {
    if (matched == points) {
      std::vector<Edge> edges;
      for (auto [a, b] : config.points) edges.emplace_back(cell[a], cell[b]);
      config.kernel = Multigraph(labels, std::move(edges));
      emit_assignments();
      return;
    }
    int p = 0;
    while (used[p]) ++p;
    used[p] = 1;
    for (int q = p + 1; q < points; ++q) {
      if (used[q]) continue;
      used[q] = 1;
      config.points.emplace_back(p, q);
      self(self, matched + 2);
      config.points.pop_back();
      used[q] = 0;
    }
    used[p] = 0;
  };
  match(match, 0);
}

Rational exact_prob_2cs(const DegreeSequence& d) {
  std::uint64_t favorable = 0, seen = 0;
  for_each_kernel_config(d, [&](const KernelConfig& config) {
    ++seen;
    const Multigraph& g = config.pre_kernel;
    std::vector<Edge> edges = g.canonical_edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].first == edges[i].second || (i > 0 && edges[i] == edges[i - 1])) return;
    }
    oracle::SmallGraph small(g.vertex_count());
    for (auto [u, v] : edges) small.add_edge(u, v);
    if (oracle::satisfies(small, Predicate::kTwoConnected)) ++favorable;
  });
  const int kernel_edges = static_cast<int>(d.kernel_edge_total());
  BigInt total = double_factorial(kernel_edges) * rising_factorial(kernel_edges, static_cast<int>(d.count_of(2)));
  if (total != seen) throw InternalError("kernel configuration enumeration count mismatch");
  return Rational(BigInt(favorable), total);
}

}  // namespace twoconn
