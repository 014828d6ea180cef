#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "twoconn/error.hpp"
#include "twoconn/models.hpp"
#include "twoconn/multigraph.hpp"
#include "twoconn/oracle.hpp"

using namespace twoconn;

namespace {

Multigraph cycle(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph path(int n) {
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph complete(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Multigraph bowtie() { return Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

// Two vertices joined by three paths with 1, 2 and 0 internal vertices.
Multigraph theta() { return Multigraph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 1}}); }

// Reference predicates straight from the definitions, on arbitrary pseudographs.
bool connected_after(const Multigraph& g, int removed_vertex, int removed_edge) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  auto edges = g.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (e == removed_edge) continue;
    auto [u, v] = edges[e];
    if (u == removed_vertex || v == removed_vertex) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v) {
    if (v == removed_vertex) continue;
    ++alive;
    if (start < 0) start = v;
  }
  if (alive == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

bool ref_two_connected(const Multigraph& g) {
  if (g.vertex_count() < 3 || !connected_after(g, -1, -1)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!connected_after(g, v, -1)) return false;
  return true;
}

bool ref_two_edge_connected(const Multigraph& g) {
  if (g.vertex_count() < 1 || !connected_after(g, -1, -1)) return false;
  for (int e = 0; e < static_cast<int>(g.edge_count()); ++e)
    if (!connected_after(g, -1, e)) return false;
  return true;
}

Multigraph random_pseudograph(std::mt19937_64& gen, int n, int m) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  Multigraph g(n);
  for (int i = 0; i < m; ++i) g.add_edge(pick(gen), pick(gen));
  return g;
}

std::vector<int> sorted_degrees(const Multigraph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("degrees count loops twice") {
  const Multigraph g(2, {{0, 0}, {0, 1}, {0, 1}});
  CHECK(g.degrees() == std::vector<int>{4, 2});
}

TEST_CASE("equality compares canonical edge lists") {
  CHECK(Multigraph(3, {{0, 1}, {2, 1}}) == Multigraph(3, {{1, 2}, {1, 0}}));
  CHECK_FALSE(Multigraph(3, {{0, 1}, {0, 1}}) == Multigraph(3, {{0, 1}}));
}

TEST_CASE("two_core examples") {
  CHECK(two_core(path(3)).vertex_count() == 0);
  Multigraph tadpole(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  const Multigraph core = two_core(tadpole);
  CHECK(core.vertex_count() == 3);
  CHECK(core.edge_count() == 3);
  CHECK(std::vector<int>(core.labels().begin(), core.labels().end()) == std::vector<int>{0, 1, 2});
  CHECK(two_core(complete(5)) == complete(5));
  CHECK(two_core(bowtie()) == bowtie());
}

TEST_CASE("pre_kernel examples") {
  Multigraph both(7);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}})
    both.add_edge(u, v);
  const Multigraph pk = pre_kernel(both);
  CHECK(pk.vertex_count() == 4);
  CHECK(pk.edge_count() == 6);
  CHECK(std::vector<int>(pk.labels().begin(), pk.labels().end()) == std::vector<int>{3, 4, 5, 6});
  CHECK(pre_kernel(cycle(6)).vertex_count() == 0);
  CHECK(pre_kernel(theta()) == theta());
}

TEST_CASE("kernel examples") {
  const Multigraph k = kernel(theta());
  CHECK(k.vertex_count() == 2);
  CHECK(k.edge_count() == 3);
  CHECK(k.canonical_edges() == std::vector<Edge>{{0, 1}, {0, 1}, {0, 1}});
  CHECK(kernel(complete(4)) == complete(4));
  // A cycle hanging off a degree-3 vertex becomes a loop.
  const Multigraph lollipop(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 3}});
  const Multigraph lk = kernel(lollipop);
  CHECK(lk.vertex_count() == 2);
  CHECK(lk.canonical_edges() == std::vector<Edge>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("kernel has minimum degree 3 on random inputs") {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 500; ++t) {
    const Multigraph g = random_pseudograph(gen, 12, 16);
    const Multigraph k = kernel(g);
    for (int d : k.degrees()) CHECK(d >= 3);
    CHECK(two_core(two_core(g)) == two_core(g));
  }
}

TEST_CASE("connectivity examples") {
  CHECK(is_two_connected(cycle(3)));
  CHECK_FALSE(is_two_connected(bowtie()));
  CHECK(is_two_edge_connected(bowtie()));
  for (int n = 3; n < 9; ++n) {
    CHECK(is_two_connected(cycle(n)));
    CHECK_FALSE(is_two_connected(path(n)));
    CHECK(is_two_edge_connected(cycle(n)));
    CHECK_FALSE(is_two_edge_connected(path(n)));
  }
  CHECK(is_two_edge_connected(Multigraph(2, {{0, 1}, {0, 1}})));
  CHECK_FALSE(is_two_edge_connected(Multigraph(2, {{0, 1}})));
  CHECK_FALSE(is_two_connected(Multigraph(2, {{0, 1}, {0, 1}, {0, 1}})));
  CHECK(is_two_edge_connected(Multigraph(1, {{0, 0}})));
  CHECK(is_two_edge_connected(Multigraph(1)));
  CHECK_FALSE(is_two_connected(Multigraph(1, {{0, 0}})));
  CHECK_FALSE(is_two_edge_connected(Multigraph(0)));
  CHECK_FALSE(is_connected(Multigraph(0)));
  // A loop does not rescue a cut vertex, and a double edge is not a bridge.
  CHECK_FALSE(is_two_connected(Multigraph(3, {{0, 1}, {1, 2}, {1, 1}})));
  CHECK(is_two_edge_connected(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}})));
  CHECK_FALSE(is_two_connected(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}})));
}

TEST_CASE("is_simple") {
  CHECK(is_simple(cycle(3)));
  CHECK_FALSE(is_simple(Multigraph(3, {{0, 1}, {1, 2}, {2, 2}})));
  CHECK_FALSE(is_simple(kernel(theta())));
}

TEST_CASE("predicates agree with the definitions on random pseudographs") {
  std::mt19937_64 gen(17);
  for (int t = 0; t < 4000; ++t) {
    const int n = 1 + static_cast<int>(gen() % 9);
    const int m = static_cast<int>(gen() % 16);
    const Multigraph g = random_pseudograph(gen, n, m);
    CHECK(is_two_connected(g) == ref_two_connected(g));
    CHECK(is_two_edge_connected(g) == ref_two_edge_connected(g));
    CHECK(is_connected(g) == connected_after(g, -1, -1));
  }
}

TEST_CASE("predicates agree with the bitmask oracle on every graph with at most 6 vertices") {
  for (int n = 3; n <= 6; ++n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::uint32_t subsets = 1u << pairs.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      Multigraph g(n);
      oracle::SmallGraph s(n);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1u) {
          g.add_edge(pairs[e].first, pairs[e].second);
          s.add_edge(pairs[e].first, pairs[e].second);
        }
      }
      const bool two = is_two_connected(g);
      const bool two_edge = is_two_edge_connected(g);
      if (two != oracle::satisfies(s, Predicate::kTwoConnected)) FAIL("2-connected mismatch");
      if (two_edge != oracle::satisfies(s, Predicate::kTwoEdgeConnected)) FAIL("2-edge-connected mismatch");
      if (two && !two_edge) FAIL("2-connected graph that is not 2-edge-connected");
    }
  }
}

TEST_CASE("kernel of a subdivided kernel configuration recovers the kernel") {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    std::vector<int> degrees;
    const int n = 4 + static_cast<int>(rng.below(40));
    for (int i = 0; i < n; ++i) degrees.push_back(2 + static_cast<int>(rng.below(4)));
    if (degrees[0] < 3) degrees[0] = 3;
    int kernel_sum = 0;
    for (int d : degrees)
      if (d >= 3) kernel_sum += d;
    if (kernel_sum % 2) degrees[0] += 1;
    const DegreeSequence d(degrees);
    const KernelConfig config = sample_kernel_config(d, rng);
    const Multigraph& pk = config.pre_kernel;
    CHECK(pk.degrees() == std::vector<int>(degrees.begin(), degrees.end()));
    CHECK(pre_kernel(pk) == pk);
    const Multigraph k = kernel(pk);
    CHECK(static_cast<std::int64_t>(k.edge_count()) == d.kernel_edge_total());
    CHECK(static_cast<std::int64_t>(k.edge_count()) == d.edge_count() - d.count_of(2));
    std::vector<int> big;
    for (int x : degrees)
      if (x >= 3) big.push_back(x);
    std::sort(big.begin(), big.end());
    CHECK(sorted_degrees(k) == big);
    CHECK(k == config.kernel);
  }
}

TEST_CASE("edge-list text round trip") {
  const Multigraph g(4, {{0, 0}, {0, 1}, {0, 1}, {2, 3}});
  std::stringstream s;
  write_edge_list(s, g);
  CHECK(s.str() == "4 4\n0 0\n0 1\n0 1\n2 3\n");
  CHECK(read_edge_list(s) == g);
  std::stringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad), DomainError);
  std::stringstream range("2 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(range), DomainError);
}
