#include "twoconn/multigraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "twoconn/error.hpp"

namespace twoconn {

Multigraph::Multigraph(int vertex_count) : labels_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  std::iota(labels_.begin(), labels_.end(), 0);
}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges) : Multigraph(vertex_count) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) add_edge(u, v);
}

Multigraph::Multigraph(std::vector<int> labels, std::vector<Edge> edges) : labels_(std::move(labels)) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) add_edge(u, v);
}

void Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  }
  edges_.emplace_back(u, v);
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(labels_.size(), 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<Edge> Multigraph::canonical_edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_) out.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

bool Multigraph::operator==(const Multigraph& other) const {
  return labels_ == other.labels_ && canonical_edges() == other.canonical_edges();
}

Adjacency::Adjacency(const Multigraph& g) : offsets_(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {
  for (auto [u, v] : g.edges()) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  neighbours_.resize(offsets_.back());
  edge_ids_.resize(offsets_.back());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  int id = 0;
  for (auto [u, v] : g.edges()) {
    neighbours_[fill[u]] = v;
    edge_ids_[fill[u]++] = id;
    neighbours_[fill[v]] = u;
    edge_ids_[fill[v]++] = id;
    ++id;
  }
}

namespace {

// Sub-multigraph on the vertices with keep[v], relabelled compactly.
Multigraph induced(const Multigraph& g, const std::vector<char>& keep) {
  std::vector<int> index(g.vertex_count(), -1);
  std::vector<int> labels;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) {
      index[v] = static_cast<int>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (keep[u] && keep[v]) edges.emplace_back(index[u], index[v]);
  }
  return Multigraph(std::move(labels), std::move(edges));
}

// Component id per vertex, by BFS.
std::vector<int> components(const Adjacency& adj, int& count) {
  const int n = adj.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int w : adj.neighbours(queue[head])) {
        if (comp[w] < 0) {
          comp[w] = count;
          queue.push_back(w);
        }
      }
    }
    ++count;
  }
  return comp;
}

struct DfsSummary {
  int reached = 0;
  bool articulation = false;
  bool bridge = false;
};

// Iterative low-link DFS from vertex 0. Only the tree edge itself is skipped
// when returning to the parent, so parallel edges act as back edges. Loops
// are ignored.
DfsSummary low_link(const Adjacency& adj) {
  DfsSummary out;
  const int n = adj.vertex_count();
  if (n == 0) return out;
  std::vector<int> disc(n, -1), low(n, 0);
  struct Frame {
    int v;
    int parent_edge;
    int slot;
  };
  std::vector<Frame> stack;
  int timer = 0;
  int root_children = 0;
  disc[0] = low[0] = timer++;
  stack.push_back({0, -1, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = adj.neighbours(f.v);
    auto ids = adj.edge_ids(f.v);
    if (f.slot < static_cast<int>(nbrs.size())) {
      int w = nbrs[f.slot];
      int e = ids[f.slot];
      ++f.slot;
      if (e == f.parent_edge || w == f.v) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        if (f.v == 0) ++root_children;
        stack.push_back({w, e, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) break;
    int parent = stack.back().v;
    low[parent] = std::min(low[parent], low[done.v]);
    if (low[done.v] > disc[parent]) out.bridge = true;
    if (parent != 0 && low[done.v] >= disc[parent]) out.articulation = true;
  }
  if (root_children > 1) out.articulation = true;
  out.reached = timer;
  return out;
}

}  // namespace

Multigraph two_core(const Multigraph& g) {
  const int n = g.vertex_count();
  Adjacency adj(g);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = adj.degree(v);
  std::vector<char> alive(n, 1);
  std::vector<char> edge_gone(g.edge_count(), 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (deg[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    auto nbrs = adj.neighbours(v);
    auto ids = adj.edge_ids(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (edge_gone[ids[k]]) continue;
      edge_gone[ids[k]] = 1;
      int w = nbrs[k];
      if (w != v && alive[w] && --deg[w] == 1) queue.push_back(w);
    }
  }
  return induced(g, alive);
}

Multigraph pre_kernel(const Multigraph& g) {
  Multigraph core = two_core(g);
  Adjacency adj(core);
  int count = 0;
  std::vector<int> comp = components(adj, count);
  std::vector<char> has_branch(count, 0);
  for (int v = 0; v < core.vertex_count(); ++v) {
    if (adj.degree(v) != 2) has_branch[comp[v]] = 1;
  }
  std::vector<char> keep(core.vertex_count());
  for (int v = 0; v < core.vertex_count(); ++v) keep[v] = has_branch[comp[v]];
  return induced(core, keep);
}

Multigraph kernel(const Multigraph& g) {
  Multigraph pk = pre_kernel(g);
  Adjacency adj(pk);
  const int n = pk.vertex_count();
  std::vector<int> index(n, -1);
  std::vector<int> labels;
  for (int v = 0; v < n; ++v) {
    if (adj.degree(v) >= 3) {
      index[v] = static_cast<int>(labels.size());
      labels.push_back(pk.label(v));
    }
  }
  std::vector<char> used(pk.edge_count(), 0);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) continue;
    auto nbrs = adj.neighbours(v);
    auto ids = adj.edge_ids(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      int e = ids[k];
      if (used[e]) continue;
      used[e] = 1;
      int cur = nbrs[k];
      int via = e;
      // Walk through degree-2 vertices until the next branch vertex.
      while (index[cur] < 0) {
        auto cn = adj.neighbours(cur);
        auto ci = adj.edge_ids(cur);
        if (cn.size() != 2) throw InternalError("kernel: path vertex without degree 2");
        int slot = (ci[0] == via) ? 1 : 0;
        via = ci[slot];
        if (used[via]) throw InternalError("kernel: path revisits an edge");
        used[via] = 1;
        cur = cn[slot];
      }
      edges.emplace_back(index[v], index[cur]);
    }
  }
  return Multigraph(std::move(labels), std::move(edges));
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return false;
  Adjacency adj(g);
  int count = 0;
  components(adj, count);
  return count == 1;
}

bool is_two_connected(const Multigraph& g) {
  if (g.vertex_count() < 3) return false;
  Adjacency adj(g);
  DfsSummary s = low_link(adj);
  return s.reached == g.vertex_count() && !s.articulation;
}

bool is_two_edge_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return false;
  Adjacency adj(g);
  DfsSummary s = low_link(adj);
  return s.reached == g.vertex_count() && !s.bridge;
}

bool is_simple(const Multigraph& g) {
  std::vector<Edge> edges = g.canonical_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first == edges[i].second) return false;
    if (i > 0 && edges[i] == edges[i - 1]) return false;
  }
  return true;
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Multigraph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw DomainError("edge list: bad header");
  Multigraph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw DomainError("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge list: vertex out of range");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

}  // namespace twoconn
