#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace twoconn {

using Edge = std::pair<int, int>;

// Labelled pseudograph: loops are (v, v), parallel edges are repeated pairs.
// Vertices are 0..vertex_count-1; `labels` maps them back to the vertex ids of
// the graph they were extracted from (identity for freshly built graphs).
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);
  Multigraph(int vertex_count, std::vector<Edge> edges);
  Multigraph(std::vector<int> labels, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> labels() const { return labels_; }
  int label(int v) const { return labels_[v]; }

  void add_edge(int u, int v);

  /// A loop contributes 2.
  std::vector<int> degrees() const;

  /// Edges with endpoints ordered (min, max), sorted.
  std::vector<Edge> canonical_edges() const;

  /// Equal vertex labels and equal canonical edge multisets.
  bool operator==(const Multigraph& other) const;

 private:
  std::vector<int> labels_;
  std::vector<Edge> edges_;
};

// Compressed incidence lists; slot k of vertex v holds (neighbour, edge id).
// A loop appears twice in its vertex's list.
class Adjacency {
 public:
  explicit Adjacency(const Multigraph& g);

  int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const int> neighbours(int v) const {
    return {neighbours_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
  }
  std::span<const int> edge_ids(int v) const {
    return {edge_ids_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
  }

 private:
  std::vector<int> offsets_;
  std::vector<int> neighbours_;
  std::vector<int> edge_ids_;
};

/// Maximal subgraph of minimum degree >= 2 (loops count twice). Survivors keep
/// their labels; the result may be empty.
Multigraph two_core(const Multigraph& g);

/// Two-core without its components that are plain cycles.
Multigraph pre_kernel(const Multigraph& g);

/// Pre-kernel with every maximal path through degree-2 vertices contracted to
/// one edge. Minimum degree of the result is at least 3.
Multigraph kernel(const Multigraph& g);

bool is_connected(const Multigraph& g);

/// At least three vertices, connected, and no cut vertex.
bool is_two_connected(const Multigraph& g);

/// Connected with no bridge; a single vertex counts as 2-edge-connected and the
/// empty graph does not.
bool is_two_edge_connected(const Multigraph& g);

/// No loops and no parallel edges.
bool is_simple(const Multigraph& g);

/// Edge-list text: "n m" then one "u v" line per edge, 0-based.
void write_edge_list(std::ostream& out, const Multigraph& g);
Multigraph read_edge_list(std::istream& in);

}  // namespace twoconn
