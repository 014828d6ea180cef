#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace twoconn {

// Vertex degrees with the summary statistics used throughout: the counts D_j,
// the kernel vertex count n' (degrees >= 3), and the kernel edge count m'.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees);

  std::span<const int> degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  bool empty() const { return degrees_.empty(); }
  int operator[](std::size_t i) const { return degrees_[i]; }

  std::int64_t total() const { return total_; }
  bool has_even_total() const { return total_ % 2 == 0; }
  /// Half the degree sum. Throws DomainError when the sum is odd.
  std::int64_t edge_count() const;

  /// D_j, the number of vertices of degree j.
  std::int64_t count_of(int j) const;
  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }

  /// n' = number of vertices with degree >= 3.
  std::int64_t kernel_vertex_count() const { return kernel_vertices_; }
  /// m' = half the degree sum over vertices with degree >= 3.
  std::int64_t kernel_edge_total() const { return kernel_total_ / 2; }
  std::int64_t kernel_degree_total() const { return kernel_total_; }

  /// sum_i C(d_i, 2).
  std::int64_t sum_pairs() const { return sum_pairs_; }

  bool operator==(const DegreeSequence& other) const { return degrees_ == other.degrees_; }

 private:
  std::vector<int> degrees_;
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
  std::int64_t kernel_total_ = 0;
  std::int64_t kernel_vertices_ = 0;
  std::int64_t sum_pairs_ = 0;
  int max_degree_ = 0;
  int min_degree_ = 0;
};

/// Whitespace-separated non-negative integers.
DegreeSequence read_degree_sequence(std::istream& in);
void write_degree_sequence(std::ostream& out, const DegreeSequence& d);

}  // namespace twoconn
