#include "twoconn/degree_sequence.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "twoconn/error.hpp"

namespace twoconn {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) return;
  min_degree_ = degrees_.front();
  for (int x : degrees_) {
    if (x < 0) throw DomainError("degrees must be non-negative");
    max_degree_ = std::max(max_degree_, x);
    min_degree_ = std::min(min_degree_, x);
    total_ += x;
    sum_pairs_ += static_cast<std::int64_t>(x) * (x - 1) / 2;
    if (x >= 3) {
      kernel_total_ += x;
      ++kernel_vertices_;
    }
  }
  counts_.assign(static_cast<std::size_t>(max_degree_) + 1, 0);
  for (int x : degrees_) ++counts_[x];
}

std::int64_t DegreeSequence::edge_count() const {
  if (!has_even_total()) throw DomainError("degree sum is odd");
  return total_ / 2;
}

std::int64_t DegreeSequence::count_of(int j) const {
  if (j < 0 || j >= static_cast<int>(counts_.size())) return 0;
  return counts_[j];
}

DegreeSequence read_degree_sequence(std::istream& in) {
  std::vector<int> degrees;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      throw DomainError("degree file: not an integer: " + token);
    }
    if (used != token.size() || value < 0) throw DomainError("degree file: invalid degree: " + token);
    degrees.push_back(static_cast<int>(value));
  }
  return DegreeSequence(std::move(degrees));
}

void write_degree_sequence(std::ostream& out, const DegreeSequence& d) {
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? " " : "") << d[i];
  out << '\n';
}

}  // namespace twoconn
