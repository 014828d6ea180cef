#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twoconn/degree_sequence.hpp"
#include "twoconn/models.hpp"

namespace twoconn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Predicate { kTwoConnected, kTwoEdgeConnected, kMinDegree2, kConnected, kAll };

std::string_view predicate_name(Predicate p);
/// Accepts "two-connected" / "two_connected" style names; throws DomainError otherwise.
Predicate parse_predicate(std::string_view name);

namespace oracle {

inline constexpr int kMaxVertices = 8;
inline constexpr int kMaxVerticesOverride = 9;
inline constexpr int kMaxPoints = 18;

// Simple graph on at most 32 vertices as adjacency bitmasks. The predicates are
// the literal definitions (delete each vertex / edge and test connectivity) and
// serve as an independent check on the graph algorithms.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  explicit SmallGraph(int vertices) : n(vertices), adj(vertices, 0) {}
  void add_edge(int u, int v) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
};

bool connected_without(const SmallGraph& g, std::uint32_t removed);
bool satisfies(const SmallGraph& g, Predicate p);

}  // namespace oracle

/// Number of (n,m)-graphs on [n] satisfying the predicate, by enumerating every
/// edge subset. 3 <= n <= 8, or n = 9 with allow_nine.
BigInt exact_count(int n, int m, Predicate predicate, bool allow_nine = false, int threads = 1);

struct MatchingCount {
  BigInt favorable;
  BigInt total;  ///< (sum d - 1)!!
};

/// Perfect matchings of the pairing model on d whose projection is simple and
/// satisfies the predicate. sum d <= 18.
MatchingCount count_favorable_matchings(const DegreeSequence& d, Predicate predicate);

/// Graphs with degree sequence d satisfying the predicate: favorable matchings
/// divided by prod d_i! (throws InternalError if the division is not exact).
BigInt exact_count_degseq(const DegreeSequence& d, Predicate predicate);

/// Probability that the pairing model on d is simple.
Rational exact_U(const DegreeSequence& d);
/// Probability that the pairing model on d is simple and 2-connected.
Rational exact_Uprime(const DegreeSequence& d);

inline constexpr int kMaxKernelPoints = 12;
inline constexpr int kMaxDegreeTwo = 4;

/// Calls `visit` for every (kernel matching, ordered assignment) outcome of the
/// kernel configuration model on d. Assignments are enumerated as a map from
/// each degree-2 vertex to a kernel edge followed by every ordering of each
/// edge's list, independent of the sequential-insertion sampler.
void for_each_kernel_config(const DegreeSequence& d, const std::function<void(const KernelConfig&)>& visit);

/// Exact probability that the kernel configuration model yields a simple,
/// 2-connected pre-kernel. sum of degrees >= 3 is at most 12, D_2 <= 4.
Rational exact_prob_2cs(const DegreeSequence& d);

/// (2k-1)!!
BigInt double_factorial(int k);
/// M (M+1) ... (M+k-1)
BigInt rising_factorial(int base, int k);

}  // namespace twoconn
