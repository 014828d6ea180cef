#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twoconn/degree_sequence.hpp"
#include "twoconn/multigraph.hpp"
#include "twoconn/numeric.hpp"
#include "twoconn/rng.hpp"

namespace twoconn {

/// Pairs of point indices of a perfect matching; each pair is (smaller, larger).
using PointMatching = std::vector<std::pair<int, int>>;

/// Uniform perfect matching on `points` points (must be even).
PointMatching sample_point_matching(int points, Rng& rng);

/// Configuration model: a uniform perfect matching on sum(d) points grouped in
/// cells of sizes d_i, projected to a pseudograph.
Multigraph sample_pairing(const DegreeSequence& d, std::uint64_t seed);
Multigraph sample_pairing(const DegreeSequence& d, Rng& rng);

// Kernel configuration: a pairing on the cells of degree >= 3 plus an ordered
// assignment of the degree-2 vertices to the kernel edges.
struct KernelConfig {
  /// Vertices are the degree >= 3 cells, labelled by their index in d. Edge i is
  /// oriented from the cell of its smaller point to the cell of its larger point.
  Multigraph kernel;
  /// Point pairs behind each kernel edge, in kernel edge order (point indices
  /// count through the degree >= 3 cells only).
  PointMatching points;
  /// assignment[i] lists the degree-2 vertices placed on kernel edge i, in order
  /// from its first endpoint to its second.
  std::vector<std::vector<int>> assignment;
  /// Kernel edges subdivided by the assignment, on all n vertices of d.
  Multigraph pre_kernel;
};

/// Requires min degree 2, some degree >= 3 and an even kernel degree total.
KernelConfig sample_kernel_config(const DegreeSequence& d, std::uint64_t seed);
KernelConfig sample_kernel_config(const DegreeSequence& d, Rng& rng, bool build_pre_kernel = true);

/// Subdivides the kernel edges as listed by `assignment`.
Multigraph subdivide(const Multigraph& kernel, const std::vector<std::vector<int>>& assignment,
                     int vertex_count);

/// n independent TP(2, lambda) draws by table inversion.
DegreeSequence sample_degrees(std::int64_t n, double lambda, std::uint64_t seed);

struct ConditionedDraw {
  DegreeSequence degrees;
  std::int64_t attempts = 0;
};

// Exact rejection sampler for n i.i.d. TP(2, lambda_c) degrees conditioned on
// summing to 2m. One attempt draws the multinomial degree counts (the
// sufficient statistic of the i.i.d. vector); an accepted count vector is spread
// over the vertices by a uniform shuffle.
class ConditionedDegreeSampler {
 public:
  ConditionedDegreeSampler(std::int64_t n, std::int64_t m);

  const ModelParams& params() const { return params_; }

  /// One attempt; on success fills `counts` (counts[k] = number of vertices of
  /// degree k + 2) and returns true.
  bool attempt(Rng& rng, std::vector<std::int64_t>& counts) const;

  /// Throws RetryExhausted after max_tries failed attempts.
  ConditionedDraw draw(Rng& rng, std::int64_t max_tries) const;

  /// Number of accepted attempts among `attempts`.
  std::int64_t count_accepted(Rng& rng, std::int64_t attempts) const;

 private:
  ModelParams params_;
  std::vector<double> conditional_;  // P(Y = j | Y >= j), from j = 2
};

inline constexpr std::int64_t kDefaultMaxTries = 100'000'000;

DegreeSequence sample_degrees_conditioned(std::int64_t n, std::int64_t m, std::uint64_t seed,
                                          std::int64_t max_tries = kDefaultMaxTries);

enum class TypicalRegime { kA, kB };

struct TypicalityReport {
  TypicalRegime regime = TypicalRegime::kB;
  bool member = false;
  std::vector<std::string> violations;
  std::map<std::string, double> measured;
  std::map<std::string, double> targets;
  double psi = 0.0;
  double epsilon = 0.0;
  std::vector<std::string> notes;
};

/// Typical-set membership. Regime a (c near 2): D_2, D_3 and sum C(d_i,2) within
/// psi = r^(1-eps) of their truncated-Poisson expectations and
/// max d_i <= 8 ln n'. Regime b (bounded c): max d_i <= 6 ln n,
/// |eta(d) - eta_bar| <= n^-eps and |D_2 - p_c n| <= n^(1-eps).
TypicalityReport classify_typical(const DegreeSequence& d, const ModelParams& p, TypicalRegime regime,
                                  double epsilon = 0.1);

/// n E[D_2], n E[D_3] and n E[sum C(Y_i, 2)] under TP(2, lambda_c).
struct DegreeExpectations {
  double mu2 = 0.0;
  double mu3 = 0.0;
  double mu_pairs = 0.0;
};
DegreeExpectations degree_expectations(const ModelParams& p);

}  // namespace twoconn
