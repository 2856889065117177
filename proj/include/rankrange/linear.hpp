/** @file linear.hpp
 *  @brief Linear-component case: interval-scheduling rank maximization and the
 *         percentile dynamic program (both directions), exact.
 */
#ifndef RANKRANGE_LINEAR_HPP_
#define RANKRANGE_LINEAR_HPP_

#include "rankrange/core.hpp"
#include "rankrange/general.hpp"

namespace rankrange {

enum class Direction { Min, Max };

/// Maximal paths remaining after the special subset is removed. Vertices keep
/// their original ids; each segment lists them in path order, oriented from
/// the endpoint with the smaller id (a deterministic choice).
struct LineInstance {
  std::vector<std::vector<Vertex>> segments;
  // Path of the original graph that contained S*, with the contiguous index
  // range S* occupied there; component -1 when S* is empty.
  int special_component = -1;
  int special_lo = -1;
  int special_hi = -1;
};

/// Splits the paths of G at S*, reindexing densely. Throws CaseError when
/// some component of G is not a simple path.
LineInstance preprocess_remove_special(const Instance& inst);

/// Builds one job per contiguous run whose measure counts under `conv`, runs
/// the earliest-finish-time greedy per segment, and turns selected jobs into
/// blocks (uncovered vertices stay singletons).
RankResult rank_max_linear(const Instance& inst, RankConvention conv);

/// Optimal percentile over partitions into contiguous blocks, via the
/// additive-score DP: per segment, G[j][k] = optimal (l + 0.5 m) over the
/// first j vertices in k blocks; segments combined by convolution; the answer
/// is opt over k of (G + 0.5)/(k + 1). Exact; witness by parent pointers.
PercentileResult percentile_dp_linear(const Instance& inst, Direction direction);

}  // namespace rankrange

#endif  // RANKRANGE_LINEAR_HPP_
