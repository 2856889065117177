/** @file general.hpp
 *  @brief Solvers valid for arbitrary graphs: greedy rank minimization, the
 *         component lower bound, and the percentile-maximization
 *         2-approximation built on top of an exact rank-maximization solver.
 */
#ifndef RANKRANGE_GENERAL_HPP_
#define RANKRANGE_GENERAL_HPP_

#include <functional>

#include "rankrange/core.hpp"

namespace rankrange {

struct RankResult {
  int rank = 1;
  Partition witness;
};

struct PercentileResult {
  Rational percentile;
  Partition witness;
  bool certified_optimal = false;
};

/// Groups each component of G \ S* containing a large singleton into one
/// block; everything else stays a singleton. Minimizes rank exactly (both
/// conventions agree on the optimum). Empty S* yields rank 1.
RankResult greedy_rank_min(const Instance& inst);

/// 1 + number of components of G \ S* containing a large singleton.
int rank_lower_bound(const Instance& inst);

/// Exact solver for Rank Maximization used as a subroutine: returns a
/// partition maximizing the number of counting blocks under `conv`.
/// StrictAbove stands in for the measure perturbation that forces strictly
/// large blocks only.
using RankMaxStrategy = std::function<Partition(const Instance&, RankConvention)>;

/// Runs the two reduction branches (maximize strictly-large blocks, maximize
/// large-or-medium blocks), absorbs leftovers inside each component, and
/// returns the better percentile. Guaranteed >= half the optimum, and exactly
/// optimal whenever the returned percentile reaches 1/2 (certified_optimal).
PercentileResult percentile_max_2approx(const Instance& inst, const RankMaxStrategy& rank_max);

/// Connected components of G restricted to V \ S*, each sorted, ordered by
/// minimum vertex.
std::vector<VertexSet> free_components(const Instance& inst);

}  // namespace rankrange

#endif  // RANKRANGE_GENERAL_HPP_
