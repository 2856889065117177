/** @file equivalence.hpp
 *  @brief Equivalence-class variant: admissible blocks are singletons and
 *         whole classes; all four optimization problems are polynomial here.
 */
#ifndef RANKRANGE_EQUIVALENCE_HPP_
#define RANKRANGE_EQUIVALENCE_HPP_

#include "rankrange/general.hpp"
#include "rankrange/linear.hpp"  // Direction
#include "rankrange/oracle.hpp"

namespace rankrange {

/// Carrier instance plus a partition of V \ S* into equivalence classes.
/// Rank and percentile are computed from block profiles; the carrier graph
/// contributes measures and S* only.
struct EquivalenceInstance {
  Instance base;
  std::vector<VertexSet> classes;

  /// Validates that classes are nonempty, disjoint and cover V \ S*.
  EquivalenceInstance(Instance b, std::vector<VertexSet> cls);
};

/// Classes containing a strictly large element become whole-class blocks
/// (their sums are large and unavoidable); everything else stays a singleton.
RankResult eq_rank_min(const EquivalenceInstance& inst);

/// A class becomes one block iff at most one of its elements counts under
/// AtLeast; with two or more counting elements the singletons win.
RankResult eq_rank_max(const EquivalenceInstance& inst);

/// Starts from all singletons and repeatedly merges the not-yet-merged class
/// whose profile fraction (l + 0.5m - 1)/(l + m + s - 1) is most extreme in
/// the improving direction, until no merge qualifies.
PercentileResult eq_percentile_opt(const EquivalenceInstance& inst, Direction direction);

/// Exhaustive optimum over the 2^(number of classes) admissible partitions.
OracleResult eq_bruteforce(const EquivalenceInstance& inst, Objective objective);

}  // namespace rankrange

#endif  // RANKRANGE_EQUIVALENCE_HPP_
