/** @file complete.hpp
 *  @brief Complete-graph case: closed-form minimization and the paired /
 *         seeded intermediate-element approximation for maximization.
 */
#ifndef RANKRANGE_COMPLETE_HPP_
#define RANKRANGE_COMPLETE_HPP_

#include "rankrange/core.hpp"
#include "rankrange/general.hpp"

namespace rankrange {

/// Tier of a single free element relative to mu(S*) and, for the two tiny
/// refinements, a per-iteration threshold c with mu(S*)/2 <= c < mu(S*):
///   Intermediate       mu(S*)/2 <= v < mu(S*)
///   Tiny               v < mu(S*)/2, split into
///     Subintermediate     mu(S*)-c  <= v < mu(S*)/2
///     Subsubintermediate  (mu(S*)-c)/2 <= v < mu(S*)-c
///     OtherTiny           v < (mu(S*)-c)/2
enum class ElementTier {
  LargeSingleton,
  MediumSingleton,
  Intermediate,
  Subintermediate,
  Subsubintermediate,
  OtherTiny,
};

ElementTier classify_element(const Rational& value, const Rational& special_value,
                             const Rational& threshold_c);

/// 1 when no singleton is large, otherwise 2.
int min_rank_complete(const Instance& inst);

/// Closed-form minimum percentile: merge all large singletons into one block,
/// and fold the medium singletons into it exactly when that lowers the
/// percentile (l0 >= 1 and s0 >= 1, or s0 >= 2 and m0(s0-1) >= 2 s0 + 1).
PercentileResult min_percentile_complete(const Instance& inst);

/// Rank maximization approximation: singles out large/medium elements, pairs
/// the smallest intermediates, completes the seeded largest intermediates
/// with sub/subsubintermediate tinies over an (i,x,y,z) sweep, then greedily
/// packs leftover tinies. Guarantee: OPT <= (3/2) ALG + 1.
RankResult rank_max_complete_approx(const Instance& inst);

/// Strict-threshold variant counting only blocks with mu > mu(S*); stands in
/// for the perturbed-measure preprocessing of the percentile reduction.
RankResult rank_max_complete_approx_strict(const Instance& inst);

/// Percentile maximization: single small/medium block when the free mass is
/// below/at mu(S*); otherwise strict rank maximization with every leftover
/// folded into one large block.
PercentileResult percentile_max_complete_approx(const Instance& inst);

}  // namespace rankrange

#endif  // RANKRANGE_COMPLETE_HPP_
