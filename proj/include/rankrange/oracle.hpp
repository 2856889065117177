/** @file oracle.hpp
 *  @brief Exhaustive ground-truth solvers over all valid partitions.
 *
 *  The enumeration grows the block of the least unassigned vertex through its
 *  adjacency frontier, so every emitted block is connected by construction and
 *  every partition of V \ S* into connected blocks appears exactly once, in a
 *  canonical order (blocks sorted by their minimum element). No pruning, no
 *  symmetry reduction: this module is the auditable reference the polynomial
 *  solvers are tested against.
 */
#ifndef RANKRANGE_ORACLE_HPP_
#define RANKRANGE_ORACLE_HPP_

#include <cstdint>
#include <functional>

#include "rankrange/core.hpp"

namespace rankrange {

enum class Objective { MinRank, MaxRank, MinPercentile, MaxPercentile };

/// Which family of admissible partitions an exhaustive run ranges over.
/// Constraints other than Any are implemented by the corresponding variant
/// module's own brute-force entry points; this enum names them for dispatch.
enum class PartitionConstraint {
  Any,
  EquivalenceClasses,
  HierarchyAntichain,
  GridRectangles,
  GridHierarchicalRectangles,
};

inline constexpr int kDefaultOracleLimit = 12;

struct OracleResult {
  Rational best_value;      // rank stored as an integer-valued rational
  Partition witness;
  std::uint64_t explored = 0;

  int rank() const { return static_cast<int>(best_value.num()); }
};

/// Invokes `visit` for every partition of V \ S* into connected blocks, in
/// canonical order. Stops early when `visit` returns false. Throws SizeError
/// when |V \ S*| exceeds `limit`.
void enumerate_valid_partitions(const Instance& inst,
                                const std::function<bool(const Partition&)>& visit,
                                int limit = kDefaultOracleLimit);

std::uint64_t count_valid_partitions(const Instance& inst, int limit = kDefaultOracleLimit);

/// Optimum of `objective` over every valid partition; ties keep the first
/// witness in canonical enumeration order. Percentile objectives skip the
/// empty partition (c = 0) and throw DomainError when no partition has a
/// block.
OracleResult exact_optimum(const Instance& inst, Objective objective, RankConvention conv,
                           int limit = kDefaultOracleLimit);

/// Convenience: picks the convention the objective's problem statement uses
/// (StrictAbove for minimization, AtLeast for maximization).
RankConvention default_convention(Objective objective);

}  // namespace rankrange

#endif  // RANKRANGE_ORACLE_HPP_
