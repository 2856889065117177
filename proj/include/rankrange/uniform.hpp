/** @file uniform.hpp
 *  @brief Uniform-measure case: minimization closed forms, and rank/percentile
 *         maximization on circulant graphs via a constructive Hamiltonian path.
 */
#ifndef RANKRANGE_UNIFORM_HPP_
#define RANKRANGE_UNIFORM_HPP_

#include "rankrange/core.hpp"
#include "rankrange/general.hpp"

namespace rankrange {

/// Circulant graph C_n(s_1..s_l): vertices 0..n-1, edges between vertices
/// differing by +-s_i mod n. Jumps are sorted, distinct, in (0, n/2]; a jump
/// of exactly n/2 contributes a single edge per vertex (the recursion on
/// contracted graphs needs this case).
struct CirculantSpec {
  int n = 0;
  std::vector<int> jumps;

  bool is_connected() const;
  bool has_edge(int a, int b) const;
};

struct UniformMinResult {
  int min_rank = 1;
  Rational min_percentile;
  Partition witness;
};

/// All-singleton partition solves both minimization problems when the measure
/// is uniform and |S*| >= 2: rank 1, percentile 0.5/(n-k+1). Throws CaseError
/// for k <= 1 (singletons would be medium; use the general path) and
/// DomainError when S* = V.
UniformMinResult uniform_min_solutions(const Instance& inst);

/// Hamiltonian path of a connected circulant, built recursively: a single
/// jump with gcd(n, s) = 1 walks (0, s, 2s, ...); otherwise the g1 = gcd(n, s1)
/// cycles of the first jump are contracted, the other jumps map to their
/// induced jumps mod g1, the contraction is solved recursively and each cycle
/// is traversed in +s1 order, spliced through the smallest valid entry vertex.
/// Throws ValidityError when gcd(n, jumps) > 1.
std::vector<int> circulant_hamiltonian_path(const CirculantSpec& spec);

/// Chunks the Hamiltonian path of G \ S* into floor(n'/k) runs of the special
/// subset's size (remainder appended to the last run): every run is medium or
/// large, which is optimal under uniform measure.
RankResult rank_max_uniform_circulant(const Instance& inst, const CirculantSpec& spec, int k);

/// Better of the two chunkings: runs of k+1 (strictly large blocks) versus
/// runs of k (medium blocks), remainder absorbed by the last run either way.
PercentileResult percentile_max_uniform_circulant(const Instance& inst, const CirculantSpec& spec,
                                                  int k);

}  // namespace rankrange

#endif  // RANKRANGE_UNIFORM_HPP_
