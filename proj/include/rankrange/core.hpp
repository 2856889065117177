/** @file core.hpp
 *  @brief Domain model: instances, partitions, block classification, rank and
 *         percentile evaluation.
 *
 *  An Instance is a similarity graph over vertices 0..n-1 with a strictly
 *  positive rational measure on each vertex and a distinguished connected
 *  subset (the special subset). A Partition lists the non-special blocks; the
 *  special subset, when nonempty, is an implicit additional block. A partition
 *  is valid when every block induces a connected subgraph.
 */
#ifndef RANKRANGE_CORE_HPP_
#define RANKRANGE_CORE_HPP_

#include <cstdint>
#include <vector>

#include "rankrange/errors.hpp"
#include "rankrange/rational.hpp"

namespace rankrange {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // kept sorted, unique

enum class SubsetClass { Large, Medium, Small };

enum class RankConvention {
  StrictAbove,  // rank counts blocks with mu(S_i) >  mu(S*)  (minimization)
  AtLeast,      // rank counts blocks with mu(S_i) >= mu(S*)  (maximization)
};

struct Profile {
  int large = 0;
  int medium = 0;
  int small = 0;
  int blocks() const { return large + medium + small; }
};

enum class CombineEffect { Decreases, Increases, Neutral, Inadmissible };

class Instance {
 public:
  /// Builds an instance; edges are stored symmetrically, self loops dropped
  /// (similarity is reflexive, so they carry no information).
  /// Every measure value must be > 0 and the special set connected or empty.
  Instance(int n, std::vector<std::pair<Vertex, Vertex>> edges, std::vector<Rational> mu,
           VertexSet special);

  int n() const { return n_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  const Rational& mu(Vertex v) const { return mu_[v]; }
  const VertexSet& special() const { return special_; }
  bool is_special(Vertex v) const { return special_mask_[v]; }
  const Rational& special_value() const { return special_value_; }

  Rational subset_value(const VertexSet& s) const;

  /// Vertices outside the special subset, ascending.
  VertexSet free_vertices() const;

  /// True iff G restricted to `s` is connected; singletons yes, empty no.
  bool is_connected_subset(const VertexSet& s) const;

  bool is_complete() const;

  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

 private:
  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Rational> mu_;
  VertexSet special_;
  std::vector<char> special_mask_;
  Rational special_value_;
};

struct Partition {
  std::vector<VertexSet> blocks;   // non-special blocks, each sorted
  bool includes_special = true;    // S* is a distinguished extra block when nonempty

  int block_count() const { return static_cast<int>(blocks.size()); }
};

/// Classifies a nonempty subset S != S* by comparing its measure to mu(S*).
SubsetClass classify_subset(const Instance& inst, const VertexSet& s);

SubsetClass classify_value(const Rational& value, const Rational& special_value);

/// Structural validity: blocks nonempty, pairwise disjoint, together with S*
/// covering V, and every block connected.
bool is_valid_partition(const Instance& inst, const Partition& p);

/// Throws ValidityError with a reason when the partition is not valid.
void require_valid_partition(const Instance& inst, const Partition& p);

Profile profile_of(const Instance& inst, const Partition& p);

/// 1 + number of blocks counting under the convention. Requires a valid
/// partition and nonempty S*.
int rank_of(const Instance& inst, const Partition& p, RankConvention conv);

int rank_of_profile(const Profile& prof, RankConvention conv);

/// (l + .5 m + .5) / (c + 1) exactly; requires c >= 1 and nonempty S*.
Rational percentile_of(const Instance& inst, const Partition& p);

Rational percentile_of_profile(const Profile& prof);

/// The merge criterion behind every percentile optimizer: merging blocks with
/// profile `prof` into one connected block changes the percentile downward
/// exactly when (l + .5m - 1)/(l + m + s - 1) exceeds the current percentile,
/// upward when it is below, and not at all when equal. Merging small blocks
/// only (l = m = 0) always raises the percentile.
CombineEffect combine_improves(const Rational& p0_percentile, const Profile& prof);

namespace detail {
/// Sorts and deduplicates in place; the canonical VertexSet form.
void canonicalize(VertexSet& s);
bool contains(const VertexSet& s, Vertex v);
}  // namespace detail

}  // namespace rankrange

#endif  // RANKRANGE_CORE_HPP_
