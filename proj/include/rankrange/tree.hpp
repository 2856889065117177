/** @file tree.hpp
 *  @brief Hierarchical-category variant: category trees, the polynomial
 *         solvers for the singleton-class case, and a brute force for the
 *         general class setting.
 *
 *  Admissible blocks are category nodes forming an antichain that covers all
 *  leaves; S* (a designated node) is always its own block, and its ancestors
 *  are never selectable. Partitions are reported as sets of leaf vertex ids.
 */
#ifndef RANKRANGE_TREE_HPP_
#define RANKRANGE_TREE_HPP_

#include <string>

#include "rankrange/general.hpp"
#include "rankrange/linear.hpp"  // Direction
#include "rankrange/oracle.hpp"

namespace rankrange {

struct TreeNode {
  std::string label;
  int parent = -1;
  std::vector<int> children;
  Rational mu;           // leaves only; internal values are derived sums
  Vertex leaf_vertex = -1;
};

struct CategoryTree {
  std::vector<TreeNode> nodes;
  int root = -1;
  int special_node = -1;

  bool is_leaf(int u) const { return nodes[u].children.empty(); }
  int leaf_count() const;
  Rational subtree_value(int u) const;
  VertexSet subtree_leaves(int u) const;

  /// Structural checks: one root, consistent parent links, every internal
  /// node with >= 2 children, distinct leaf vertex ids, special node set.
  void validate() const;
};

/// Appends an internal node (or the root when parent is -1).
int add_category(CategoryTree& tree, int parent, std::string label = "");
/// Appends a leaf; its vertex id is the number of leaves added before it.
int add_leaf(CategoryTree& tree, int parent, Rational mu, std::string label = "");

/// Classes of the general variant: a partition of the free leaf vertices.
struct ItemClasses {
  std::vector<VertexSet> classes;
};

/// Modified BFS: a subtree off the S*-path is bundled into one block iff it
/// contains a leaf whose singleton counts under `conv`, else exploded into
/// leaf singletons. Exact for singleton classes.
RankResult tree_rank_min(const CategoryTree& tree,
                         RankConvention conv = RankConvention::StrictAbove);

/// Top-down rule: keep a category as one block iff none of its children is
/// medium or large; otherwise recurse into the children. AtLeast convention.
RankResult tree_rank_max(const CategoryTree& tree);

/// Additive-score DP over (node, block count) with child-by-child knapsack
/// convolution; answer = opt over c of (G + 0.5)/(c + 1), witness via
/// back-pointers. Exact for singleton classes.
PercentileResult tree_percentile_dp(const CategoryTree& tree, Direction direction);

/// Exhaustive optimum over antichain selections plus per-class leftover
/// blocks. S*'s position is fixed and never regrouped. Throws SizeError above
/// 12 leaves.
OracleResult tree_general_bruteforce(const CategoryTree& tree, const ItemClasses& classes,
                                     Objective objective);

}  // namespace rankrange

#endif  // RANKRANGE_TREE_HPP_
