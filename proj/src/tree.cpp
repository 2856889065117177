#include "rankrange/tree.hpp"

#include <algorithm>
#include <limits>

namespace rankrange {

namespace {
constexpr long long kUnreachable = std::numeric_limits<long long>::min();
}

int CategoryTree::leaf_count() const {
  int count = 0;
  for (std::size_t u = 0; u < nodes.size(); ++u)
    if (is_leaf(static_cast<int>(u))) ++count;
  return count;
}

Rational CategoryTree::subtree_value(int u) const {
  if (is_leaf(u)) return nodes[u].mu;
  Rational total(0);
  for (int c : nodes[u].children) total += subtree_value(c);
  return total;
}

VertexSet CategoryTree::subtree_leaves(int u) const {
  VertexSet out;
  std::vector<int> stack = {u};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (is_leaf(v))
      out.push_back(nodes[v].leaf_vertex);
    else
      for (int c : nodes[v].children) stack.push_back(c);
  }
  detail::canonicalize(out);
  return out;
}

void CategoryTree::validate() const {
  if (root < 0 || root >= static_cast<int>(nodes.size()))
    throw DomainError("tree: missing root");
  if (special_node < 0 || special_node >= static_cast<int>(nodes.size()))
    throw DomainError("tree: missing special node");
  std::vector<Vertex> leaf_ids;
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    const TreeNode& node = nodes[u];
    if (node.parent < 0 && static_cast<int>(u) != root)
      throw DomainError("tree: multiple roots");
    if (node.parent >= 0) {
      const auto& sib = nodes[node.parent].children;
      if (std::find(sib.begin(), sib.end(), static_cast<int>(u)) == sib.end())
        throw DomainError("tree: inconsistent parent link");
    }
    if (node.children.size() == 1)
      throw DomainError("tree: internal node with exactly one child");
    if (node.children.empty()) {
      // Zero is admitted: the EPA inventory reports one exact-zero leaf.
      if (node.mu.sign() < 0) throw DomainError("tree: negative leaf measure");
      leaf_ids.push_back(node.leaf_vertex);
    }
  }
  detail::canonicalize(leaf_ids);
  if (static_cast<int>(leaf_ids.size()) != leaf_count())
    throw DomainError("tree: duplicate leaf vertex ids");
}

int add_category(CategoryTree& tree, int parent, std::string label) {
  TreeNode node;
  node.label = std::move(label);
  node.parent = parent;
  int id = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back(std::move(node));
  if (parent >= 0)
    tree.nodes[parent].children.push_back(id);
  else
    tree.root = id;
  return id;
}

int add_leaf(CategoryTree& tree, int parent, Rational mu, std::string label) {
  // Count committed leaves only; a just-created category with no children yet
  // must not shift the numbering.
  int next_leaf = 0;
  for (const TreeNode& node : tree.nodes)
    if (node.leaf_vertex >= 0) ++next_leaf;
  int id = add_category(tree, parent, std::move(label));
  tree.nodes[id].mu = std::move(mu);
  tree.nodes[id].leaf_vertex = next_leaf;
  return id;
}

namespace {

// Shared precomputation for the tree solvers.
struct Prep {
  const CategoryTree& tree;
  std::vector<Rational> value;      // subtree sums
  std::vector<char> on_path;        // strict ancestors of the special node
  std::vector<char> inside;         // special node and its descendants
  Rational t;                       // mu(S*)

  explicit Prep(const CategoryTree& tr) : tree(tr) {
    tr.validate();
    const int n = static_cast<int>(tr.nodes.size());
    value.assign(n, Rational(0));
    on_path.assign(n, 0);
    inside.assign(n, 0);
    fill_values(tr.root);
    for (int u = tr.nodes[tr.special_node].parent; u >= 0; u = tr.nodes[u].parent) on_path[u] = 1;
    mark_inside(tr.special_node);
    t = value[tr.special_node];
  }

  Rational fill_values(int u) {
    if (tree.is_leaf(u)) return value[u] = tree.nodes[u].mu;
    Rational total(0);
    for (int c : tree.nodes[u].children) total += fill_values(c);
    return value[u] = total;
  }

  void mark_inside(int u) {
    inside[u] = 1;
    for (int c : tree.nodes[u].children) mark_inside(c);
  }

  bool selectable(int u) const { return !on_path[u] && !inside[u]; }

  Profile profile(const std::vector<VertexSet>& blocks,
                  const std::vector<Rational>& leaf_mu) const {
    Profile prof;
    for (const auto& b : blocks) {
      Rational sum(0);
      for (Vertex v : b) sum += leaf_mu[v];
      switch (classify_value(sum, t)) {
        case SubsetClass::Large: ++prof.large; break;
        case SubsetClass::Medium: ++prof.medium; break;
        case SubsetClass::Small: ++prof.small; break;
      }
    }
    return prof;
  }
};

std::vector<Rational> leaf_measures(const CategoryTree& tree) {
  std::vector<Rational> mu(tree.leaf_count());
  for (std::size_t u = 0; u < tree.nodes.size(); ++u)
    if (tree.is_leaf(static_cast<int>(u))) mu[tree.nodes[u].leaf_vertex] = tree.nodes[u].mu;
  return mu;
}

}  // namespace

RankResult tree_rank_min(const CategoryTree& tree, RankConvention conv) {
  Prep prep(tree);
  auto counts_single = [&](const Rational& v) {
    return conv == RankConvention::StrictAbove ? v > prep.t : v >= prep.t;
  };
  RankResult res;
  std::vector<int> stack = {tree.root};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (prep.inside[u]) continue;
    if (prep.on_path[u]) {
      for (int c : tree.nodes[u].children) stack.push_back(c);
      continue;
    }
    VertexSet leaves = tree.subtree_leaves(u);
    bool forced = false;
    for (Vertex v : leaves) {
      // A leaf whose singleton already counts makes one counting block in this
      // subtree unavoidable; bundling caps the damage at exactly one.
      Rational lv(0);
      for (std::size_t w = 0; w < tree.nodes.size(); ++w)
        if (tree.is_leaf(static_cast<int>(w)) && tree.nodes[w].leaf_vertex == v) lv = tree.nodes[w].mu;
      if (counts_single(lv)) {
        forced = true;
        break;
      }
    }
    if (forced)
      res.witness.blocks.push_back(std::move(leaves));
    else
      for (Vertex v : leaves) res.witness.blocks.push_back({v});
  }
  res.rank = rank_of_profile(prep.profile(res.witness.blocks, leaf_measures(tree)), conv);
  return res;
}

RankResult tree_rank_max(const CategoryTree& tree) {
  Prep prep(tree);
  RankResult res;
  std::vector<int> stack = {tree.root};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (prep.inside[u]) continue;
    if (prep.on_path[u] || (!tree.is_leaf(u) &&
                            std::any_of(tree.nodes[u].children.begin(),
                                        tree.nodes[u].children.end(),
                                        [&](int c) { return prep.value[c] >= prep.t; }))) {
      for (int c : tree.nodes[u].children) stack.push_back(c);
      continue;
    }
    res.witness.blocks.push_back(tree.subtree_leaves(u));
  }
  res.rank = rank_of_profile(prep.profile(res.witness.blocks, leaf_measures(tree)),
                             RankConvention::AtLeast);
  return res;
}

namespace {

struct NodeTable {
  std::vector<long long> g;                // g[c], half-unit scores
  std::vector<std::vector<int>> pick;      // pick[i][c]: blocks given to child i
};

struct PercentileDp {
  const Prep& prep;
  const CategoryTree& tree;
  bool maximize;
  std::vector<NodeTable> tables;

  PercentileDp(const Prep& p, bool max)
      : prep(p), tree(p.tree), maximize(max), tables(p.tree.nodes.size()) {}

  bool better(long long a, long long b) const {
    if (b == kUnreachable) return a != kUnreachable;
    if (a == kUnreachable) return false;
    return maximize ? a > b : a < b;
  }

  long long score2(const Rational& v) const {
    return v > prep.t ? 2 : (v == prep.t ? 1 : 0);
  }

  void compute(int u) {
    NodeTable& tab = tables[u];
    if (u == tree.special_node) {
      tab.g = {0};  // S* is the implicit block: zero counted blocks, zero score
      return;
    }
    if (tree.is_leaf(u)) {
      tab.g = {kUnreachable, score2(prep.value[u])};
      return;
    }
    std::vector<long long> pref = {0};
    for (std::size_t i = 0; i < tree.nodes[u].children.size(); ++i) {
      int child = tree.nodes[u].children[i];
      compute(child);
      const auto& cg = tables[child].g;
      std::vector<long long> next(pref.size() + cg.size() - 1, kUnreachable);
      std::vector<int> pick(next.size(), -1);
      for (std::size_t a = 0; a < pref.size(); ++a) {
        if (pref[a] == kUnreachable) continue;
        for (std::size_t b = 0; b < cg.size(); ++b) {
          if (cg[b] == kUnreachable) continue;
          long long cand = pref[a] + cg[b];
          if (better(cand, next[a + b])) {
            next[a + b] = cand;
            pick[a + b] = static_cast<int>(b);
          }
        }
      }
      tab.pick.push_back(std::move(pick));
      pref = std::move(next);
    }
    tab.g = std::move(pref);
    if (prep.selectable(u)) {
      long long whole = score2(prep.value[u]);
      if (tab.g.size() < 2) tab.g.resize(2, kUnreachable);
      // Taking the whole category is the only way to reach one block here
      // (every child needs at least one), so c = 1 means "selected".
      if (better(whole, tab.g[1])) tab.g[1] = whole;
    }
  }

  void reconstruct(int u, int c, std::vector<VertexSet>& blocks) const {
    if (u == tree.special_node) return;
    if (prep.selectable(u) && c == 1) {
      blocks.push_back(tree.subtree_leaves(u));
      return;
    }
    const NodeTable& tab = tables[u];
    for (std::size_t i = tree.nodes[u].children.size(); i > 0; --i) {
      int k = tab.pick[i - 1][c];
      reconstruct(tree.nodes[u].children[i - 1], k, blocks);
      c -= k;
    }
  }
};

}  // namespace

PercentileResult tree_percentile_dp(const CategoryTree& tree, Direction direction) {
  Prep prep(tree);
  if (tree.special_node == tree.root)
    throw DomainError("tree_percentile_dp: S* covers every leaf");
  PercentileDp dp(prep, direction == Direction::Max);
  dp.compute(tree.root);

  const auto& g = dp.tables[tree.root].g;
  PercentileResult res;
  int best_c = -1;
  for (std::size_t c = 1; c < g.size(); ++c) {
    if (g[c] == kUnreachable) continue;
    Rational value(BigInt(g[c] + 1), BigInt(2) * (static_cast<int>(c) + 1));
    bool take = best_c < 0 ||
                (direction == Direction::Max ? value > res.percentile : value < res.percentile);
    if (take) {
      res.percentile = value;
      best_c = static_cast<int>(c);
    }
  }
  if (best_c < 0) throw DomainError("tree_percentile_dp: no admissible partition");
  dp.reconstruct(tree.root, best_c, res.witness.blocks);
  res.certified_optimal = true;
  return res;
}

OracleResult tree_general_bruteforce(const CategoryTree& tree, const ItemClasses& classes,
                                     Objective objective) {
  Prep prep(tree);
  if (tree.leaf_count() - static_cast<int>(tree.subtree_leaves(tree.special_node).size()) > 12)
    throw SizeError("tree_general_bruteforce: more than 12 free leaves");
  const bool wants_rank = objective == Objective::MinRank || objective == Objective::MaxRank;
  const bool minimize = objective == Objective::MinRank || objective == Objective::MinPercentile;
  const RankConvention conv = default_convention(objective);
  const auto leaf_mu = leaf_measures(tree);

  // Check the classes partition the free leaves.
  {
    VertexSet all;
    for (const auto& cls : classes.classes)
      all.insert(all.end(), cls.begin(), cls.end());
    detail::canonicalize(all);
    VertexSet free;
    VertexSet special_leaves = tree.subtree_leaves(tree.special_node);
    for (std::size_t u = 0; u < tree.nodes.size(); ++u)
      if (tree.is_leaf(static_cast<int>(u)) &&
          !detail::contains(special_leaves, tree.nodes[u].leaf_vertex))
        free.push_back(tree.nodes[u].leaf_vertex);
    detail::canonicalize(free);
    std::size_t total = 0;
    for (const auto& cls : classes.classes) total += cls.size();
    if (all != free || total != all.size())
      throw DomainError("tree_general_bruteforce: classes must partition the free leaves");
  }

  OracleResult result;
  bool have = false;
  std::vector<int> selected;

  auto evaluate = [&]() {
    std::vector<VertexSet> blocks;
    VertexSet covered;
    for (int u : selected) {
      blocks.push_back(tree.subtree_leaves(u));
      covered.insert(covered.end(), blocks.back().begin(), blocks.back().end());
    }
    detail::canonicalize(covered);
    for (const auto& cls : classes.classes) {
      VertexSet leftover;
      for (Vertex v : cls)
        if (!detail::contains(covered, v)) leftover.push_back(v);
      if (!leftover.empty()) blocks.push_back(std::move(leftover));
    }
    ++result.explored;
    if (!wants_rank && blocks.empty()) return;
    Profile prof = prep.profile(blocks, leaf_mu);
    Rational value =
        wants_rank ? Rational(rank_of_profile(prof, conv)) : percentile_of_profile(prof);
    if (!have || (minimize ? value < result.best_value : value > result.best_value)) {
      result.best_value = value;
      result.witness.blocks = std::move(blocks);
      have = true;
    }
  };

  // Decide nodes one at a time; descending pushes the children.
  std::function<void(std::vector<int>)> rec = [&](std::vector<int> pending) {
    if (pending.empty()) {
      evaluate();
      return;
    }
    int u = pending.back();
    pending.pop_back();
    if (prep.inside[u]) {
      rec(pending);
      return;
    }
    if (prep.on_path[u]) {
      for (int c : tree.nodes[u].children) pending.push_back(c);
      rec(std::move(pending));
      return;
    }
    {
      selected.push_back(u);
      rec(pending);
      selected.pop_back();
    }
    if (!tree.is_leaf(u)) {
      for (int c : tree.nodes[u].children) pending.push_back(c);
      rec(std::move(pending));
    } else {
      rec(std::move(pending));  // leaf left to its class's leftover block
    }
  };
  rec({tree.root});

  if (!have) throw DomainError("tree_general_bruteforce: no admissible partition");
  return result;
}

}  // namespace rankrange
