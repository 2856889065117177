#include "rankrange/oracle.hpp"

#include <algorithm>

namespace rankrange {

namespace {

struct Enumerator {
  const Instance& inst;
  const std::function<bool(const Partition&)>& visit;
  std::vector<char> assigned;   // special vertices pre-assigned
  std::vector<VertexSet> blocks;
  bool stopped = false;

  Enumerator(const Instance& i, const std::function<bool(const Partition&)>& v)
      : inst(i), visit(v), assigned(i.n(), 0) {
    for (Vertex s : inst.special()) assigned[s] = 1;
  }

  void run() { next_block(); }

  // Starts the block of the least unassigned vertex, then enumerates every
  // connected superset of it within the unassigned vertices.
  void next_block() {
    if (stopped) return;
    Vertex seed = -1;
    for (Vertex v = 0; v < inst.n(); ++v) {
      if (!assigned[v]) {
        seed = v;
        break;
      }
    }
    if (seed < 0) {
      Partition p;
      p.blocks = blocks;
      if (!visit(p)) stopped = true;
      return;
    }
    assigned[seed] = 1;
    blocks.push_back({seed});
    std::vector<char> banned(inst.n(), 0);
    VertexSet frontier;
    for (Vertex w : inst.neighbors(seed))
      if (!assigned[w]) frontier.push_back(w);
    detail::canonicalize(frontier);
    grow(frontier, banned);
    blocks.pop_back();
    assigned[seed] = 0;
  }

  // Emits the current block as-is, then each proper connected extension.
  // Frontier vertices skipped at a branch are banned below it, so each
  // connected subset is produced exactly once.
  void grow(const VertexSet& frontier, std::vector<char>& banned) {
    if (stopped) return;
    {
      VertexSet sorted_block = blocks.back();
      detail::canonicalize(sorted_block);
      std::swap(blocks.back(), sorted_block);
      next_block();
      std::swap(blocks.back(), sorted_block);
      if (stopped) return;
    }
    VertexSet banned_here;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      Vertex u = frontier[i];
      if (assigned[u] || banned[u]) continue;
      assigned[u] = 1;
      blocks.back().push_back(u);
      VertexSet extended;
      for (std::size_t j = i + 1; j < frontier.size(); ++j)
        if (!assigned[frontier[j]] && !banned[frontier[j]]) extended.push_back(frontier[j]);
      for (Vertex w : inst.neighbors(u))
        if (!assigned[w] && !banned[w]) extended.push_back(w);
      detail::canonicalize(extended);
      grow(extended, banned);
      blocks.back().pop_back();
      assigned[u] = 0;
      if (stopped) break;
      banned[u] = 1;  // branches to the right must not re-add u
      banned_here.push_back(u);
    }
    for (Vertex u : banned_here) banned[u] = 0;
  }
};

}  // namespace

void enumerate_valid_partitions(const Instance& inst,
                                const std::function<bool(const Partition&)>& visit, int limit) {
  int free_count = inst.n() - static_cast<int>(inst.special().size());
  if (free_count > limit)
    throw SizeError("oracle: " + std::to_string(free_count) + " free vertices exceed limit " +
                    std::to_string(limit));
  Enumerator e(inst, visit);
  e.run();
}

std::uint64_t count_valid_partitions(const Instance& inst, int limit) {
  std::uint64_t count = 0;
  enumerate_valid_partitions(
      inst,
      [&](const Partition&) {
        ++count;
        return true;
      },
      limit);
  return count;
}

RankConvention default_convention(Objective objective) {
  return (objective == Objective::MinRank || objective == Objective::MinPercentile)
             ? RankConvention::StrictAbove
             : RankConvention::AtLeast;
}

OracleResult exact_optimum(const Instance& inst, Objective objective, RankConvention conv,
                           int limit) {
  const bool wants_rank = objective == Objective::MinRank || objective == Objective::MaxRank;
  const bool minimize = objective == Objective::MinRank || objective == Objective::MinPercentile;
  if (inst.special().empty()) throw DomainError("oracle: empty special subset");

  OracleResult result;
  bool have = false;
  std::uint64_t explored = 0;
  enumerate_valid_partitions(
      inst,
      [&](const Partition& p) {
        ++explored;
        if (!wants_rank && p.blocks.empty()) return true;  // percentile undefined at c = 0
        Profile prof = profile_of(inst, p);
        Rational value = wants_rank ? Rational(rank_of_profile(prof, conv))
                                    : percentile_of_profile(prof);
        bool better = !have || (minimize ? value < result.best_value : value > result.best_value);
        if (better) {
          result.best_value = value;
          result.witness = p;
          have = true;
        }
        return true;
      },
      limit);
  result.explored = explored;
  if (!have) throw DomainError("oracle: no admissible partition for objective");
  return result;
}

}  // namespace rankrange
