#include "rankrange/general.hpp"

#include <algorithm>
#include <queue>

namespace rankrange {

std::vector<VertexSet> free_components(const Instance& inst) {
  std::vector<char> seen(inst.n(), 0);
  for (Vertex s : inst.special()) seen[s] = 1;
  std::vector<VertexSet> comps;
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (seen[v]) continue;
    VertexSet comp;
    std::queue<Vertex> q;
    q.push(v);
    seen[v] = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      comp.push_back(u);
      for (Vertex w : inst.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    detail::canonicalize(comp);
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

bool component_has_large_singleton(const Instance& inst, const VertexSet& comp) {
  return std::any_of(comp.begin(), comp.end(),
                     [&](Vertex v) { return inst.mu(v) > inst.special_value(); });
}

}  // namespace

RankResult greedy_rank_min(const Instance& inst) {
  RankResult res;
  auto comps = free_components(inst);
  if (inst.special().empty()) {
    // Nothing to outrank; one block per component is a convenient witness.
    for (auto& c : comps) res.witness.blocks.push_back(c);
    res.rank = 1;
    return res;
  }
  int counted = 0;
  for (const VertexSet& comp : comps) {
    if (component_has_large_singleton(inst, comp)) {
      res.witness.blocks.push_back(comp);
      ++counted;
    } else {
      for (Vertex v : comp) res.witness.blocks.push_back({v});
    }
  }
  res.rank = 1 + counted;
  return res;
}

int rank_lower_bound(const Instance& inst) {
  if (inst.special().empty()) return 1;
  int counted = 0;
  for (const VertexSet& comp : free_components(inst))
    if (component_has_large_singleton(inst, comp)) ++counted;
  return 1 + counted;
}

namespace {

// Merges every non-absorber block into an adjacent absorber inside its
// component (smallest-measure leftover first); components without an absorber
// collapse into a single block. Absorber blocks only gain measure, so they
// keep counting.
Partition absorb_leftovers(const Instance& inst, Partition p,
                           const std::function<bool(const Rational&)>& is_absorber) {
  // Map each vertex to its component index.
  auto comps = free_components(inst);
  std::vector<int> comp_of(inst.n(), -1);
  for (std::size_t ci = 0; ci < comps.size(); ++ci)
    for (Vertex v : comps[ci]) comp_of[v] = static_cast<int>(ci);

  struct BlockInfo {
    VertexSet verts;
    Rational value;
    int comp;
    bool alive = true;
  };
  std::vector<BlockInfo> info;
  for (const VertexSet& b : p.blocks) {
    BlockInfo bi;
    bi.verts = b;
    bi.value = inst.subset_value(b);
    bi.comp = comp_of[b.front()];
    info.push_back(std::move(bi));
  }

  auto blocks_adjacent = [&](const BlockInfo& a, const BlockInfo& b) {
    for (Vertex v : a.verts)
      for (Vertex w : inst.neighbors(v))
        if (detail::contains(b.verts, w)) return true;
    return false;
  };

  std::vector<char> comp_has_absorber(comps.size(), 0);
  for (const auto& bi : info)
    if (is_absorber(bi.value)) comp_has_absorber[bi.comp] = 1;

  // Components without any absorber become one block each.
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    if (comp_has_absorber[ci]) continue;
    bool first = true;
    for (auto& bi : info) {
      if (bi.comp != static_cast<int>(ci)) continue;
      if (first) {
        bi.verts = comps[ci];
        bi.value = inst.subset_value(comps[ci]);
        first = false;
      } else {
        bi.alive = false;
      }
    }
  }

  // Iteratively absorb leftovers adjacent to an absorber.
  while (true) {
    int pick = -1;
    for (std::size_t i = 0; i < info.size(); ++i) {
      auto& bi = info[i];
      if (!bi.alive || !comp_has_absorber[bi.comp] || is_absorber(bi.value)) continue;
      bool adjacent = false;
      for (const auto& other : info) {
        if (!other.alive || &other == &bi || !is_absorber(other.value)) continue;
        if (other.comp == bi.comp && blocks_adjacent(bi, other)) {
          adjacent = true;
          break;
        }
      }
      if (!adjacent) continue;
      if (pick < 0 || bi.value < info[pick].value) pick = static_cast<int>(i);
    }
    if (pick < 0) break;
    BlockInfo& leftover = info[pick];
    for (auto& other : info) {
      if (!other.alive || &other == &leftover || !is_absorber(other.value)) continue;
      if (other.comp == leftover.comp && blocks_adjacent(leftover, other)) {
        other.verts.insert(other.verts.end(), leftover.verts.begin(), leftover.verts.end());
        detail::canonicalize(other.verts);
        other.value += leftover.value;
        leftover.alive = false;
        break;
      }
    }
  }

  Partition out;
  for (auto& bi : info)
    if (bi.alive) out.blocks.push_back(std::move(bi.verts));
  return out;
}

}  // namespace

PercentileResult percentile_max_2approx(const Instance& inst, const RankMaxStrategy& rank_max) {
  if (inst.special().empty())
    throw DomainError("percentile_max_2approx: empty special subset");
  const Rational& threshold = inst.special_value();

  // Branch 1: maximize strictly large blocks, then absorb small and medium
  // blocks into large ones.
  Partition p1 = absorb_leftovers(inst, rank_max(inst, RankConvention::StrictAbove),
                                  [&](const Rational& v) { return v > threshold; });

  // Branch 2: maximize large-or-medium blocks, then absorb small blocks.
  Partition p2 = absorb_leftovers(inst, rank_max(inst, RankConvention::AtLeast),
                                  [&](const Rational& v) { return v >= threshold; });

  PercentileResult res;
  Rational q1 = percentile_of(inst, p1);
  Rational q2 = percentile_of(inst, p2);
  if (q1 >= q2) {
    res.percentile = q1;
    res.witness = std::move(p1);
  } else {
    res.percentile = q2;
    res.witness = std::move(p2);
  }
  res.certified_optimal = res.percentile >= Rational(BigInt(1), BigInt(2));
  return res;
}

}  // namespace rankrange
