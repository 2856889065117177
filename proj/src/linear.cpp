#include "rankrange/linear.hpp"

#include <algorithm>
#include <limits>

namespace rankrange {

namespace {

constexpr long long kUnreachable = std::numeric_limits<long long>::min();

// Decomposes G into its components, each required to be a simple path,
// oriented from the endpoint with the smaller vertex id.
std::vector<std::vector<Vertex>> path_components(const Instance& inst) {
  std::vector<char> seen(inst.n(), 0);
  std::vector<std::vector<Vertex>> paths;
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (seen[v]) continue;
    // Collect the component.
    VertexSet comp;
    VertexSet stack = {v};
    seen[v] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      if (inst.neighbors(u).size() > 2)
        throw CaseError("linear: vertex " + std::to_string(u) + " has degree > 2");
      for (Vertex w : inst.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    // Walk from the smallest endpoint.
    Vertex start = -1;
    for (Vertex u : comp)
      if (inst.neighbors(u).size() <= 1 && (start < 0 || u < start)) start = u;
    if (start < 0) throw CaseError("linear: component of vertex " + std::to_string(v) +
                                   " contains a cycle");
    std::vector<Vertex> path = {start};
    Vertex prev = -1, cur = start;
    while (true) {
      Vertex next = -1;
      for (Vertex w : inst.neighbors(cur))
        if (w != prev) next = w;
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    if (path.size() != comp.size())
      throw CaseError("linear: component of vertex " + std::to_string(v) + " is not a path");
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

LineInstance preprocess_remove_special(const Instance& inst) {
  auto paths = path_components(inst);
  LineInstance out;
  for (std::size_t ci = 0; ci < paths.size(); ++ci) {
    const auto& path = paths[ci];
    int lo = -1, hi = -1;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (!inst.is_special(path[i])) continue;
      if (lo < 0) lo = static_cast<int>(i);
      hi = static_cast<int>(i);
    }
    if (lo < 0) {
      out.segments.push_back(path);
      continue;
    }
    out.special_component = static_cast<int>(ci);
    out.special_lo = lo;
    out.special_hi = hi;
    if (lo > 0)
      out.segments.emplace_back(path.begin(), path.begin() + lo);
    if (hi + 1 < static_cast<int>(path.size()))
      out.segments.emplace_back(path.begin() + hi + 1, path.end());
  }
  return out;
}

RankResult rank_max_linear(const Instance& inst, RankConvention conv) {
  LineInstance line = preprocess_remove_special(inst);
  if (inst.special().empty()) throw DomainError("rank_max_linear: empty special subset");
  const Rational& t = inst.special_value();
  auto counts = [&](const Rational& v) {
    return conv == RankConvention::AtLeast ? v >= t : v > t;
  };

  RankResult res;
  Partition& p = res.witness;
  for (const auto& seg : line.segments) {
    const int m = static_cast<int>(seg.size());
    std::vector<Rational> pre(m + 1);
    for (int i = 0; i < m; ++i) pre[i + 1] = pre[i] + inst.mu(seg[i]);

    // Jobs = counting runs [i, j]; earliest finish time first, shortest on
    // equal finish so ties resolve deterministically.
    std::vector<std::pair<int, int>> jobs;
    for (int j = 0; j < m; ++j)
      for (int i = j; i >= 0; --i)
        if (counts(pre[j + 1] - pre[i])) jobs.emplace_back(j, i);
    std::sort(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second > b.second;
    });

    std::vector<char> covered(m, 0);
    int last_end = -1;
    for (auto [j, i] : jobs) {
      if (i <= last_end) continue;
      VertexSet block(seg.begin() + i, seg.begin() + j + 1);
      detail::canonicalize(block);
      p.blocks.push_back(std::move(block));
      for (int q = i; q <= j; ++q) covered[q] = 1;
      last_end = j;
    }
    for (int q = 0; q < m; ++q)
      if (!covered[q]) p.blocks.push_back({seg[q]});
  }
  res.rank = rank_of(inst, p, conv);
  return res;
}

PercentileResult percentile_dp_linear(const Instance& inst, Direction direction) {
  LineInstance line = preprocess_remove_special(inst);
  if (inst.special().empty()) throw DomainError("percentile_dp_linear: empty special subset");
  const Rational& t = inst.special_value();
  const bool maximize = direction == Direction::Max;

  // Block scores in half units: large 2, medium 1, small 0.
  auto score2 = [&](const Rational& v) -> long long { return v > t ? 2 : (v == t ? 1 : 0); };
  auto better = [&](long long a, long long b) {  // is a better than b
    if (b == kUnreachable) return a != kUnreachable;
    if (a == kUnreachable) return false;
    return maximize ? a > b : a < b;
  };

  struct SegTable {
    std::vector<std::vector<long long>> g;   // g[j][k]
    std::vector<std::vector<int>> parent;    // start of the block ending at j
    int m = 0;
  };
  std::vector<SegTable> tables;
  for (const auto& seg : line.segments) {
    const int m = static_cast<int>(seg.size());
    if (m == 0) continue;
    std::vector<Rational> pre(m + 1);
    for (int i = 0; i < m; ++i) pre[i + 1] = pre[i] + inst.mu(seg[i]);
    SegTable tab;
    tab.m = m;
    tab.g.assign(m + 1, std::vector<long long>(m + 1, kUnreachable));
    tab.parent.assign(m + 1, std::vector<int>(m + 1, -1));
    tab.g[0][0] = 0;
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= j; ++k) {
        for (int i = k - 1; i < j; ++i) {
          if (tab.g[i][k - 1] == kUnreachable) continue;
          long long cand = tab.g[i][k - 1] + score2(pre[j] - pre[i]);
          if (better(cand, tab.g[j][k])) {
            tab.g[j][k] = cand;
            tab.parent[j][k] = i;
          }
        }
      }
    }
    tables.push_back(std::move(tab));
  }
  if (tables.empty()) throw DomainError("percentile_dp_linear: no free vertices");

  // Convolve segment tables over the total block count.
  int total = 0;
  for (const auto& tab : tables) total += tab.m;
  std::vector<std::vector<long long>> conv(tables.size() + 1,
                                           std::vector<long long>(total + 1, kUnreachable));
  std::vector<std::vector<int>> pick(tables.size() + 1, std::vector<int>(total + 1, -1));
  conv[0][0] = 0;
  int reach = 0;
  for (std::size_t s = 0; s < tables.size(); ++s) {
    const SegTable& tab = tables[s];
    for (int k = 0; k <= reach; ++k) {
      if (conv[s][k] == kUnreachable) continue;
      for (int ks = 1; ks <= tab.m; ++ks) {
        if (tab.g[tab.m][ks] == kUnreachable) continue;
        long long cand = conv[s][k] + tab.g[tab.m][ks];
        if (better(cand, conv[s + 1][k + ks])) {
          conv[s + 1][k + ks] = cand;
          pick[s + 1][k + ks] = ks;
        }
      }
    }
    reach += tab.m;
  }

  // opt over k of (G + 0.5)/(k+1) = (2G + 1)/(2(k+1)).
  PercentileResult res;
  int best_k = -1;
  for (int k = 1; k <= total; ++k) {
    if (conv[tables.size()][k] == kUnreachable) continue;
    Rational value(BigInt(conv[tables.size()][k] + 1), BigInt(2) * (k + 1));
    bool take = best_k < 0 || (maximize ? value > res.percentile : value < res.percentile);
    if (take) {
      res.percentile = value;
      best_k = k;
    }
  }
  if (best_k < 0) throw DomainError("percentile_dp_linear: no admissible partition");

  // Reconstruct: segment block counts first, then per-segment cut points.
  std::vector<int> seg_k(tables.size());
  {
    int k = best_k;
    for (std::size_t s = tables.size(); s > 0; --s) {
      seg_k[s - 1] = pick[s][k];
      k -= pick[s][k];
    }
  }
  std::size_t ti = 0;
  for (const auto& seg : line.segments) {
    if (seg.empty()) continue;
    const SegTable& tab = tables[ti];
    int j = tab.m, k = seg_k[ti];
    std::vector<std::pair<int, int>> cuts;
    while (k > 0) {
      int i = tab.parent[j][k];
      cuts.emplace_back(i, j);
      j = i;
      --k;
    }
    for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
      VertexSet block(seg.begin() + it->first, seg.begin() + it->second);
      detail::canonicalize(block);
      res.witness.blocks.push_back(std::move(block));
    }
    ++ti;
  }
  res.certified_optimal = true;
  return res;
}

}  // namespace rankrange
