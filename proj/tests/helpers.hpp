// Shared test utilities: seeded random instance generators.
#ifndef RANKRANGE_TESTS_HELPERS_HPP_
#define RANKRANGE_TESTS_HELPERS_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "rankrange/core.hpp"

namespace rrtest {

using namespace rankrange;

using Rng = std::mt19937;

inline int rnd_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Small positive integer measure; occasionally a proper fraction so the
/// exact-arithmetic paths get exercised.
inline Rational rnd_mu(Rng& rng, int max_num = 9) {
  int num = rnd_int(rng, 1, max_num);
  if (rnd_int(rng, 0, 3) == 0) return Rational(BigInt(num), BigInt(rnd_int(rng, 2, 4)));
  return Rational(num);
}

/// Random connected graph: a random spanning tree plus a few extra edges.
inline std::vector<std::pair<Vertex, Vertex>> rnd_connected_edges(Rng& rng, int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(rnd_int(rng, 0, v - 1), v);
  int extra = rnd_int(rng, 0, n);
  for (int i = 0; i < extra && n >= 2; ++i) {
    Vertex a = rnd_int(rng, 0, n - 1), b = rnd_int(rng, 0, n - 1);
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

/// Grows a connected special subset of the given size from a random seed.
inline VertexSet rnd_connected_subset(Rng& rng, const Instance& probe, int size) {
  VertexSet chosen{rnd_int(rng, 0, probe.n() - 1)};
  std::vector<char> in(probe.n(), 0);
  in[chosen[0]] = 1;
  while (static_cast<int>(chosen.size()) < size) {
    std::vector<Vertex> frontier;
    for (Vertex v : chosen)
      for (Vertex u : probe.neighbors(v))
        if (!in[u]) frontier.push_back(u);
    if (frontier.empty()) break;
    Vertex pick = frontier[rnd_int(rng, 0, static_cast<int>(frontier.size()) - 1)];
    in[pick] = 1;
    chosen.push_back(pick);
  }
  detail::canonicalize(chosen);
  return chosen;
}

inline Instance rnd_general_instance(Rng& rng, int n, int k_special) {
  auto edges = rnd_connected_edges(rng, n);
  std::vector<Rational> mu;
  for (int i = 0; i < n; ++i) mu.push_back(rnd_mu(rng));
  Instance probe(n, edges, mu, {});
  VertexSet special = rnd_connected_subset(rng, probe, k_special);
  return Instance(n, std::move(edges), std::move(mu), std::move(special));
}

inline Instance rnd_complete_instance(Rng& rng, int n, int k_special) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  std::vector<Rational> mu;
  for (int i = 0; i < n; ++i) mu.push_back(rnd_mu(rng));
  VertexSet special;
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  special.assign(ids.begin(), ids.begin() + k_special);
  detail::canonicalize(special);
  return Instance(n, std::move(edges), std::move(mu), std::move(special));
}

/// A single path 0-1-...-(n-1); S* is a contiguous run of k vertices.
inline Instance rnd_path_instance(Rng& rng, int n, int k_special, bool special_prefix = false) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  std::vector<Rational> mu;
  for (int i = 0; i < n; ++i) mu.push_back(rnd_mu(rng));
  int start = special_prefix ? 0 : rnd_int(rng, 0, n - k_special);
  VertexSet special;
  for (int i = 0; i < k_special; ++i) special.push_back(start + i);
  return Instance(n, std::move(edges), std::move(mu), std::move(special));
}

/// Random partition of 0..m-1 into nonempty groups.
inline std::vector<VertexSet> rnd_set_partition(Rng& rng, const VertexSet& items) {
  std::vector<VertexSet> groups;
  for (Vertex v : items) {
    int pick = rnd_int(rng, 0, static_cast<int>(groups.size()));
    if (pick == static_cast<int>(groups.size()))
      groups.push_back({v});
    else
      groups[pick].push_back(v);
  }
  for (auto& g : groups) detail::canonicalize(g);
  return groups;
}

}  // namespace rrtest

#endif  // RANKRANGE_TESTS_HELPERS_HPP_
