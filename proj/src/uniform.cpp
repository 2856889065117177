#include "rankrange/uniform.hpp"

#include <algorithm>
#include <numeric>

namespace rankrange {

namespace {

int positive_mod(long long v, int m) {
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

void require_spec(const CirculantSpec& spec) {
  if (spec.n < 1) throw DomainError("circulant: n must be positive");
  int prev = 0;
  for (int s : spec.jumps) {
    if (s <= prev) throw DomainError("circulant: jumps must be sorted, distinct, positive");
    if (2 * s > spec.n) throw DomainError("circulant: jump exceeds n/2");
    prev = s;
  }
}

void require_uniform(const Instance& inst) {
  for (Vertex v = 1; v < inst.n(); ++v)
    if (inst.mu(v) != inst.mu(0)) throw CaseError("uniform: measure is not uniform");
}

}  // namespace

bool CirculantSpec::is_connected() const {
  int g = n;
  for (int s : jumps) g = std::gcd(g, s);
  return g == 1;
}

bool CirculantSpec::has_edge(int a, int b) const {
  int d = positive_mod(a - b, n);
  d = std::min(d, n - d);
  return d != 0 && std::find(jumps.begin(), jumps.end(), d) != jumps.end();
}

UniformMinResult uniform_min_solutions(const Instance& inst) {
  require_uniform(inst);
  const int k = static_cast<int>(inst.special().size());
  if (k < 2) throw CaseError("uniform_min_solutions: needs |S*| >= 2");
  UniformMinResult res;
  VertexSet free = inst.free_vertices();
  if (free.empty()) throw DomainError("uniform_min_solutions: S* covers every vertex");
  for (Vertex v : free) res.witness.blocks.push_back({v});
  res.min_rank = 1;  // singleton measure < k * measure, so nothing outranks S*
  res.min_percentile = percentile_of(inst, res.witness);
  return res;
}

std::vector<int> circulant_hamiltonian_path(const CirculantSpec& spec) {
  require_spec(spec);
  if (!spec.is_connected()) throw ValidityError("circulant: graph is disconnected");
  const int n = spec.n;
  if (n == 1) return {0};

  const int s1 = spec.jumps.front();
  const int g1 = std::gcd(n, s1);
  if (g1 == 1) {
    // The first jump alone already spans the cycle.
    std::vector<int> path(n);
    for (int i = 0; i < n; ++i) path[i] = positive_mod(static_cast<long long>(i) * s1, n);
    return path;
  }

  // Contract the g1 cycles {v : v = x mod g1} of the first jump. Each other
  // jump s_x induces the jump s_x mod g1 (normalized to at most g1/2) between
  // cycles; jumps inducing 0 stay within a cycle and drop out.
  CirculantSpec inner;
  inner.n = g1;
  for (std::size_t x = 1; x < spec.jumps.size(); ++x) {
    int r = spec.jumps[x] % g1;
    r = std::min(r, g1 - r);
    if (r != 0) inner.jumps.push_back(r);
  }
  std::sort(inner.jumps.begin(), inner.jumps.end());
  inner.jumps.erase(std::unique(inner.jumps.begin(), inner.jumps.end()), inner.jumps.end());
  std::vector<int> cycle_order = circulant_hamiltonian_path(inner);

  const int b1 = n / g1;
  std::vector<int> path;
  path.reserve(n);
  int entry = cycle_order.front();  // smallest vertex of the first cycle
  for (std::size_t ci = 0; ci < cycle_order.size(); ++ci) {
    int v = entry;
    for (int step = 0; step < b1; ++step) {
      path.push_back(v);
      if (step + 1 < b1) v = positive_mod(v + s1, n);
    }
    if (ci + 1 == cycle_order.size()) break;
    // Exit vertex v has an edge into the next cycle; take the smallest one.
    int target = cycle_order[ci + 1];
    int next_entry = -1;
    for (int s : spec.jumps) {
      for (int w : {positive_mod(v + s, n), positive_mod(v - s, n)}) {
        if (w % g1 != target) continue;
        if (next_entry < 0 || w < next_entry) next_entry = w;
      }
    }
    if (next_entry < 0)
      throw ValidityError("circulant: no splice edge between consecutive cycles");
    entry = next_entry;
  }
  return path;
}

namespace {

// Maps free vertices (ascending) onto 0..n'-1 and checks every circulant edge
// is present in G \ S*, so path edges translate to real adjacencies.
VertexSet mapped_free(const Instance& inst, const CirculantSpec& spec) {
  VertexSet free = inst.free_vertices();
  if (static_cast<int>(free.size()) != spec.n)
    throw CaseError("uniform circulant: |V \\ S*| does not match the spec");
  for (int i = 0; i < spec.n; ++i)
    for (int s : spec.jumps)
      if (!inst.has_edge(free[i], free[(i + s) % spec.n]))
        throw CaseError("uniform circulant: G \\ S* is missing a circulant edge");
  return free;
}

Partition chunk_path(const VertexSet& free, const std::vector<int>& path, int size) {
  Partition p;
  const int n = static_cast<int>(path.size());
  const int q = std::max(1, n / size);
  int pos = 0;
  for (int b = 0; b < q; ++b) {
    int take = (b + 1 == q) ? n - pos : size;
    VertexSet block;
    for (int i = 0; i < take; ++i) block.push_back(free[path[pos++]]);
    detail::canonicalize(block);
    p.blocks.push_back(std::move(block));
  }
  return p;
}

}  // namespace

RankResult rank_max_uniform_circulant(const Instance& inst, const CirculantSpec& spec, int k) {
  require_uniform(inst);
  if (k != static_cast<int>(inst.special().size()))
    throw DomainError("uniform circulant: k does not match |S*|");
  if (k < 1) throw DomainError("uniform circulant: empty special subset");
  VertexSet free = mapped_free(inst, spec);
  std::vector<int> path = circulant_hamiltonian_path(spec);
  RankResult res;
  res.witness = chunk_path(free, path, k);
  res.rank = rank_of(inst, res.witness, RankConvention::AtLeast);
  return res;
}

PercentileResult percentile_max_uniform_circulant(const Instance& inst, const CirculantSpec& spec,
                                                  int k) {
  require_uniform(inst);
  if (k != static_cast<int>(inst.special().size()))
    throw DomainError("uniform circulant: k does not match |S*|");
  if (k < 1) throw DomainError("uniform circulant: empty special subset");
  VertexSet free = mapped_free(inst, spec);
  const int np = spec.n;

  PercentileResult res;
  res.certified_optimal = true;
  if (np <= k) {
    res.witness.blocks.push_back(free);
    res.percentile = percentile_of(inst, res.witness);
    return res;
  }
  std::vector<int> path = circulant_hamiltonian_path(spec);
  Partition medium = chunk_path(free, path, k);
  Rational medium_pct = percentile_of(inst, medium);
  if (np >= k + 1) {
    Partition large = chunk_path(free, path, k + 1);
    Rational large_pct = percentile_of(inst, large);
    if (large_pct >= medium_pct) {
      res.percentile = large_pct;
      res.witness = std::move(large);
      return res;
    }
  }
  res.percentile = medium_pct;
  res.witness = std::move(medium);
  return res;
}

}  // namespace rankrange
