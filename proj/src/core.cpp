#include "rankrange/core.hpp"

#include <algorithm>
#include <queue>

namespace rankrange {

namespace detail {

void canonicalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace detail

Instance::Instance(int n, std::vector<std::pair<Vertex, Vertex>> edges, std::vector<Rational> mu,
                   VertexSet special)
    : n_(n), adj_(n), mu_(std::move(mu)), special_(std::move(special)), special_mask_(n, 0) {
  if (n < 0) throw DomainError("Instance: negative vertex count");
  if (static_cast<int>(mu_.size()) != n) throw DomainError("Instance: mu size != n");
  for (const Rational& m : mu_)
    if (!(m > Rational(0))) throw DomainError("Instance: mu must be strictly positive");

  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw DomainError("Instance: edge endpoint out of range");
    if (a == b) continue;  // reflexivity is implicit, never stored
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) detail::canonicalize(nb);

  detail::canonicalize(special_);
  for (Vertex v : special_) {
    if (v < 0 || v >= n) throw DomainError("Instance: special vertex out of range");
    special_mask_[v] = 1;
  }
  if (!special_.empty() && !is_connected_subset(special_))
    throw DomainError("Instance: special subset must be connected");
  special_value_ = subset_value(special_);
}

bool Instance::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return false;
  return detail::contains(adj_[a], b);
}

Rational Instance::subset_value(const VertexSet& s) const {
  Rational total(0);
  for (Vertex v : s) total += mu_[v];
  return total;
}

VertexSet Instance::free_vertices() const {
  VertexSet out;
  for (Vertex v = 0; v < n_; ++v)
    if (!special_mask_[v]) out.push_back(v);
  return out;
}

bool Instance::is_connected_subset(const VertexSet& s) const {
  if (s.empty()) return false;
  if (s.size() == 1) return true;
  std::vector<char> in_set(n_, 0), seen(n_, 0);
  for (Vertex v : s) in_set[v] = 1;
  std::queue<Vertex> q;
  q.push(s[0]);
  seen[s[0]] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : adj_[v]) {
      if (in_set[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == s.size();
}

bool Instance::is_complete() const {
  for (Vertex v = 0; v < n_; ++v)
    if (static_cast<int>(adj_[v].size()) != n_ - 1) return false;
  return true;
}

std::vector<std::pair<Vertex, Vertex>> Instance::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < n_; ++v)
    for (Vertex w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

SubsetClass classify_value(const Rational& value, const Rational& special_value) {
  if (value > special_value) return SubsetClass::Large;
  if (value == special_value) return SubsetClass::Medium;
  return SubsetClass::Small;
}

SubsetClass classify_subset(const Instance& inst, const VertexSet& s) {
  if (s.empty()) throw DomainError("classify_subset: empty subset");
  if (s == inst.special()) throw DomainError("classify_subset: S* is not classifiable");
  return classify_value(inst.subset_value(s), inst.special_value());
}

bool is_valid_partition(const Instance& inst, const Partition& p) {
  try {
    require_valid_partition(inst, p);
  } catch (const ValidityError&) {
    return false;
  }
  return true;
}

void require_valid_partition(const Instance& inst, const Partition& p) {
  std::vector<char> covered(inst.n(), 0);
  if (p.includes_special)
    for (Vertex v : inst.special()) covered[v] = 1;
  for (const VertexSet& b : p.blocks) {
    if (b.empty()) throw ValidityError("partition: empty block");
    for (Vertex v : b) {
      if (v < 0 || v >= inst.n()) throw ValidityError("partition: vertex out of range");
      if (covered[v]) throw ValidityError("partition: vertex covered twice");
      covered[v] = 1;
    }
    if (!inst.is_connected_subset(b)) throw ValidityError("partition: disconnected block");
  }
  for (Vertex v = 0; v < inst.n(); ++v)
    if (!covered[v]) throw ValidityError("partition: uncovered vertex");
}

Profile profile_of(const Instance& inst, const Partition& p) {
  Profile prof;
  for (const VertexSet& b : p.blocks) {
    switch (classify_subset(inst, b)) {
      case SubsetClass::Large: ++prof.large; break;
      case SubsetClass::Medium: ++prof.medium; break;
      case SubsetClass::Small: ++prof.small; break;
    }
  }
  return prof;
}

int rank_of_profile(const Profile& prof, RankConvention conv) {
  return conv == RankConvention::StrictAbove ? 1 + prof.large : 1 + prof.large + prof.medium;
}

int rank_of(const Instance& inst, const Partition& p, RankConvention conv) {
  if (inst.special().empty()) throw DomainError("rank_of: empty special subset");
  require_valid_partition(inst, p);
  return rank_of_profile(profile_of(inst, p), conv);
}

Rational percentile_of_profile(const Profile& prof) {
  int c = prof.blocks();
  if (c < 1) throw DomainError("percentile: undefined for zero blocks");
  // (l + .5 m + .5) / (c + 1) = (2l + m + 1) / (2(c + 1))
  return Rational(BigInt(2 * prof.large + prof.medium + 1), BigInt(2 * (c + 1)));
}

Rational percentile_of(const Instance& inst, const Partition& p) {
  if (inst.special().empty()) throw DomainError("percentile_of: empty special subset");
  require_valid_partition(inst, p);
  return percentile_of_profile(profile_of(inst, p));
}

CombineEffect combine_improves(const Rational& p0_percentile, const Profile& prof) {
  if (prof.blocks() < 2) throw DomainError("combine_improves: fewer than 2 blocks");
  if (prof.large == 0 && prof.medium == 0) return CombineEffect::Increases;
  // (l + .5m - 1)/(l + m + s - 1) = (2l + m - 2)/(2(c - 1))
  Rational fraction(BigInt(2 * prof.large + prof.medium - 2), BigInt(2 * (prof.blocks() - 1)));
  if (fraction > p0_percentile) return CombineEffect::Decreases;
  if (fraction < p0_percentile) return CombineEffect::Increases;
  return CombineEffect::Neutral;
}

}  // namespace rankrange
