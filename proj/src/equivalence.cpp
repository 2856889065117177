#include "rankrange/equivalence.hpp"

#include <algorithm>

namespace rankrange {

EquivalenceInstance::EquivalenceInstance(Instance b, std::vector<VertexSet> cls)
    : base(std::move(b)), classes(std::move(cls)) {
  std::vector<char> covered(base.n(), 0);
  for (Vertex v : base.special()) covered[v] = 1;
  for (auto& c : classes) {
    detail::canonicalize(c);
    if (c.empty()) throw DomainError("equivalence: empty class");
    for (Vertex v : c) {
      if (v < 0 || v >= base.n() || covered[v])
        throw DomainError("equivalence: classes must partition V \\ S*");
      covered[v] = 1;
    }
  }
  for (Vertex v = 0; v < base.n(); ++v)
    if (!covered[v]) throw DomainError("equivalence: vertex in no class");
}

namespace {

Profile profile_of_blocks(const Instance& inst, const std::vector<VertexSet>& blocks) {
  Profile prof;
  for (const auto& b : blocks) {
    switch (classify_value(inst.subset_value(b), inst.special_value())) {
      case SubsetClass::Large: ++prof.large; break;
      case SubsetClass::Medium: ++prof.medium; break;
      case SubsetClass::Small: ++prof.small; break;
    }
  }
  return prof;
}

void require_special(const Instance& inst) {
  if (inst.special().empty()) throw DomainError("equivalence: empty special subset");
}

}  // namespace

RankResult eq_rank_min(const EquivalenceInstance& inst) {
  require_special(inst.base);
  const Rational& t = inst.base.special_value();
  RankResult res;
  for (const auto& cls : inst.classes) {
    bool has_large = std::any_of(cls.begin(), cls.end(),
                                 [&](Vertex v) { return inst.base.mu(v) > t; });
    if (has_large)
      res.witness.blocks.push_back(cls);
    else
      for (Vertex v : cls) res.witness.blocks.push_back({v});
  }
  res.rank = rank_of_profile(profile_of_blocks(inst.base, res.witness.blocks),
                             RankConvention::StrictAbove);
  return res;
}

RankResult eq_rank_max(const EquivalenceInstance& inst) {
  require_special(inst.base);
  const Rational& t = inst.base.special_value();
  RankResult res;
  for (const auto& cls : inst.classes) {
    int counting = static_cast<int>(
        std::count_if(cls.begin(), cls.end(), [&](Vertex v) { return inst.base.mu(v) >= t; }));
    if (counting <= 1)
      res.witness.blocks.push_back(cls);
    else
      for (Vertex v : cls) res.witness.blocks.push_back({v});
  }
  res.rank = rank_of_profile(profile_of_blocks(inst.base, res.witness.blocks),
                             RankConvention::AtLeast);
  return res;
}

PercentileResult eq_percentile_opt(const EquivalenceInstance& inst, Direction direction) {
  require_special(inst.base);
  if (inst.base.free_vertices().empty())
    throw DomainError("eq_percentile_opt: no free vertices");
  const bool maximize = direction == Direction::Max;

  std::vector<char> merged(inst.classes.size(), 0);
  auto current_blocks = [&]() {
    std::vector<VertexSet> blocks;
    for (std::size_t i = 0; i < inst.classes.size(); ++i) {
      if (merged[i])
        blocks.push_back(inst.classes[i]);
      else
        for (Vertex v : inst.classes[i]) blocks.push_back({v});
    }
    return blocks;
  };

  Rational p = percentile_of_profile(profile_of_blocks(inst.base, current_blocks()));
  while (true) {
    // Most extreme qualifying class first: the fraction (l + 0.5m - 1) /
    // (l + m + s - 1) of its singleton profile drives Lemma 2's criterion.
    int pick = -1;
    Rational pick_fraction;
    for (std::size_t i = 0; i < inst.classes.size(); ++i) {
      if (merged[i] || inst.classes[i].size() < 2) continue;
      std::vector<VertexSet> singles;
      for (Vertex v : inst.classes[i]) singles.push_back({v});
      Profile prof = profile_of_blocks(inst.base, singles);
      Rational fraction(BigInt(2 * prof.large + prof.medium - 2),
                        BigInt(2 * (prof.blocks() - 1)));
      bool qualifies = maximize ? fraction < p : fraction > p;
      if (!qualifies) continue;
      bool extreme = pick < 0 || (maximize ? fraction < pick_fraction : fraction > pick_fraction);
      if (extreme) {
        pick = static_cast<int>(i);
        pick_fraction = fraction;
      }
    }
    if (pick < 0) break;
    merged[pick] = 1;
    p = percentile_of_profile(profile_of_blocks(inst.base, current_blocks()));
  }

  PercentileResult res;
  res.percentile = p;
  res.witness.blocks = current_blocks();
  res.certified_optimal = true;
  return res;
}

OracleResult eq_bruteforce(const EquivalenceInstance& inst, Objective objective) {
  require_special(inst.base);
  const bool wants_rank = objective == Objective::MinRank || objective == Objective::MaxRank;
  const bool minimize = objective == Objective::MinRank || objective == Objective::MinPercentile;
  const RankConvention conv = default_convention(objective);
  const std::size_t m = inst.classes.size();
  if (m > 20) throw SizeError("eq_bruteforce: too many classes");

  OracleResult result;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    std::vector<VertexSet> blocks;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t(1) << i))
        blocks.push_back(inst.classes[i]);
      else
        for (Vertex v : inst.classes[i]) blocks.push_back({v});
    }
    ++result.explored;
    if (!wants_rank && blocks.empty()) continue;
    Profile prof = profile_of_blocks(inst.base, blocks);
    Rational value =
        wants_rank ? Rational(rank_of_profile(prof, conv)) : percentile_of_profile(prof);
    if (!have || (minimize ? value < result.best_value : value > result.best_value)) {
      result.best_value = value;
      result.witness.blocks = std::move(blocks);
      have = true;
    }
  }
  if (!have) throw DomainError("eq_bruteforce: no admissible partition");
  return result;
}

}  // namespace rankrange
