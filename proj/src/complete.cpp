#include "rankrange/complete.hpp"

#include <algorithm>
#include <vector>

namespace rankrange {

namespace {

void require_complete(const Instance& inst) {
  if (!inst.is_complete()) throw CaseError("complete: instance graph is not complete");
  if (inst.special().empty()) throw CaseError("complete: empty special subset");
}

}  // namespace

ElementTier classify_element(const Rational& value, const Rational& special_value,
                             const Rational& threshold_c) {
  if (value > special_value) return ElementTier::LargeSingleton;
  if (value == special_value) return ElementTier::MediumSingleton;
  if (value + value >= special_value) return ElementTier::Intermediate;
  Rational gap = special_value - threshold_c;
  if (value >= gap) return ElementTier::Subintermediate;
  if (value + value >= gap) return ElementTier::Subsubintermediate;
  return ElementTier::OtherTiny;
}

int min_rank_complete(const Instance& inst) {
  require_complete(inst);
  for (Vertex v : inst.free_vertices())
    if (inst.mu(v) > inst.special_value()) return 2;
  return 1;
}

PercentileResult min_percentile_complete(const Instance& inst) {
  require_complete(inst);
  VertexSet free = inst.free_vertices();
  if (free.empty()) throw DomainError("min_percentile_complete: no free vertices");

  const Rational& t = inst.special_value();
  VertexSet larges, mediums, smalls;
  for (Vertex v : free) {
    if (inst.mu(v) > t)
      larges.push_back(v);
    else if (inst.mu(v) == t)
      mediums.push_back(v);
    else
      smalls.push_back(v);
  }
  long long l0 = static_cast<long long>(larges.size());
  long long m0 = static_cast<long long>(mediums.size());
  long long s0 = static_cast<long long>(smalls.size());

  // Folding the mediums into the merged large block trades their half-counts
  // for a smaller divisor; it pays off exactly under this condition.
  bool merge_mediums = (l0 >= 1 && s0 >= 1) || (s0 >= 2 && m0 * (s0 - 1) >= 2 * s0 + 1);

  PercentileResult res;
  VertexSet merged = larges;
  if (merge_mediums) merged.insert(merged.end(), mediums.begin(), mediums.end());
  if (merged.size() >= 2 || (merged.size() == 1 && !larges.empty())) {
    detail::canonicalize(merged);
    res.witness.blocks.push_back(merged);
  } else {
    for (Vertex v : merged) res.witness.blocks.push_back({v});
  }
  if (!merge_mediums)
    for (Vertex v : mediums) res.witness.blocks.push_back({v});
  for (Vertex v : smalls) res.witness.blocks.push_back({v});

  res.percentile = percentile_of(inst, res.witness);
  res.certified_optimal = true;
  return res;
}

namespace {

// One run of the pairing/seeding construction. The strict flag replaces every
// ">= mu(S*)" by "> mu(S*)", which is how the perturbed-measure preprocessing
// of the percentile reduction is realized with exact arithmetic.
RankResult rank_max_complete_core(const Instance& inst, bool strict) {
  require_complete(inst);
  const Rational& t = inst.special_value();
  const RankConvention conv = strict ? RankConvention::StrictAbove : RankConvention::AtLeast;

  auto counts = [&](const Rational& v) { return strict ? v > t : v >= t; };
  auto is_single = [&](const Rational& v) { return counts(v); };
  auto is_intermediate = [&](const Rational& v) {
    return !is_single(v) && (strict ? v + v > t : v + v >= t);
  };

  // Free vertices by descending measure, vertex id breaking ties.
  VertexSet free = inst.free_vertices();
  std::stable_sort(free.begin(), free.end(), [&](Vertex a, Vertex b) {
    if (inst.mu(a) != inst.mu(b)) return inst.mu(b) < inst.mu(a);
    return a < b;
  });

  std::vector<Vertex> singles, inter, tiny;
  for (Vertex v : free) {
    if (is_single(inst.mu(v)))
      singles.push_back(v);
    else if (is_intermediate(inst.mu(v)))
      inter.push_back(v);
    else
      tiny.push_back(v);
  }
  const long long r = static_cast<long long>(inter.size());

  RankResult best;
  best.rank = 0;

  // Candidate i values: even counts of paired smallest intermediates, scanned
  // from one below ceil(2r/3) (so the range is never empty) up to r.
  long long lo = std::max<long long>(0, (2 * r + 2) / 3 - 1);
  if (lo % 2 != 0) ++lo;
  for (long long i = lo; i <= r; i += 2) {
    const long long ns = r - i;  // seeds: the ns largest intermediates
    // Threshold c is the measure of the smallest seed.
    Rational c = ns > 0 ? inst.mu(inter[ns - 1]) : t;
    Rational gap = t - c;
    Rational half_gap = gap / Rational(2);

    std::vector<Vertex> t1, t2, t0;  // sub, subsub, everything smaller
    for (Vertex v : tiny) {
      if (inst.mu(v) >= gap)
        t1.push_back(v);
      else if (inst.mu(v) >= half_gap)
        t2.push_back(v);
      else
        t0.push_back(v);
    }
    // Ascending so "smallest first" is a pop from the front.
    std::reverse(t1.begin(), t1.end());
    std::reverse(t2.begin(), t2.end());

    const long long n1 = static_cast<long long>(t1.size());
    const long long n2 = static_cast<long long>(t2.size());

    for (long long z = 0; z <= std::min(ns, n2); ++z) {
      for (long long y = 0; y <= std::min(ns - z, (n2 - z) / 2); ++y) {
        for (long long x = 0; x <= std::min(ns - z - y, n1); ++x) {
          Partition p;
          for (Vertex v : singles) p.blocks.push_back({v});
          for (long long j = r - i; j + 1 < r; j += 2) {
            VertexSet pair = {inter[j], inter[j + 1]};
            detail::canonicalize(pair);
            p.blocks.push_back(std::move(pair));
          }

          struct Seed {
            VertexSet verts;
            Rational value;
          };
          std::vector<Seed> open;  // seeds still below the threshold
          auto start_seed = [&](long long j) {
            return Seed{{inter[j]}, inst.mu(inter[j])};
          };
          auto add_to = [&](Seed& s, Vertex v) {
            s.verts.push_back(v);
            s.value += inst.mu(v);
          };
          auto close_seed = [&](Seed& s) {
            detail::canonicalize(s.verts);
            p.blocks.push_back(std::move(s.verts));
          };

          long long used2 = 0;
          for (long long j = 0; j < z; ++j) {
            Seed s = start_seed(j);
            add_to(s, t2[used2++]);
            open.push_back(std::move(s));  // completed later from the pool
          }
          for (long long j = z; j < z + y; ++j) {
            Seed s = start_seed(j);
            add_to(s, t2[used2++]);
            add_to(s, t2[used2++]);
            close_seed(s);
          }
          for (long long j = z + y; j < z + y + x; ++j) {
            Seed s = start_seed(j);
            add_to(s, t1[j - z - y]);
            close_seed(s);
          }
          for (long long j = z + y + x; j < ns; ++j) p.blocks.push_back({inter[j]});

          // Leftover pool, largest first.
          std::vector<Vertex> pool;
          for (long long k = n1 - 1; k >= x; --k) pool.push_back(t1[k]);
          for (long long k = n2 - 1; k >= used2; --k) pool.push_back(t2[k]);
          for (Vertex v : t0) pool.push_back(v);
          std::stable_sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) {
            if (inst.mu(a) != inst.mu(b)) return inst.mu(b) < inst.mu(a);
            return a < b;
          });
          std::size_t next = 0;

          for (Seed& s : open) {
            while (!counts(s.value) && next < pool.size()) add_to(s, pool[next++]);
            close_seed(s);
          }
          while (next < pool.size()) {
            Seed s{{pool[next]}, inst.mu(pool[next])};
            ++next;
            while (!counts(s.value) && next < pool.size()) add_to(s, pool[next++]);
            close_seed(s);
          }

          int rank = rank_of(inst, p, conv);
          if (rank > best.rank) {
            best.rank = rank;
            best.witness = std::move(p);
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

RankResult rank_max_complete_approx(const Instance& inst) {
  return rank_max_complete_core(inst, false);
}

RankResult rank_max_complete_approx_strict(const Instance& inst) {
  return rank_max_complete_core(inst, true);
}

PercentileResult percentile_max_complete_approx(const Instance& inst) {
  require_complete(inst);
  VertexSet free = inst.free_vertices();
  if (free.empty()) throw DomainError("percentile_max_complete_approx: no free vertices");
  const Rational& t = inst.special_value();
  Rational total = inst.subset_value(free);

  PercentileResult res;
  if (total <= t) {
    // One block is the best possible: every partition is all-small (or this
    // single medium block), and fewer blocks means a higher percentile.
    res.witness.blocks.push_back(free);
    res.percentile = percentile_of(inst, res.witness);
    res.certified_optimal = true;
    return res;
  }

  RankResult rm = rank_max_complete_approx_strict(inst);
  std::vector<VertexSet> larges, rest;
  for (VertexSet& b : rm.witness.blocks) {
    if (inst.subset_value(b) > t)
      larges.push_back(std::move(b));
    else
      rest.push_back(std::move(b));
  }
  if (larges.empty()) {
    res.witness.blocks.push_back(free);  // mu(V \ S*) > mu(S*): one large block
  } else {
    for (const VertexSet& b : rest)
      larges.front().insert(larges.front().end(), b.begin(), b.end());
    detail::canonicalize(larges.front());
    res.witness.blocks = std::move(larges);
  }
  res.percentile = percentile_of(inst, res.witness);
  res.certified_optimal = false;
  return res;
}

}  // namespace rankrange
