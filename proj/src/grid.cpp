#include "rankrange/grid.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_map>

namespace rankrange {

namespace {
constexpr long long kUnreachable = std::numeric_limits<long long>::min();
}

GridInstance::GridInstance(int l_, int w_) : l(l_), w(w_) {
  if (l < 1 || w < 1) throw DomainError("grid: dimensions must be positive");
  vacant.assign(l * w, 0);
  mu.assign(l * w, Rational(1));
}

void GridInstance::set_special(const Rect& r) {
  has_special = true;
  special = r;
}

void GridInstance::allow_vacancy_set(std::vector<int> cells) {
  detail::canonicalize(cells);
  whitelist_all = false;
  allowed_vacancy_sets.push_back(std::move(cells));
}

bool GridInstance::rect_allowed(const Rect& r) const {
  std::vector<int> vac;
  for (int y = r.c; y <= r.d; ++y)
    for (int x = r.a; x <= r.b; ++x)
      if (is_vacant(x, y)) vac.push_back(idx(x, y));
  if (vac.empty()) return true;  // the closure rule: vacancy-free is always in R
  if (whitelist_all) return true;
  return std::find(allowed_vacancy_sets.begin(), allowed_vacancy_sets.end(), vac) !=
         allowed_vacancy_sets.end();
}

std::vector<int> GridInstance::live_cells(const Rect& r) const {
  std::vector<int> out;
  for (int y = r.c; y <= r.d; ++y)
    for (int x = r.a; x <= r.b; ++x)
      if (!is_vacant(x, y)) out.push_back(idx(x, y));
  return out;  // row-major scan is already sorted
}

std::vector<int> GridInstance::special_cells() const {
  if (!has_special) return {};
  return live_cells(special);
}

Rational GridInstance::cells_value(const std::vector<int>& cells) const {
  Rational total(0);
  for (int c : cells) total += mu[c];
  return total;
}

std::vector<int> GridInstance::vertex_map() const {
  std::vector<int> map(l * w, -1);
  int next = 0;
  for (int i = 0; i < l * w; ++i)
    if (!vacant[i]) map[i] = next++;
  return map;
}

VertexSet GridInstance::cells_to_vertices(const std::vector<int>& cells) const {
  auto map = vertex_map();
  VertexSet out;
  for (int c : cells) out.push_back(map[c]);
  detail::canonicalize(out);
  return out;
}

Instance GridInstance::to_instance() const {
  auto map = vertex_map();
  std::vector<Rational> vm;
  for (int i = 0; i < l * w; ++i)
    if (!vacant[i]) vm.push_back(mu[i]);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int y = 1; y <= w; ++y) {
    for (int x = 1; x <= l; ++x) {
      if (is_vacant(x, y)) continue;
      if (x < l && !is_vacant(x + 1, y)) edges.emplace_back(map[idx(x, y)], map[idx(x + 1, y)]);
      if (y < w && !is_vacant(x, y + 1)) edges.emplace_back(map[idx(x, y)], map[idx(x, y + 1)]);
    }
  }
  const int n = static_cast<int>(vm.size());
  return Instance(n, std::move(edges), std::move(vm), cells_to_vertices(special_cells()));
}

void GridInstance::validate() const {
  for (int i = 0; i < l * w; ++i)
    if (!vacant[i] && !(mu[i] > Rational(0)))
      throw DomainError("grid: live cell measure must be positive");
  if (has_special) {
    if (special.a < 1 || special.b > l || special.c < 1 || special.d > w ||
        special.a > special.b || special.c > special.d)
      throw DomainError("grid: special rectangle out of bounds");
    for (int y = special.c; y <= special.d; ++y)
      for (int x = special.a; x <= special.b; ++x)
        if (is_vacant(x, y)) throw DomainError("grid: special rectangle contains a vacancy");
  }
}

namespace {

int rect_key(const GridInstance& g, const Rect& r) {
  return ((r.a - 1) * g.l + (r.b - 1)) * g.w * g.w + (r.c - 1) * g.w + (r.d - 1);
}

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else
      return false;
  }
  return true;
}

// Option tags in back-pointer tables.
enum : int { kBaseEmpty = -1, kBaseSpecial = -2, kWhole = 0, kVCut = 1, kHCut = 2 };

struct RankSolver {
  const GridInstance& inst;
  bool maximize;
  RankConvention conv;
  std::vector<int> special_live;
  Rational t;

  struct Entry {
    bool done = false;
    bool feasible = false;
    int count = 0;
    int type = kBaseEmpty;
    int pos = 0;
  };
  std::unordered_map<int, Entry> memo;

  RankSolver(const GridInstance& g, Direction dir)
      : inst(g),
        maximize(dir == Direction::Max),
        conv(dir == Direction::Max ? RankConvention::AtLeast : RankConvention::StrictAbove),
        special_live(g.special_cells()),
        t(g.cells_value(special_live)) {}

  bool counts(const Rational& v) const {
    return conv == RankConvention::AtLeast ? v >= t : v > t;
  }

  const Entry& solve(const Rect& r) {
    Entry& e = memo[rect_key(inst, r)];
    if (e.done) return e;
    e.done = true;
    auto live = inst.live_cells(r);
    if (live.empty()) {
      e.feasible = true;
      e.type = kBaseEmpty;
      return e;
    }
    if (live == special_live) {
      e.feasible = true;
      e.type = kBaseSpecial;
      return e;
    }
    auto consider = [&](int count, int type, int pos) {
      if (!e.feasible || (maximize ? count > e.count : count < e.count)) {
        e.feasible = true;
        e.count = count;
        e.type = type;
        e.pos = pos;
      }
    };
    if (disjoint_sorted(live, special_live) && inst.rect_allowed(r))
      consider(counts(inst.cells_value(live)) ? 1 : 0, kWhole, 0);
    for (int x = r.a; x < r.b; ++x) {
      const Entry& left = solve({r.a, x, r.c, r.d});
      const Entry& right = solve({x + 1, r.b, r.c, r.d});
      if (left.feasible && right.feasible) consider(left.count + right.count, kVCut, x);
    }
    for (int y = r.c; y < r.d; ++y) {
      const Entry& top = solve({r.a, r.b, r.c, y});
      const Entry& bottom = solve({r.a, r.b, y + 1, r.d});
      if (top.feasible && bottom.feasible) consider(top.count + bottom.count, kHCut, y);
    }
    return e;
  }

  void reconstruct(const Rect& r, std::vector<VertexSet>& blocks) {
    const Entry& e = memo[rect_key(inst, r)];
    switch (e.type) {
      case kBaseEmpty:
      case kBaseSpecial:
        return;
      case kWhole:
        blocks.push_back(inst.cells_to_vertices(inst.live_cells(r)));
        return;
      case kVCut:
        reconstruct({r.a, e.pos, r.c, r.d}, blocks);
        reconstruct({e.pos + 1, r.b, r.c, r.d}, blocks);
        return;
      case kHCut:
        reconstruct({r.a, r.b, r.c, e.pos}, blocks);
        reconstruct({r.a, r.b, e.pos + 1, r.d}, blocks);
        return;
    }
  }
};

}  // namespace

RankResult grid_hier_rank(const GridInstance& inst, Direction direction) {
  inst.validate();
  if (!inst.has_special) throw CaseError("grid_hier_rank: no special rectangle");
  RankSolver solver(inst, direction);
  Rect full{1, inst.l, 1, inst.w};
  const auto& root = solver.solve(full);
  if (!root.feasible) throw InfeasibleError("grid_hier_rank: no hierarchical partition");
  RankResult res;
  res.rank = 1 + root.count;
  solver.reconstruct(full, res.witness.blocks);
  return res;
}

namespace {

struct PctSolver {
  const GridInstance& inst;
  bool maximize;
  std::vector<int> special_live;
  Rational t;

  struct Entry {
    bool done = false;
    std::vector<long long> g;                // g[k], half units
    std::vector<std::array<int, 3>> choice;  // {type, pos, k_left}
  };
  std::unordered_map<int, Entry> memo;

  PctSolver(const GridInstance& g, Direction dir)
      : inst(g),
        maximize(dir == Direction::Max),
        special_live(g.special_cells()),
        t(g.cells_value(special_live)) {}

  bool better(long long a, long long b) const {
    if (b == kUnreachable) return a != kUnreachable;
    if (a == kUnreachable) return false;
    return maximize ? a > b : a < b;
  }

  long long score2(const Rational& v) const { return v > t ? 2 : (v == t ? 1 : 0); }

  const Entry& solve(const Rect& r) {
    Entry& e = memo[rect_key(inst, r)];
    if (e.done) return e;
    e.done = true;
    auto live = inst.live_cells(r);
    const int cap = static_cast<int>(live.size());
    e.g.assign(cap + 1, kUnreachable);
    e.choice.assign(cap + 1, {kBaseEmpty, 0, 0});
    if (live.empty() || live == special_live) {
      e.g[0] = 0;
      e.choice[0] = {live.empty() ? kBaseEmpty : kBaseSpecial, 0, 0};
      return e;
    }
    auto consider = [&](int k, long long score, int type, int pos, int kleft) {
      if (better(score, e.g[k])) {
        e.g[k] = score;
        e.choice[k] = {type, pos, kleft};
      }
    };
    if (disjoint_sorted(live, special_live) && inst.rect_allowed(r))
      consider(1, score2(inst.cells_value(live)), kWhole, 0, 0);
    auto combine = [&](const Entry& lhs, const Entry& rhs, int type, int pos) {
      for (std::size_t kl = 0; kl < lhs.g.size(); ++kl) {
        if (lhs.g[kl] == kUnreachable) continue;
        for (std::size_t kr = 0; kr < rhs.g.size(); ++kr) {
          if (rhs.g[kr] == kUnreachable) continue;
          consider(static_cast<int>(kl + kr), lhs.g[kl] + rhs.g[kr], type, pos,
                   static_cast<int>(kl));
        }
      }
    };
    for (int x = r.a; x < r.b; ++x)
      combine(solve({r.a, x, r.c, r.d}), solve({x + 1, r.b, r.c, r.d}), kVCut, x);
    for (int y = r.c; y < r.d; ++y)
      combine(solve({r.a, r.b, r.c, y}), solve({r.a, r.b, y + 1, r.d}), kHCut, y);
    return e;
  }

  void reconstruct(const Rect& r, int k, std::vector<VertexSet>& blocks) {
    const Entry& e = memo[rect_key(inst, r)];
    auto [type, pos, kleft] = e.choice[k];
    switch (type) {
      case kBaseEmpty:
      case kBaseSpecial:
        return;
      case kWhole:
        blocks.push_back(inst.cells_to_vertices(inst.live_cells(r)));
        return;
      case kVCut:
        reconstruct({r.a, pos, r.c, r.d}, kleft, blocks);
        reconstruct({pos + 1, r.b, r.c, r.d}, k - kleft, blocks);
        return;
      case kHCut:
        reconstruct({r.a, r.b, r.c, pos}, kleft, blocks);
        reconstruct({r.a, r.b, pos + 1, r.d}, k - kleft, blocks);
        return;
    }
  }
};

}  // namespace

PercentileResult grid_hier_percentile(const GridInstance& inst, Direction direction) {
  inst.validate();
  if (!inst.has_special) throw CaseError("grid_hier_percentile: no special rectangle");
  PctSolver solver(inst, direction);
  Rect full{1, inst.l, 1, inst.w};
  const auto& root = solver.solve(full);
  PercentileResult res;
  int best_k = -1;
  for (std::size_t k = 1; k < root.g.size(); ++k) {
    if (root.g[k] == kUnreachable) continue;
    Rational value(BigInt(root.g[k] + 1), BigInt(2) * (static_cast<int>(k) + 1));
    bool take = best_k < 0 ||
                (direction == Direction::Max ? value > res.percentile : value < res.percentile);
    if (take) {
      res.percentile = value;
      best_k = static_cast<int>(k);
    }
  }
  if (best_k < 0) throw DomainError("grid_hier_percentile: no admissible partition");
  solver.reconstruct(full, best_k, res.witness.blocks);
  res.certified_optimal = true;
  return res;
}

namespace {

// Scores a list of blocks (cell-index lists) against a threshold.
Profile profile_of_cells(const GridInstance& inst, const std::vector<std::vector<int>>& blocks,
                         const Rational& t) {
  Profile prof;
  for (const auto& b : blocks) {
    switch (classify_value(inst.cells_value(b), t)) {
      case SubsetClass::Large: ++prof.large; break;
      case SubsetClass::Medium: ++prof.medium; break;
      case SubsetClass::Small: ++prof.small; break;
    }
  }
  return prof;
}

struct ObjectiveTracker {
  const GridInstance& inst;
  Objective objective;
  bool wants_rank, minimize;
  RankConvention conv;
  Rational t;
  OracleResult result;
  bool have = false;

  ObjectiveTracker(const GridInstance& g, Objective obj)
      : inst(g),
        objective(obj),
        wants_rank(obj == Objective::MinRank || obj == Objective::MaxRank),
        minimize(obj == Objective::MinRank || obj == Objective::MinPercentile),
        conv(default_convention(obj)),
        t(g.cells_value(g.special_cells())) {
    if (!g.has_special) throw CaseError("grid oracle: no special rectangle");
  }

  void offer(const std::vector<std::vector<int>>& blocks) {
    ++result.explored;
    if (!wants_rank && blocks.empty()) return;
    Profile prof = profile_of_cells(inst, blocks, t);
    Rational value =
        wants_rank ? Rational(rank_of_profile(prof, conv)) : percentile_of_profile(prof);
    if (!have || (minimize ? value < result.best_value : value > result.best_value)) {
      result.best_value = value;
      result.witness.blocks.clear();
      for (const auto& b : blocks) result.witness.blocks.push_back(inst.cells_to_vertices(b));
      have = true;
    }
  }

  OracleResult finish() {
    if (!have) throw DomainError("grid oracle: no admissible partition");
    return result;
  }
};

}  // namespace

OracleResult grid_free_rect_oracle(const GridInstance& inst, Objective objective) {
  inst.validate();
  if (inst.l * inst.w > 16) throw SizeError("grid_free_rect_oracle: more than 16 cells");
  ObjectiveTracker tracker(inst, objective);
  const auto special_live = inst.special_cells();

  std::vector<char> covered(inst.l * inst.w, 0);
  std::vector<std::vector<int>> blocks;

  std::function<void()> rec = [&]() {
    int first = -1;
    for (int i = 0; i < inst.l * inst.w; ++i) {
      if (!covered[i]) {
        first = i;
        break;
      }
    }
    if (first < 0) {
      tracker.offer(blocks);
      return;
    }
    int x0 = first % inst.l + 1, y0 = first / inst.l + 1;
    for (int b = x0; b <= inst.l; ++b) {
      if (covered[inst.idx(b, y0)]) break;  // wider rectangles only hit it again
      for (int d = y0; d <= inst.w; ++d) {
        Rect r{x0, b, y0, d};
        bool clash = false;
        for (int y = y0; y <= d && !clash; ++y)
          for (int x = x0; x <= b && !clash; ++x)
            if (covered[inst.idx(x, y)]) clash = true;
        if (clash) break;
        auto live = inst.live_cells(r);
        bool admissible;
        if (live.empty())
          admissible = true;
        else if (live == special_live)
          admissible = true;
        else
          admissible = disjoint_sorted(live, special_live) && inst.rect_allowed(r);
        if (admissible) {
          for (int y = y0; y <= d; ++y)
            for (int x = x0; x <= b; ++x) covered[inst.idx(x, y)] = 1;
          bool is_block = !live.empty() && live != special_live;
          if (is_block) blocks.push_back(live);
          rec();
          if (is_block) blocks.pop_back();
          for (int y = y0; y <= d; ++y)
            for (int x = x0; x <= b; ++x) covered[inst.idx(x, y)] = 0;
        }
      }
    }
  };
  rec();
  return tracker.finish();
}

namespace {

// Enumerates complete hierarchical decompositions; `whole_ok` gates the
// leave-whole option per subrectangle, `done` receives the leaf rectangles.
void enumerate_hier(const GridInstance& inst, const std::function<bool(const Rect&)>& whole_ok,
                    const std::function<void(const std::vector<Rect>&)>& done) {
  std::vector<Rect> leaves;
  std::function<void(std::vector<Rect>)> rec = [&](std::vector<Rect> pending) {
    if (pending.empty()) {
      done(leaves);
      return;
    }
    Rect r = pending.back();
    pending.pop_back();
    if (whole_ok(r)) {
      leaves.push_back(r);
      rec(pending);
      leaves.pop_back();
    }
    for (int x = r.a; x < r.b; ++x) {
      auto next = pending;
      next.push_back({r.a, x, r.c, r.d});
      next.push_back({x + 1, r.b, r.c, r.d});
      rec(std::move(next));
    }
    for (int y = r.c; y < r.d; ++y) {
      auto next = pending;
      next.push_back({r.a, r.b, r.c, y});
      next.push_back({r.a, r.b, y + 1, r.d});
      rec(std::move(next));
    }
  };
  rec({Rect{1, inst.l, 1, inst.w}});
}

}  // namespace

OracleResult grid_hier_oracle(const GridInstance& inst, Objective objective) {
  inst.validate();
  if (inst.l * inst.w > 16) throw SizeError("grid_hier_oracle: more than 16 cells");
  ObjectiveTracker tracker(inst, objective);
  const auto special_live = inst.special_cells();

  auto whole_ok = [&](const Rect& r) {
    auto live = inst.live_cells(r);
    if (live.empty() || live == special_live) return true;
    return disjoint_sorted(live, special_live) && inst.rect_allowed(r);
  };
  enumerate_hier(inst, whole_ok, [&](const std::vector<Rect>& leaf_rects) {
    std::vector<std::vector<int>> blocks;
    for (const Rect& r : leaf_rects) {
      auto live = inst.live_cells(r);
      if (live.empty() || live == special_live) continue;
      blocks.push_back(std::move(live));
    }
    tracker.offer(blocks);
  });
  return tracker.finish();
}

GerrymanderInstance::GerrymanderInstance(GridInstance g, std::vector<Rational> margins, int n,
                                         Rational rho_)
    : grid(std::move(g)), mu_r(std::move(margins)), n_districts(n), rho(std::move(rho_)) {
  validate();
}

void GerrymanderInstance::validate() const {
  grid.validate();
  if (grid.has_special) throw DomainError("gerrymander: S* must be absent");
  if (static_cast<int>(mu_r.size()) != grid.l * grid.w)
    throw DomainError("gerrymander: margin grid size mismatch");
  if (n_districts < 1) throw DomainError("gerrymander: need at least one district");
  if (rho < Rational(0) || !(rho < Rational(BigInt(1), BigInt(n_districts + 1))))
    throw DomainError("gerrymander: rho out of [0, 1/(N+1))");
  for (int i = 0; i < grid.l * grid.w; ++i) {
    if (grid.vacant[i]) continue;
    Rational abs = mu_r[i].sign() < 0 ? -mu_r[i] : mu_r[i];
    if (abs > grid.mu[i]) throw DomainError("gerrymander: |mu_R| exceeds mu");
  }
}

namespace {

struct GerrySolver {
  const GridInstance& grid;
  const GerrymanderInstance& inst;
  Rational lo, hi;

  struct Entry {
    bool done = false;
    bool feasible = false;
    int slate = 0;
    int type = kBaseEmpty;
    int pos = 0;
  };
  std::unordered_map<int, Entry> memo;

  explicit GerrySolver(const GerrymanderInstance& gi) : grid(gi.grid), inst(gi) {
    Rational total = grid.cells_value(grid.live_cells({1, grid.l, 1, grid.w}));
    Rational share = total / Rational(inst.n_districts);
    lo = (Rational(1) - inst.rho) * share;
    hi = (Rational(1) + inst.rho) * share;
  }

  Rational margin(const std::vector<int>& cells) const {
    Rational total(0);
    for (int c : cells) total += inst.mu_r[c];
    return total;
  }

  bool district_ok(const Rect& r, const std::vector<int>& live) const {
    if (!grid.rect_allowed(r)) return false;
    Rational pop = grid.cells_value(live);
    return lo <= pop && pop <= hi;
  }

  const Entry& solve(const Rect& r) {
    Entry& e = memo[rect_key(grid, r)];
    if (e.done) return e;
    e.done = true;
    auto live = grid.live_cells(r);
    if (live.empty()) {
      e.feasible = true;
      e.type = kBaseEmpty;
      return e;
    }
    auto consider = [&](int slate, int type, int pos) {
      if (!e.feasible || slate > e.slate) {
        e.feasible = true;
        e.slate = slate;
        e.type = type;
        e.pos = pos;
      }
    };
    if (district_ok(r, live)) consider(margin(live).sign() >= 0 ? 1 : 0, kWhole, 0);
    for (int x = r.a; x < r.b; ++x) {
      const Entry& left = solve({r.a, x, r.c, r.d});
      const Entry& right = solve({x + 1, r.b, r.c, r.d});
      if (left.feasible && right.feasible) consider(left.slate + right.slate, kVCut, x);
    }
    for (int y = r.c; y < r.d; ++y) {
      const Entry& top = solve({r.a, r.b, r.c, y});
      const Entry& bottom = solve({r.a, r.b, y + 1, r.d});
      if (top.feasible && bottom.feasible) consider(top.slate + bottom.slate, kHCut, y);
    }
    return e;
  }

  void reconstruct(const Rect& r, GerrymanderResult& out) {
    const Entry& e = memo[rect_key(grid, r)];
    switch (e.type) {
      case kBaseEmpty:
        return;
      case kWhole:
        out.district_rects.push_back(r);
        out.districts.blocks.push_back(grid.cells_to_vertices(grid.live_cells(r)));
        return;
      case kVCut:
        reconstruct({r.a, e.pos, r.c, r.d}, out);
        reconstruct({e.pos + 1, r.b, r.c, r.d}, out);
        return;
      case kHCut:
        reconstruct({r.a, r.b, r.c, e.pos}, out);
        reconstruct({r.a, r.b, e.pos + 1, r.d}, out);
        return;
    }
  }
};

}  // namespace

GerrymanderResult gerrymander_hier(const GerrymanderInstance& inst) {
  inst.validate();
  GerrySolver solver(inst);
  Rect full{1, inst.grid.l, 1, inst.grid.w};
  const auto& root = solver.solve(full);
  GerrymanderResult res;
  if (!root.feasible) return res;  // infeasible, distinct from slate 0
  res.feasible = true;
  res.slate = root.slate;
  solver.reconstruct(full, res);
  return res;
}

GerrymanderResult gerrymander_bruteforce(const GerrymanderInstance& inst) {
  inst.validate();
  if (inst.grid.l * inst.grid.w > 16) throw SizeError("gerrymander_bruteforce: more than 16 cells");
  GerrySolver helper(inst);  // reuse window and margin helpers only
  GerrymanderResult res;

  auto whole_ok = [&](const Rect& r) {
    auto live = inst.grid.live_cells(r);
    if (live.empty()) return true;
    return helper.district_ok(r, live);
  };
  enumerate_hier(inst.grid, whole_ok, [&](const std::vector<Rect>& leaves) {
    int slate = 0;
    std::vector<Rect> rects;
    for (const Rect& r : leaves) {
      auto live = inst.grid.live_cells(r);
      if (live.empty()) continue;
      rects.push_back(r);
      if (helper.margin(live).sign() >= 0) ++slate;
    }
    if (!res.feasible || slate > res.slate) {
      res.feasible = true;
      res.slate = slate;
      res.district_rects = rects;
      res.districts.blocks.clear();
      for (const Rect& r : rects)
        res.districts.blocks.push_back(inst.grid.cells_to_vertices(inst.grid.live_cells(r)));
    }
  });
  return res;
}

}  // namespace rankrange
