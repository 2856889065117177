// Acceptance gate: one line per criterion, PASS or FAIL, deterministic seeds.
// Returns nonzero when any criterion fails.

#include <chrono>
#include <iostream>
#include <numeric>
#include <string>

#include "helpers.hpp"
#include "reference.hpp"
#include "rankrange/complete.hpp"
#include "rankrange/epa.hpp"
#include "rankrange/equivalence.hpp"
#include "rankrange/grid.hpp"
#include "rankrange/linear.hpp"
#include "rankrange/oracle.hpp"
#include "rankrange/tree.hpp"
#include "rankrange/uniform.hpp"

using namespace rankrange;
using rrtest::Rng;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << number << " (" << name << "): " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int build_subtree(CategoryTree& tree, Rng& rng, int parent, int leaf_budget) {
  if (leaf_budget == 1 || (parent >= 0 && rrtest::rnd_int(rng, 0, 2) == 0))
    return add_leaf(tree, parent, rrtest::rnd_mu(rng));
  int node = add_category(tree, parent);
  int kids = rrtest::rnd_int(rng, 2, std::min(leaf_budget, 3));
  int remaining = leaf_budget;
  for (int i = 0; i < kids; ++i) {
    int slots_left = kids - i - 1;
    int budget = i + 1 == kids ? remaining : rrtest::rnd_int(rng, 1, remaining - slots_left);
    build_subtree(tree, rng, node, budget);
    remaining -= budget;
  }
  return node;
}

CategoryTree rnd_tree(Rng& rng, int max_leaves) {
  CategoryTree tree;
  build_subtree(tree, rng, -1, rrtest::rnd_int(rng, 2, max_leaves));
  tree.special_node = rrtest::rnd_int(rng, 1, static_cast<int>(tree.nodes.size()) - 1);
  tree.validate();
  return tree;
}

ItemClasses singleton_classes(const CategoryTree& tree) {
  ItemClasses cls;
  VertexSet special = tree.subtree_leaves(tree.special_node);
  for (int u = 0; u < static_cast<int>(tree.nodes.size()); ++u)
    if (tree.is_leaf(u) && !detail::contains(special, tree.nodes[u].leaf_vertex))
      cls.classes.push_back({tree.nodes[u].leaf_vertex});
  return cls;
}

GridInstance rnd_grid(Rng& rng, int max_cells, bool with_special) {
  const std::pair<int, int> shapes[] = {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2},
                                        {3, 3}, {4, 3}, {2, 3}, {12, 1}, {7, 1}};
  for (;;) {
    auto [l, w] = shapes[rrtest::rnd_int(rng, 0, 9)];
    if (l * w > max_cells) continue;
    GridInstance g(l, w);
    for (int y = 1; y <= w; ++y)
      for (int x = 1; x <= l; ++x) {
        g.set_mu(x, y, rrtest::rnd_mu(rng));
        if (rrtest::rnd_int(rng, 0, 7) == 0) g.set_vacant(x, y);
      }
    if (with_special) {
      int a = rrtest::rnd_int(rng, 1, l), b = rrtest::rnd_int(rng, a, std::min(l, a + 2));
      int c = rrtest::rnd_int(rng, 1, w), d = rrtest::rnd_int(rng, c, w);
      Rect s{a, b, c, d};
      bool clean = true;
      for (int y = c; y <= d && clean; ++y)
        for (int x = a; x <= b && clean; ++x) clean = !g.is_vacant(x, y);
      if (!clean) continue;
      g.set_special(s);
    }
    int live = 0, special_live = with_special ? static_cast<int>(g.special_cells().size()) : 0;
    for (char v : g.vacant) live += !v;
    if (live - special_live < 1 || (with_special && special_live == 0)) continue;
    return g;
  }
}

// ---------------------------------------------------------------- criterion 1

void criterion_table() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    CrtTree crt = parse_crt_file(RR_DATA_DIR "/epa_crt_2022.txt");
    check_crt_consistency(crt);
    struct Expected {
      const char* code;
      int min_rank, max_rank;
      const char* min_pct, *max_pct;
    };
    const Expected expected[] = {
        {"1.A.3.b", 1, 2, "0.40", "11.54"},  {"1.A.3.a", 7, 13, "7.39", "67.86"},
        {"2.A.1", 5, 25, "8.46", "71.05"},   {"2.F.1", 3, 13, "4.72", "44.74"},
        {"3", 2, 6, "2.34", "50.00"},        {"3.B", 6, 15, "8.87", "71.88"},
    };
    std::vector<std::string> targets;
    for (const auto& e : expected) targets.push_back(e.code);
    auto rows = table1_report(crt, targets);
    ok = rows.size() == 6;
    for (std::size_t i = 0; ok && i < rows.size(); ++i) {
      ok = rows[i].code == expected[i].code && rows[i].min_rank == expected[i].min_rank &&
           rows[i].max_rank == expected[i].max_rank &&
           rows[i].min_pct_display == expected[i].min_pct &&
           rows[i].max_pct_display == expected[i].max_pct;
      if (!ok) detail = std::string("row mismatch at ") + expected[i].code;
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double secs = seconds_since(start);
  if (secs >= 10.0) {
    ok = false;
    detail = "too slow";
  }
  report(1, "inventory table reproduction", ok, detail);
}

// ---------------------------------------------------------------- criterion 2

void criterion_oracle_equivalence() {
  bool ok = true;
  std::string detail;
  auto fail = [&](const char* family) {
    ok = false;
    if (detail.empty()) detail = family;
  };

  {  // complete graphs: both minimization solvers are exact
    Rng rng(21001);
    for (int it = 0; it < 500 && ok; ++it) {
      int n = rrtest::rnd_int(rng, 2, 8);
      Instance inst = rrtest::rnd_complete_instance(rng, n, rrtest::rnd_int(rng, 1, n - 1));
      if (min_rank_complete(inst) !=
          exact_optimum(inst, Objective::MinRank, RankConvention::StrictAbove).rank())
        fail("complete/min-rank");
      if (min_percentile_complete(inst).percentile !=
          exact_optimum(inst, Objective::MinPercentile, RankConvention::StrictAbove).best_value)
        fail("complete/min-pct");
    }
  }
  {  // linear components: all four solvers are exact
    Rng rng(21002);
    for (int it = 0; it < 500 && ok; ++it) {
      int n = rrtest::rnd_int(rng, 2, 9);
      Instance inst = rrtest::rnd_path_instance(rng, n, rrtest::rnd_int(rng, 1, n - 1));
      if (greedy_rank_min(inst).rank !=
          exact_optimum(inst, Objective::MinRank, RankConvention::StrictAbove).rank())
        fail("linear/min-rank");
      if (rank_max_linear(inst, RankConvention::AtLeast).rank !=
          exact_optimum(inst, Objective::MaxRank, RankConvention::AtLeast).rank())
        fail("linear/max-rank");
      if (percentile_dp_linear(inst, Direction::Min).percentile !=
          exact_optimum(inst, Objective::MinPercentile, RankConvention::StrictAbove).best_value)
        fail("linear/min-pct");
      if (percentile_dp_linear(inst, Direction::Max).percentile !=
          exact_optimum(inst, Objective::MaxPercentile, RankConvention::AtLeast).best_value)
        fail("linear/max-pct");
    }
  }
  {  // uniform circulant
    Rng rng(21003);
    for (int it = 0; it < 500 && ok; ++it) {
      int np = rrtest::rnd_int(rng, 2, 9);
      int k = rrtest::rnd_int(rng, 2, 4);
      std::vector<int> jumps;
      for (int s = 1; s <= np / 2; ++s)
        if (rrtest::rnd_int(rng, 0, 1)) jumps.push_back(s);
      CirculantSpec spec{np, jumps};
      if (!spec.is_connected()) {
        --it;
        continue;
      }
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (int a = 0; a < np; ++a)
        for (int b = a + 1; b < np; ++b)
          if (spec.has_edge(a, b)) edges.emplace_back(a, b);
      for (int i = 0; i + 1 < k; ++i) edges.emplace_back(np + i, np + i + 1);
      edges.emplace_back(0, np);
      VertexSet special;
      for (int i = 0; i < k; ++i) special.push_back(np + i);
      Instance inst(np + k, std::move(edges), std::vector<Rational>(np + k, Rational(1)),
                    std::move(special));
      auto mins = uniform_min_solutions(inst);
      if (mins.min_rank !=
          exact_optimum(inst, Objective::MinRank, RankConvention::StrictAbove).rank())
        fail("uniform/min-rank");
      if (mins.min_percentile !=
          exact_optimum(inst, Objective::MinPercentile, RankConvention::StrictAbove).best_value)
        fail("uniform/min-pct");
      if (rank_max_uniform_circulant(inst, spec, k).rank !=
          exact_optimum(inst, Objective::MaxRank, RankConvention::AtLeast).rank())
        fail("uniform/max-rank");
      if (percentile_max_uniform_circulant(inst, spec, k).percentile !=
          exact_optimum(inst, Objective::MaxPercentile, RankConvention::AtLeast).best_value)
        fail("uniform/max-pct");
    }
  }
  {  // equivalence classes
    Rng rng(21004);
    for (int it = 0; it < 500 && ok; ++it) {
      int n = rrtest::rnd_int(rng, 2, 9);
      Instance base = rrtest::rnd_complete_instance(rng, n, rrtest::rnd_int(rng, 1, n - 1));
      auto classes = rrtest::rnd_set_partition(rng, base.free_vertices());
      EquivalenceInstance inst(std::move(base), std::move(classes));
      if (Rational(eq_rank_min(inst).rank) != eq_bruteforce(inst, Objective::MinRank).best_value)
        fail("equivalence/min-rank");
      if (Rational(eq_rank_max(inst).rank) != eq_bruteforce(inst, Objective::MaxRank).best_value)
        fail("equivalence/max-rank");
      if (eq_percentile_opt(inst, Direction::Min).percentile !=
          eq_bruteforce(inst, Objective::MinPercentile).best_value)
        fail("equivalence/min-pct");
      if (eq_percentile_opt(inst, Direction::Max).percentile !=
          eq_bruteforce(inst, Objective::MaxPercentile).best_value)
        fail("equivalence/max-pct");
    }
  }
  {  // category trees (singleton classes)
    Rng rng(21005);
    for (int it = 0; it < 500 && ok; ++it) {
      CategoryTree tree = rnd_tree(rng, 8);
      ItemClasses cls = singleton_classes(tree);
      if (cls.classes.empty()) {
        --it;
        continue;
      }
      if (Rational(tree_rank_min(tree).rank) !=
          tree_general_bruteforce(tree, cls, Objective::MinRank).best_value)
        fail("hierarchy/min-rank");
      if (Rational(tree_rank_max(tree).rank) !=
          tree_general_bruteforce(tree, cls, Objective::MaxRank).best_value)
        fail("hierarchy/max-rank");
      if (tree_percentile_dp(tree, Direction::Min).percentile !=
          tree_general_bruteforce(tree, cls, Objective::MinPercentile).best_value)
        fail("hierarchy/min-pct");
      if (tree_percentile_dp(tree, Direction::Max).percentile !=
          tree_general_bruteforce(tree, cls, Objective::MaxPercentile).best_value)
        fail("hierarchy/max-pct");
    }
  }
  {  // grid hierarchies
    Rng rng(21006);
    for (int it = 0; it < 500 && ok; ++it) {
      GridInstance g = rnd_grid(rng, 9, true);
      if (Rational(grid_hier_rank(g, Direction::Min).rank) !=
          grid_hier_oracle(g, Objective::MinRank).best_value)
        fail("grid/min-rank");
      if (Rational(grid_hier_rank(g, Direction::Max).rank) !=
          grid_hier_oracle(g, Objective::MaxRank).best_value)
        fail("grid/max-rank");
      if (grid_hier_percentile(g, Direction::Min).percentile !=
          grid_hier_oracle(g, Objective::MinPercentile).best_value)
        fail("grid/min-pct");
      if (grid_hier_percentile(g, Direction::Max).percentile !=
          grid_hier_oracle(g, Objective::MaxPercentile).best_value)
        fail("grid/max-pct");
    }
  }
  report(2, "oracle equivalence, 500 instances per family", ok, detail);
}

// ---------------------------------------------------------------- criterion 3

void criterion_approximations() {
  bool ok = true;
  std::string detail;
  {  // complete rank maximization: OPT <= (3/2) ALG + 1
    Rng rng(23001);
    for (int it = 0; it < 500 && ok; ++it) {
      int n = rrtest::rnd_int(rng, 2, 10);
      Instance inst = rrtest::rnd_complete_instance(rng, n, rrtest::rnd_int(rng, 1, n - 1));
      RankResult alg = rank_max_complete_approx(inst);
      int opt = exact_optimum(inst, Objective::MaxRank, RankConvention::AtLeast).rank();
      if (!(alg.rank <= opt && 2 * opt <= 3 * alg.rank + 2)) {
        ok = false;
        detail = "rank-max bound";
      }
    }
  }
  {  // percentile maximization via exact rank maximization
    Rng rng(23002);
    auto oracle_rank_max = [](const Instance& g, RankConvention conv) {
      return exact_optimum(g, Objective::MaxRank, conv).witness;
    };
    for (int it = 0; it < 500 && ok; ++it) {
      int n = rrtest::rnd_int(rng, 2, 8);
      Instance inst = rrtest::rnd_general_instance(rng, n, rrtest::rnd_int(rng, 1, n - 1));
      PercentileResult alg = percentile_max_2approx(inst, oracle_rank_max);
      Rational opt =
          exact_optimum(inst, Objective::MaxPercentile, RankConvention::AtLeast).best_value;
      if (!(alg.percentile <= opt && alg.percentile * Rational(2) >= opt)) {
        ok = false;
        detail = "pct-max half bound";
      }
      if (opt >= Rational(BigInt(1), BigInt(2)) && alg.percentile != opt) {
        ok = false;
        detail = "pct-max exact recovery";
      }
    }
  }
  report(3, "approximation guarantees", ok, detail);
}

// ---------------------------------------------------------------- criterion 4

void criterion_hamiltonian() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  long long checked = 0;
  for (int n = 1; n <= 40 && ok; ++n) {
    int half = n / 2;
    std::vector<std::vector<int>> sets;
    for (int a = 1; a <= half; ++a) {
      sets.push_back({a});
      for (int b = a + 1; b <= half; ++b) {
        sets.push_back({a, b});
        for (int c = b + 1; c <= half; ++c) sets.push_back({a, b, c});
      }
    }
    for (const auto& jumps : sets) {
      int g = n;
      for (int s : jumps) g = std::gcd(g, s);
      if (g != 1) continue;
      CirculantSpec spec{n, jumps};
      std::vector<int> path = circulant_hamiltonian_path(spec);
      ++checked;
      std::vector<char> seen(n, 0);
      bool good = static_cast<int>(path.size()) == n;
      for (std::size_t i = 0; good && i < path.size(); ++i) {
        good = path[i] >= 0 && path[i] < n && !seen[path[i]];
        if (good) seen[path[i]] = 1;
        if (good && i + 1 < path.size()) good = spec.has_edge(path[i], path[i + 1]);
      }
      if (!good) {
        ok = false;
        detail = "n=" + std::to_string(n);
        break;
      }
    }
  }
  double secs = seconds_since(start);
  if (secs >= 30.0) {
    ok = false;
    detail = "too slow";
  }
  report(4, "hamiltonian paths, all circulants n <= 40 with <= 3 jumps", ok,
         detail.empty() ? std::to_string(checked) + " graphs" : detail);
}

// ---------------------------------------------------------------- criterion 5

void criterion_recurrences() {
  bool ok = true;
  std::string detail;
  {  // linear, single segment, n <= 8
    Rng rng(25001);
    for (int it = 0; it < 200 && ok; ++it) {
      int n = rrtest::rnd_int(rng, 2, 8);
      int k = rrtest::rnd_int(rng, 1, n - 1);
      Instance inst = rrtest::rnd_path_instance(rng, n, k, true);
      std::vector<Vertex> seg;
      for (Vertex v = k; v < n; ++v) seg.push_back(v);
      for (Direction dir : {Direction::Min, Direction::Max})
        if (percentile_dp_linear(inst, dir).percentile !=
            rrtest::literal_line_percentile(inst, seg, dir)) {
          ok = false;
          detail = "linear";
        }
    }
  }
  {  // trees, <= 8 leaves
    Rng rng(25002);
    for (int it = 0; it < 200 && ok; ++it) {
      CategoryTree tree = rnd_tree(rng, 8);
      if (singleton_classes(tree).classes.empty()) continue;
      for (Direction dir : {Direction::Min, Direction::Max})
        if (tree_percentile_dp(tree, dir).percentile !=
            rrtest::literal_tree_percentile(tree, dir)) {
          ok = false;
          detail = "tree";
        }
    }
  }
  {  // grids, <= 2 x 4
    Rng rng(25003);
    for (int it = 0; it < 200 && ok; ++it) {
      int l = rrtest::rnd_int(rng, 2, 4), w = rrtest::rnd_int(rng, 1, 2);
      GridInstance g(l, w);
      for (int y = 1; y <= w; ++y)
        for (int x = 1; x <= l; ++x) g.set_mu(x, y, rrtest::rnd_mu(rng));
      int a = rrtest::rnd_int(rng, 1, l), c = rrtest::rnd_int(rng, 1, w);
      if (l * w - 1 < 1) continue;
      g.set_special({a, a, c, c});
      for (Direction dir : {Direction::Min, Direction::Max})
        if (grid_hier_percentile(g, dir).percentile != rrtest::LiteralGrid(g, dir).solve()) {
          ok = false;
          detail = "grid";
        }
    }
  }
  report(5, "normalized reference recurrences", ok, detail);
}

// ---------------------------------------------------------------- criterion 6

void criterion_gerrymander() {
  bool ok = true;
  std::string detail;
  Rng rng(26001);
  int draws = 0, feasible = 0;
  while (draws < 200 && ok) {
    GridInstance g = rnd_grid(rng, 12, /*with_special=*/false);
    int n_d = rrtest::rnd_int(rng, 2, 3);
    Rational rho(BigInt(rrtest::rnd_int(rng, 0, 1)), BigInt(2 * (n_d + 1)));
    std::vector<Rational> margins(g.l * g.w, Rational(0));
    for (int i = 0; i < g.l * g.w; ++i) {
      if (g.vacant[i]) continue;
      margins[i] = Rational(rrtest::rnd_int(rng, 0, 2) - 1) * g.mu[i];
    }
    GerrymanderInstance inst(g, margins, n_d, rho);
    ++draws;
    GerrymanderResult fast = gerrymander_hier(inst);
    GerrymanderResult slow = gerrymander_bruteforce(inst);
    if (fast.feasible != slow.feasible) {
      ok = false;
      detail = "feasibility mismatch";
      break;
    }
    if (!fast.feasible) continue;
    ++feasible;
    if (fast.slate != slow.slate) {
      ok = false;
      detail = "slate mismatch";
      break;
    }
    if (static_cast<int>(fast.district_rects.size()) != n_d) {
      ok = false;
      detail = "district count";
      break;
    }
    Rational target = g.cells_value(g.live_cells({1, g.l, 1, g.w})) / Rational(n_d);
    for (const Rect& r : fast.district_rects) {
      Rational pop = g.cells_value(g.live_cells(r));
      if (pop < (Rational(1) - rho) * target || pop > (Rational(1) + rho) * target) {
        ok = false;
        detail = "population window";
      }
    }
  }
  report(6, "gerrymandering validity, 200 draws", ok,
         ok ? std::to_string(feasible) + " feasible" : detail);
}

// ---------------------------------------------------------------- criterion 7

void criterion_sandwich() {
  bool ok = true;
  std::string detail;
  Rng rng(27001);
  for (int it = 0; it < 200 && ok; ++it) {
    GridInstance g = rnd_grid(rng, 12, true);
    if (grid_free_rect_oracle(g, Objective::MinRank).best_value >
            Rational(grid_hier_rank(g, Direction::Min).rank) ||
        Rational(grid_hier_rank(g, Direction::Max).rank) >
            grid_free_rect_oracle(g, Objective::MaxRank).best_value ||
        grid_free_rect_oracle(g, Objective::MinPercentile).best_value >
            grid_hier_percentile(g, Direction::Min).percentile ||
        grid_hier_percentile(g, Direction::Max).percentile >
            grid_free_rect_oracle(g, Objective::MaxPercentile).best_value) {
      ok = false;
      detail = "iteration " + std::to_string(it);
    }
  }
  report(7, "hierarchical optima inside free-tiling bounds, 200 instances", ok, detail);
}

// ---------------------------------------------------------------- criterion 8

void criterion_core_lemmas() {
  bool ok = true;
  std::string detail;
  {  // mediant bounds
    Rng rng(28001);
    for (int it = 0; it < 10000 && ok; ++it) {
      Rational x(BigInt(rrtest::rnd_int(rng, -60, 60)), BigInt(rrtest::rnd_int(rng, 1, 60)));
      Rational y(BigInt(rrtest::rnd_int(rng, -60, 60)), BigInt(rrtest::rnd_int(rng, 1, 60)));
      if (y < x) std::swap(x, y);
      Rational m = mediant_between(x, y);
      if (!(x <= m && m <= y) || (x < y && !(x < m && m < y))) {
        ok = false;
        detail = "mediant";
      }
    }
  }
  {  // merge direction
    Rng rng(28002);
    auto pct = [](int l, int m, int s) {
      Profile prof;
      prof.large = l;
      prof.medium = m;
      prof.small = s;
      return percentile_of_profile(prof);
    };
    for (int it = 0; it < 10000 && ok; ++it) {
      int l = rrtest::rnd_int(rng, 1, 4);
      int m = rrtest::rnd_int(rng, 0, 4);
      int s = rrtest::rnd_int(rng, 0, 4);
      if (l + m + s < 2) continue;
      int L = l + rrtest::rnd_int(rng, 0, 3);
      int M = m + rrtest::rnd_int(rng, 0, 3);
      int S = s + rrtest::rnd_int(rng, 0, 3);
      Rational before = pct(L, M, S);
      Rational after = pct(L - l + 1, M - m, S - s);
      Profile merged;
      merged.large = l;
      merged.medium = m;
      merged.small = s;
      CombineEffect effect = combine_improves(before, merged);
      bool match = (after < before && effect == CombineEffect::Decreases) ||
                   (after > before && effect == CombineEffect::Increases) ||
                   (after == before && effect == CombineEffect::Neutral);
      if (!match) {
        ok = false;
        detail = "merge direction";
      }
    }
  }
  report(8, "core lemmas, 10^4 checks each", ok, detail);
}

}  // namespace

int main() {
  criterion_table();
  criterion_oracle_equivalence();
  criterion_approximations();
  criterion_hamiltonian();
  criterion_recurrences();
  criterion_gerrymander();
  criterion_sandwich();
  criterion_core_lemmas();
  if (failures == 0) {
    std::cout << "all acceptance criteria satisfied\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
