// rankrange: command-line front end for the partition-rank solvers.
//
// Exit codes: 0 success, 2 invalid instance, 3 infeasible, 4 size cap
// exceeded, 5 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rankrange/complete.hpp"
#include "rankrange/epa.hpp"
#include "rankrange/equivalence.hpp"
#include "rankrange/grading.hpp"
#include "rankrange/grid.hpp"
#include "rankrange/io.hpp"
#include "rankrange/linear.hpp"
#include "rankrange/tree.hpp"
#include "rankrange/uniform.hpp"

namespace {

using namespace rankrange;

void print_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    std::cout << "S" << i + 1 << ":";
    for (Vertex v : p.blocks[i]) std::cout << " " << v;
    std::cout << "\n";
  }
}

void maybe_dot(const std::string& path, const Instance& inst, const Partition& p) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << partition_to_dot(inst, p);
}

void print_percentile(const Rational& p) {
  std::cout << "percentile = " << p.str() << " (" << render_percent(p) << "%)\n";
}

Objective objective_from(const std::string& name) {
  if (name == "min-rank") return Objective::MinRank;
  if (name == "max-rank") return Objective::MaxRank;
  if (name == "min-pct") return Objective::MinPercentile;
  if (name == "max-pct") return Objective::MaxPercentile;
  throw CLI::ValidationError("unknown problem/objective '" + name + "'");
}

Partition oracle_rank_max(const Instance& inst, RankConvention conv, int limit) {
  OracleResult best = exact_optimum(inst, Objective::MaxRank, conv, limit);
  return best.witness;
}

int run_solve(const std::string& input, const std::string& problem, const std::string& case_name,
              const std::string& variant, const std::string& convention,
              const std::string& special_code, const std::string& dot, int limit) {
  RankConvention conv =
      convention == "at-least" ? RankConvention::AtLeast : RankConvention::StrictAbove;
  Objective obj = objective_from(problem);
  const bool minimize = obj == Objective::MinRank || obj == Objective::MinPercentile;

  if (variant == "hierarchy") {
    std::ifstream in(input);
    if (!in) throw ParseError("cannot open " + input);
    std::ostringstream buf;
    buf << in.rdbuf();
    CrtTree crt = parse_crt(buf.str());
    if (special_code.empty()) throw CLI::ValidationError("--special CODE required for hierarchy");
    CategoryTree tree = crt.tree;
    tree.special_node = resolve_code(crt, special_code);
    switch (obj) {
      case Objective::MinRank: {
        auto r = tree_rank_min(tree, conv);
        std::cout << "rank = " << r.rank << "\n" << render_witness(crt, r.witness);
        break;
      }
      case Objective::MaxRank: {
        auto r = tree_rank_max(tree);
        std::cout << "rank = " << r.rank << "\n" << render_witness(crt, r.witness);
        break;
      }
      default: {
        auto r = tree_percentile_dp(tree, minimize ? Direction::Min : Direction::Max);
        print_percentile(r.percentile);
        std::cout << render_witness(crt, r.witness);
      }
    }
    return 0;
  }

  InstanceFile file = load_instance_file(input);

  if (variant == "equivalence") {
    if (!file.classes) throw ParseError("instance has no classes section");
    EquivalenceInstance eq(file.graph(), *file.classes);
    switch (obj) {
      case Objective::MinRank: {
        auto r = eq_rank_min(eq);
        std::cout << "rank = " << r.rank << "\n";
        print_partition(r.witness);
        break;
      }
      case Objective::MaxRank: {
        auto r = eq_rank_max(eq);
        std::cout << "rank = " << r.rank << "\n";
        print_partition(r.witness);
        break;
      }
      default: {
        auto r = eq_percentile_opt(eq, minimize ? Direction::Min : Direction::Max);
        print_percentile(r.percentile);
        print_partition(r.witness);
      }
    }
    return 0;
  }

  if (variant == "grid-hier") {
    if (!file.grid) throw ParseError("instance has no grid section");
    Instance graph = file.grid->to_instance();
    if (obj == Objective::MinRank || obj == Objective::MaxRank) {
      auto r = grid_hier_rank(*file.grid, minimize ? Direction::Min : Direction::Max);
      std::cout << "rank = " << r.rank << "\n";
      print_partition(r.witness);
      maybe_dot(dot, graph, r.witness);
    } else {
      auto r = grid_hier_percentile(*file.grid, minimize ? Direction::Min : Direction::Max);
      print_percentile(r.percentile);
      print_partition(r.witness);
      maybe_dot(dot, graph, r.witness);
    }
    return 0;
  }

  const Instance& inst = file.graph();
  RankResult rank_res;
  PercentileResult pct_res;
  bool is_rank = obj == Objective::MinRank || obj == Objective::MaxRank;

  if (case_name == "complete") {
    switch (obj) {
      case Objective::MinRank: rank_res = greedy_rank_min(inst); break;
      case Objective::MaxRank: rank_res = rank_max_complete_approx(inst); break;
      case Objective::MinPercentile: pct_res = min_percentile_complete(inst); break;
      case Objective::MaxPercentile: pct_res = percentile_max_complete_approx(inst); break;
    }
  } else if (case_name == "linear") {
    switch (obj) {
      case Objective::MinRank: rank_res = greedy_rank_min(inst); break;
      case Objective::MaxRank: rank_res = rank_max_linear(inst, conv); break;
      default:
        pct_res = percentile_dp_linear(inst, minimize ? Direction::Min : Direction::Max);
    }
  } else if (case_name == "uniform-circulant") {
    if (!file.circulant) throw ParseError("instance has no circulant section");
    int k = static_cast<int>(inst.special().size());
    switch (obj) {
      case Objective::MinRank: {
        auto u = uniform_min_solutions(inst);
        rank_res.rank = u.min_rank;
        rank_res.witness = std::move(u.witness);
        break;
      }
      case Objective::MinPercentile: {
        auto u = uniform_min_solutions(inst);
        pct_res.percentile = u.min_percentile;
        pct_res.witness = std::move(u.witness);
        break;
      }
      case Objective::MaxRank:
        rank_res = rank_max_uniform_circulant(inst, *file.circulant, k);
        break;
      case Objective::MaxPercentile:
        pct_res = percentile_max_uniform_circulant(inst, *file.circulant, k);
        break;
    }
  } else if (case_name == "general" || case_name.empty()) {
    switch (obj) {
      case Objective::MinRank: rank_res = greedy_rank_min(inst); break;
      case Objective::MaxRank: {
        // No polynomial general solver exists; fall back to the oracle.
        OracleResult best = exact_optimum(inst, Objective::MaxRank, conv, limit);
        rank_res.rank = best.rank();
        rank_res.witness = std::move(best.witness);
        break;
      }
      case Objective::MinPercentile: {
        OracleResult best = exact_optimum(inst, Objective::MinPercentile, conv, limit);
        pct_res.percentile = best.best_value;
        pct_res.witness = std::move(best.witness);
        break;
      }
      case Objective::MaxPercentile:
        pct_res = percentile_max_2approx(inst, [&](const Instance& g, RankConvention c) {
          return oracle_rank_max(g, c, limit);
        });
        break;
    }
  } else {
    throw CLI::ValidationError("unknown case '" + case_name + "'");
  }

  if (is_rank) {
    std::cout << "rank = " << rank_res.rank << "\n";
    print_partition(rank_res.witness);
    maybe_dot(dot, inst, rank_res.witness);
  } else {
    print_percentile(pct_res.percentile);
    print_partition(pct_res.witness);
    maybe_dot(dot, inst, pct_res.witness);
  }
  return 0;
}

int run_oracle(const std::string& input, const std::string& objective, int limit) {
  InstanceFile file = load_instance_file(input);
  Objective obj = objective_from(objective);
  OracleResult res = exact_optimum(file.graph(), obj, default_convention(obj), limit);
  if (obj == Objective::MinRank || obj == Objective::MaxRank)
    std::cout << "rank = " << res.best_value.str() << "\n";
  else
    print_percentile(res.best_value);
  std::cout << "partitions explored: " << res.explored << "\n";
  print_partition(res.witness);
  return 0;
}

int run_epa_table(const std::string& data, std::vector<std::string> targets, bool witnesses) {
  CrtTree crt = parse_crt_file(data);
  check_crt_consistency(crt);
  if (targets.empty())
    targets = {"1.A.3.b", "1.A.3.a", "2.A.1", "2.F.1", "3", "3.B"};
  auto rows = table1_report(crt, targets);
  std::cout << "code, min_rank, max_rank, min_pct, max_pct\n";
  for (const auto& row : rows) {
    std::cout << row.code << ", " << row.min_rank << ", " << row.max_rank << ", "
              << row.min_pct_display << "%, " << row.max_pct_display << "%\n";
    if (witnesses) {
      std::cout << "min percentile witness:\n" << render_witness(crt, row.min_witness);
      std::cout << "max percentile witness:\n" << render_witness(crt, row.max_witness);
    }
  }
  return 0;
}

int run_gerrymander(const std::string& input) {
  InstanceFile file = load_instance_file(input);
  if (!file.gerrymander) throw ParseError("instance has no gerrymander section");
  GerrymanderResult res = gerrymander_hier(*file.gerrymander);
  if (!res.feasible) throw InfeasibleError("no valid districting plan");
  std::cout << "slate = " << res.slate << "\n";
  for (std::size_t i = 0; i < res.district_rects.size(); ++i) {
    const Rect& r = res.district_rects[i];
    std::cout << "district " << i + 1 << ": cols " << r.a << ".." << r.b << ", rows " << r.c
              << ".." << r.d << "\n";
  }
  return 0;
}

int run_grade(const std::string& input, const std::string& weights) {
  std::ifstream in(input);
  if (!in) throw ParseError("cannot open " + input);
  GradeInstance g;
  g.weights = weights == "length-proportional" ? WeightConvention::LengthProportional
                                               : WeightConvention::AsWritten;
  std::string earned, possible;
  while (in >> earned >> possible) {
    g.earned.push_back(Rational::parse(earned));
    g.possible.push_back(Rational::parse(possible));
  }
  if (g.earned.empty()) throw ParseError("grade: no periods in " + input);
  GradeResult res = weighted_average_max(g);
  std::cout << "grade = " << res.grade.str() << " (" << res.grade.to_double() << ")\n";
  for (auto [a, b] : res.blocks) std::cout << "periods " << a + 1 << ".." << b + 1 << "\n";
  return 0;
}

int run_validate(const std::string& input, const std::string& partition_path) {
  InstanceFile file = load_instance_file(input);
  const Instance& inst = file.graph();
  if (!partition_path.empty()) {
    std::ifstream in(partition_path);
    if (!in) throw ParseError("cannot open " + partition_path);
    Partition p;
    std::string line;
    while (std::getline(in, line)) {
      // One block per line: whitespace-separated vertex ids, "S1:" prefixes ok.
      std::istringstream row(line);
      VertexSet block;
      std::string tok;
      while (row >> tok) {
        if (!tok.empty() && tok.back() == ':') continue;
        block.push_back(std::stoi(tok));
      }
      if (!block.empty()) p.blocks.push_back(std::move(block));
    }
    require_valid_partition(inst, p);
    std::cout << "partition valid (" << p.blocks.size() << " blocks)\n";
  } else {
    std::cout << "instance valid: n = " << inst.n() << ", |S*| = " << inst.special().size()
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank range solvers for similarity partitions"};
  app.require_subcommand(1);

  std::string input, problem, case_name = "general", variant, convention = "strict";
  std::string special_code, dot, objective, data = "data/epa_crt_2022.txt", weights = "as-written";
  std::string partition_path;
  std::vector<std::string> targets;
  int limit = kDefaultOracleLimit;
  bool witnesses = false;
  unsigned seed = 0;

  auto* solve = app.add_subcommand("solve", "run a solver on an instance file");
  solve->add_option("-i,--input", input)->required();
  solve->add_option("--problem", problem)->required();
  solve->add_option("--case", case_name);
  solve->add_option("--variant", variant);
  solve->add_option("--convention", convention)->check(CLI::IsMember({"strict", "at-least"}));
  solve->add_option("--special", special_code);
  solve->add_option("--dot", dot);
  solve->add_option("--limit", limit);

  auto* oracle = app.add_subcommand("oracle", "exhaustive solver");
  oracle->add_option("-i,--input", input)->required();
  oracle->add_option("--objective", objective)->required();
  oracle->add_option("--limit", limit);

  auto* epa = app.add_subcommand("epa-table", "emissions inventory rank table");
  epa->add_option("--data", data);
  epa->add_option("--targets", targets);
  epa->add_flag("--witnesses", witnesses);

  auto* gerry = app.add_subcommand("gerrymander", "maximum slate districting");
  gerry->add_option("-i,--input", input)->required();

  auto* grade = app.add_subcommand("grade", "weighted average maximization");
  grade->add_option("-i,--input", input)->required();
  grade->add_option("--weights", weights)
      ->check(CLI::IsMember({"as-written", "length-proportional"}));

  auto* validate = app.add_subcommand("validate", "check instance invariants");
  validate->add_option("-i,--input", input)->required();
  validate->add_option("--partition", partition_path);

  app.add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 5;
  }

  try {
    if (solve->parsed())
      return run_solve(input, problem, case_name, variant, convention, special_code, dot, limit);
    if (oracle->parsed()) return run_oracle(input, objective, limit);
    if (epa->parsed()) return run_epa_table(data, targets, witnesses);
    if (gerry->parsed()) return run_gerrymander(input);
    if (grade->parsed()) return run_grade(input, weights);
    if (validate->parsed()) return run_validate(input, partition_path);
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 5;
}
