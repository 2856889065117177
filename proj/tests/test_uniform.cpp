#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "helpers.hpp"
#include "rankrange/oracle.hpp"
#include "rankrange/uniform.hpp"

using namespace rankrange;
using rrtest::Rng;

namespace {

bool is_hamiltonian_path(const CirculantSpec& spec, const std::vector<int>& path) {
  if (static_cast<int>(path.size()) != spec.n) return false;
  std::set<int> seen(path.begin(), path.end());
  if (static_cast<int>(seen.size()) != spec.n) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!spec.has_edge(path[i], path[i + 1])) return false;
  return true;
}

/// Instance whose free part is exactly the circulant spec (vertices 0..n'-1)
/// plus k special vertices chained after it; uniform measure 1 everywhere.
Instance circulant_instance(const CirculantSpec& spec, int k) {
  int n = spec.n + k;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < spec.n; ++a)
    for (int b = a + 1; b < spec.n; ++b)
      if (spec.has_edge(a, b)) edges.emplace_back(a, b);
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(spec.n + i, spec.n + i + 1);
  if (k > 0 && spec.n > 0) edges.emplace_back(0, spec.n);
  VertexSet special;
  for (int i = 0; i < k; ++i) special.push_back(spec.n + i);
  return Instance(n, std::move(edges), std::vector<Rational>(n, Rational(1)),
                  std::move(special));
}

}  // namespace

TEST_CASE("spec validation and connectivity") {
  CHECK(CirculantSpec{6, {1}}.is_connected());
  CHECK(CirculantSpec{6, {2, 3}}.is_connected());
  CHECK(!CirculantSpec{6, {2}}.is_connected());
  CHECK(CirculantSpec{6, {3}}.has_edge(0, 3));
  CHECK(!CirculantSpec{6, {3}}.has_edge(0, 2));
  CHECK_THROWS_AS(circulant_hamiltonian_path(CirculantSpec{6, {2}}), ValidityError);
  CHECK_THROWS_AS(circulant_hamiltonian_path(CirculantSpec{6, {4}}), DomainError);
  CHECK_THROWS_AS(circulant_hamiltonian_path(CirculantSpec{6, {2, 2}}), DomainError);
}

TEST_CASE("hamiltonian path construction, exhaustive over small jump sets") {
  for (int n = 1; n <= 24; ++n) {
    int half = n / 2;
    std::vector<std::vector<int>> sets;
    for (int a = 1; a <= half; ++a) {
      sets.push_back({a});
      for (int b = a + 1; b <= half; ++b) {
        sets.push_back({a, b});
        for (int c = b + 1; c <= half; ++c) sets.push_back({a, b, c});
      }
    }
    for (auto& jumps : sets) {
      CirculantSpec spec{n, jumps};
      int g = n;
      for (int s : jumps) g = std::gcd(g, s);
      if (g != 1) continue;
      CHECK(is_hamiltonian_path(spec, circulant_hamiltonian_path(spec)));
    }
  }
}

TEST_CASE("minimization closed forms under uniform measure") {
  Rng rng(6001);
  for (int it = 0; it < 120; ++it) {
    int np = rrtest::rnd_int(rng, 1, 8);
    int k = rrtest::rnd_int(rng, 2, 4);
    CirculantSpec spec{np, np >= 3 ? std::vector<int>{1} : std::vector<int>{}};
    if (np == 2) spec.jumps = {1};
    Instance inst = circulant_instance(spec, k);
    UniformMinResult res = uniform_min_solutions(inst);
    CHECK(res.min_rank == 1);
    CHECK(res.min_percentile == Rational(BigInt(1), BigInt(2 * (np + 1))));
    CHECK(is_valid_partition(inst, res.witness));
    CHECK(res.min_rank == exact_optimum(inst, Objective::MinRank,
                                        RankConvention::StrictAbove).rank());
    CHECK(res.min_percentile ==
          exact_optimum(inst, Objective::MinPercentile, RankConvention::StrictAbove).best_value);
  }
  Instance all_special = circulant_instance(CirculantSpec{0, {}}, 3);
  CHECK_THROWS_AS(uniform_min_solutions(all_special), DomainError);
  Instance single = circulant_instance(CirculantSpec{4, {1}}, 1);
  CHECK_THROWS_AS(uniform_min_solutions(single), CaseError);
}

TEST_CASE("rank maximization by chunking matches the exhaustive optimum") {
  Rng rng(6002);
  for (int np = 2; np <= 10; ++np) {
    for (int k = 1; k <= 4; ++k) {
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<int> jumps;
        for (int s = 1; s <= np / 2; ++s)
          if (rrtest::rnd_int(rng, 0, 1)) jumps.push_back(s);
        CirculantSpec spec{np, jumps};
        if (!spec.is_connected()) continue;
        Instance inst = circulant_instance(spec, k);
        RankResult alg = rank_max_uniform_circulant(inst, spec, k);
        CHECK(is_valid_partition(inst, alg.witness));
        CHECK(alg.rank == rank_of(inst, alg.witness, RankConvention::AtLeast));
        CHECK(alg.rank == exact_optimum(inst, Objective::MaxRank,
                                        RankConvention::AtLeast).rank());
        CHECK(alg.rank == np / k + 1);
      }
    }
  }
}

TEST_CASE("percentile maximization by chunking matches the exhaustive optimum") {
  Rng rng(6003);
  for (int np = 1; np <= 10; ++np) {
    for (int k = 1; k <= 4; ++k) {
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<int> jumps;
        for (int s = 1; s <= np / 2; ++s)
          if (rrtest::rnd_int(rng, 0, 1)) jumps.push_back(s);
        CirculantSpec spec{np, jumps};
        if (np > 1 && !spec.is_connected()) continue;
        Instance inst = circulant_instance(spec, k);
        PercentileResult alg = percentile_max_uniform_circulant(inst, spec, k);
        CHECK(is_valid_partition(inst, alg.witness));
        CHECK(percentile_of(inst, alg.witness) == alg.percentile);
        CHECK(alg.certified_optimal);
        CHECK(alg.percentile ==
              exact_optimum(inst, Objective::MaxPercentile, RankConvention::AtLeast).best_value);
      }
    }
  }
}

TEST_CASE("mismatched spec is rejected") {
  CirculantSpec spec{5, {1}};
  Instance inst = circulant_instance(CirculantSpec{4, {1}}, 2);
  CHECK_THROWS_AS(rank_max_uniform_circulant(inst, spec, 2), CaseError);
}
