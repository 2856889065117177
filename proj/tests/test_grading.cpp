#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>

#include "helpers.hpp"
#include "rankrange/grading.hpp"

using namespace rankrange;
using rrtest::Rng;

namespace {

std::optional<Rational> block_grade(const GradeInstance& g, int i, int j) {
  // Periods i..j inclusive.
  Rational earned(0), possible(0);
  for (int k = i; k <= j; ++k) {
    earned += g.earned[k];
    possible += g.possible[k];
  }
  if (possible.is_zero()) return std::nullopt;
  Rational ratio = earned / possible;
  int n = static_cast<int>(g.earned.size());
  if (g.weights == WeightConvention::AsWritten) return ratio / Rational(j - i + 1);
  return ratio * Rational(BigInt(j - i + 1), BigInt(n));
}

/// Exhaustive optimum over the 2^(n-1) contiguous partitions.
std::optional<Rational> brute_force(const GradeInstance& g) {
  int n = static_cast<int>(g.earned.size());
  std::optional<Rational> best;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::optional<Rational> total = Rational(0);
    int start = 0;
    for (int i = 0; i < n && total; ++i) {
      if (i == n - 1 || (mask >> i & 1)) {
        auto bg = block_grade(g, start, i);
        if (!bg)
          total = std::nullopt;
        else
          *total += *bg;
        start = i + 1;
      }
    }
    if (!total) continue;
    if (!best || *total > *best) best = *total;
  }
  return best;
}

Rational evaluate_blocks(const GradeInstance& g, const std::vector<std::pair<int, int>>& blocks) {
  Rational total(0);
  for (auto [i, j] : blocks) total += *block_grade(g, i, j);
  return total;
}

}  // namespace

TEST_CASE("hand example") {
  GradeInstance g;
  g.earned = {Rational(90), Rational(40)};
  g.possible = {Rational(100), Rational(100)};
  // As written, singleton blocks contribute their ratios outright:
  // 9/10 + 4/10 = 13/10 beats the merged block's (130/200)/2.
  GradeResult res = weighted_average_max(g);
  CHECK(res.grade == Rational(BigInt(13), BigInt(10)));
  CHECK(res.blocks.size() == 2);

  // Length proportional, same scores: singletons give (9/10)(1/2) + (4/10)(1/2)
  // = 13/20, the merged block (130/200)(2/2) = 13/20 as well; a tie.
  g.weights = WeightConvention::LengthProportional;
  res = weighted_average_max(g);
  CHECK(res.grade == Rational(BigInt(13), BigInt(20)));
}

TEST_CASE("matches the exhaustive optimum, both weight conventions") {
  Rng rng(10001);
  for (int it = 0; it < 300; ++it) {
    int n = rrtest::rnd_int(rng, 1, 12);
    GradeInstance g;
    g.weights = rrtest::rnd_int(rng, 0, 1) ? WeightConvention::AsWritten
                                           : WeightConvention::LengthProportional;
    for (int i = 0; i < n; ++i) {
      int possible = rrtest::rnd_int(rng, 0, 10);
      int earned = possible == 0 ? 0 : rrtest::rnd_int(rng, 0, possible);
      g.possible.push_back(Rational(possible));
      g.earned.push_back(Rational(earned));
    }
    auto ref = brute_force(g);
    if (!ref) {
      CHECK_THROWS_AS(weighted_average_max(g), DomainError);
      continue;
    }
    GradeResult res = weighted_average_max(g);
    CHECK(res.grade == *ref);
    // The reported blocks tile 0..n-1 in order and reproduce the grade.
    int expect = 0;
    for (auto [a, b] : res.blocks) {
      CHECK(a == expect);
      CHECK(b >= a);
      expect = b + 1;
    }
    CHECK(expect == n);
    CHECK(evaluate_blocks(g, res.blocks) == res.grade);
  }
}

TEST_CASE("zero-possible periods fold into admissible neighbors") {
  GradeInstance g;
  g.earned = {Rational(8), Rational(0)};
  g.possible = {Rational(10), Rational(0)};
  GradeResult res = weighted_average_max(g);
  // The only admissible partition is the single block: (8/10)/2 as written.
  CHECK(res.grade == Rational(BigInt(2), BigInt(5)));
  REQUIRE(res.blocks.size() == 1);

  GradeInstance all_zero;
  all_zero.earned = {Rational(0), Rational(0)};
  all_zero.possible = {Rational(0), Rational(0)};
  CHECK_THROWS_AS(weighted_average_max(all_zero), DomainError);
}
