#include "rankrange/grading.hpp"

#include <algorithm>
#include <optional>

namespace rankrange {

GradeResult weighted_average_max(const GradeInstance& inst) {
  const int n = static_cast<int>(inst.earned.size());
  if (n == 0 || inst.possible.size() != inst.earned.size())
    throw DomainError("grading: earned/possible size mismatch");
  Rational total_possible(0);
  for (int i = 0; i < n; ++i) {
    if (inst.earned[i].sign() < 0 || inst.possible[i].sign() < 0)
      throw DomainError("grading: negative points");
    if (inst.earned[i] > inst.possible[i])
      throw DomainError("grading: earned exceeds possible");
    total_possible += inst.possible[i];
  }
  if (total_possible.is_zero()) throw DomainError("grading: no possible points at all");

  std::vector<Rational> pre_mu(n + 1), pre_pos(n + 1);
  for (int i = 0; i < n; ++i) {
    pre_mu[i + 1] = pre_mu[i] + inst.earned[i];
    pre_pos[i + 1] = pre_pos[i] + inst.possible[i];
  }
  auto cost = [&](int i, int j) -> std::optional<Rational> {  // block [i, j], 0-based
    Rational pos = pre_pos[j + 1] - pre_pos[i];
    if (pos.is_zero()) return std::nullopt;
    Rational ratio = (pre_mu[j + 1] - pre_mu[i]) / pos;
    if (inst.weights == WeightConvention::AsWritten)
      return ratio / Rational(j - i + 1);
    return ratio * Rational(BigInt(j - i + 1), BigInt(n));
  };

  std::vector<std::optional<Rational>> opt(n + 1);
  std::vector<int> parent(n + 1, -1);
  opt[0] = Rational(0);
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (!opt[i]) continue;
      auto c = cost(i, j - 1);
      if (!c) continue;
      Rational cand = *opt[i] + *c;
      if (!opt[j] || cand > *opt[j]) {
        opt[j] = cand;
        parent[j] = i;
      }
    }
  }
  if (!opt[n]) throw DomainError("grading: no admissible partition");

  GradeResult res;
  res.grade = *opt[n];
  for (int j = n; j > 0; j = parent[j]) res.blocks.emplace_back(parent[j], j - 1);
  std::reverse(res.blocks.begin(), res.blocks.end());
  return res;
}

}  // namespace rankrange
