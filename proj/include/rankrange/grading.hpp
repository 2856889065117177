/** @file grading.hpp
 *  @brief Weighted Average Maximization over a single timeline of marking
 *         periods: pick the contiguous partition maximizing the grade.
 */
#ifndef RANKRANGE_GRADING_HPP_
#define RANKRANGE_GRADING_HPP_

#include "rankrange/core.hpp"

namespace rankrange {

/// AsWritten weighs every block 1/(block length); LengthProportional weighs
/// it (block length)/n. The source formula and its prose disagree on which is
/// meant, so both are provided; AsWritten follows the formula.
enum class WeightConvention { AsWritten, LengthProportional };

struct GradeInstance {
  std::vector<Rational> earned;    // mu, >= 0
  std::vector<Rational> possible;  // mu*, >= 0, earned <= possible pointwise
  WeightConvention weights = WeightConvention::AsWritten;
};

struct GradeResult {
  Rational grade;
  std::vector<std::pair<int, int>> blocks;  // inclusive period ranges, 0-based
};

/// O(n^2) interval DP; blocks with zero possible points are inadmissible
/// (explicit unreachable state, no big-M). Throws DomainError when every
/// period has zero possible points.
GradeResult weighted_average_max(const GradeInstance& inst);

}  // namespace rankrange

#endif  // RANKRANGE_GRADING_HPP_
