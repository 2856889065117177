/** @file grid.hpp
 *  @brief Grid variants: hierarchical-rectangle rank and percentile
 *         recursions, free-rectangle and hierarchical brute-force oracles,
 *         and the gerrymandering slate maximization.
 *
 *  Cells live on [1,l] x [1,w]; vacant cells are excluded from V. Vertex ids
 *  number the non-vacant cells in row-major order. Rectangle admissibility is
 *  a function of the rectangle's vacancy subset only: vacancy-free rectangles
 *  are always allowed, others exactly when their vacancy set is whitelisted.
 */
#ifndef RANKRANGE_GRID_HPP_
#define RANKRANGE_GRID_HPP_

#include "rankrange/general.hpp"
#include "rankrange/linear.hpp"  // Direction
#include "rankrange/oracle.hpp"

namespace rankrange {

struct Rect {
  int a = 1, b = 1, c = 1, d = 1;  // columns [a,b], rows [c,d]

  bool operator==(const Rect& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

struct GridInstance {
  GridInstance(int l_, int w_);

  int l, w;
  std::vector<char> vacant;    // row-major, idx = (y-1)*l + (x-1)
  std::vector<Rational> mu;    // ignored on vacant cells
  bool has_special = false;
  Rect special;
  bool whitelist_all = true;
  std::vector<std::vector<int>> allowed_vacancy_sets;  // sorted cell-index lists

  int idx(int x, int y) const { return (y - 1) * l + (x - 1); }
  bool is_vacant(int x, int y) const { return vacant[idx(x, y)]; }
  void set_vacant(int x, int y) { vacant[idx(x, y)] = 1; }
  void set_mu(int x, int y, Rational v) { mu[idx(x, y)] = std::move(v); }
  void set_special(const Rect& r);

  /// Adds one vacancy-subset fingerprint to the whitelist (and switches the
  /// instance from allow-all to explicit-list mode the first time).
  void allow_vacancy_set(std::vector<int> cells);

  bool rect_allowed(const Rect& r) const;
  std::vector<int> live_cells(const Rect& r) const;  // sorted non-vacant indices
  std::vector<int> special_cells() const;
  Rational cells_value(const std::vector<int>& cells) const;

  /// Vertex id per cell index (-1 for vacant cells).
  std::vector<int> vertex_map() const;
  VertexSet cells_to_vertices(const std::vector<int>& cells) const;

  /// Core Instance over the non-vacant cells with 4-adjacency.
  Instance to_instance() const;

  void validate() const;
};

/// Guillotine recursion over subrectangles: leave whole (when allowed and
/// disjoint from S*) or try every vertical/horizontal cut; subgrids equal to
/// S* or fully vacant contribute nothing; subgrids straddling S* with no
/// feasible cut are infeasible. Min uses StrictAbove, Max uses AtLeast.
RankResult grid_hier_rank(const GridInstance& inst, Direction direction);

/// Additive-score analogue over (rectangle, block count), combined across
/// cuts by convolution; answer = opt over k of (G + 0.5)/(k + 1).
PercentileResult grid_hier_percentile(const GridInstance& inst, Direction direction);

/// Exhaustive optimum over all rectangle tilings of the grid (first-uncovered-
/// cell recursion), vacancy- and whitelist-respecting. Throws SizeError when
/// l*w > 16.
OracleResult grid_free_rect_oracle(const GridInstance& inst, Objective objective);

/// Exhaustive optimum over hierarchical decompositions only; the reference
/// the two DP solvers are tested against. Same size cap.
OracleResult grid_hier_oracle(const GridInstance& inst, Objective objective);

struct GerrymanderInstance {
  GridInstance grid;               // must have no special rectangle
  std::vector<Rational> mu_r;      // signed margins, row-major, |mu_r| <= mu
  int n_districts = 1;
  Rational rho;                    // in [0, 1/(N+1))

  GerrymanderInstance(GridInstance g, std::vector<Rational> margins, int n, Rational rho_);
  void validate() const;
};

struct GerrymanderResult {
  bool feasible = false;
  int slate = 0;
  Partition districts;
  std::vector<Rect> district_rects;
};

/// Maximum slate over hierarchical district plans: a subrectangle is a
/// district iff whitelist-allowed and its population lies in
/// [(1-rho), (1+rho)] * mu(V)/N; ties (margin zero) go to Player 1. The
/// population window with rho < 1/(N+1) forces exactly N districts.
GerrymanderResult gerrymander_hier(const GerrymanderInstance& inst);

/// Independent check: enumerates complete hierarchical decompositions,
/// filters on the district constraints, maximizes the slate.
GerrymanderResult gerrymander_bruteforce(const GerrymanderInstance& inst);

}  // namespace rankrange

#endif  // RANKRANGE_GRID_HPP_
