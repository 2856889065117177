/** @file epa.hpp
 *  @brief EPA CRT emissions inventory: parsing the indented listing into a
 *         category tree and reproducing the headline rank/percentile table.
 *
 *  Input lines look like "1.A.3.b Transportation: Road CO$_2$ (1438.14)" with
 *  two spaces of indentation per tree level. Leaf values become exact rational
 *  measures; internal printed values are kept for consistency checks only.
 */
#ifndef RANKRANGE_EPA_HPP_
#define RANKRANGE_EPA_HPP_

#include <string>

#include "rankrange/tree.hpp"

namespace rankrange {

struct CrtTree {
  CategoryTree tree;              // special_node unset until a target is chosen
  std::vector<Rational> printed;  // per node, the value shown in the listing
};

/// Parses the indented inventory text. Throws ParseError (with the line
/// number) on malformed lines, indentation jumps > 1, or duplicate siblings.
CrtTree parse_crt(const std::string& text);
CrtTree parse_crt_file(const std::string& path);

/// Every internal node's printed value must match the sum of its leaf
/// descendants within 0.005 per descendant (printed values are rounded), and
/// every internal node must keep >= 2 children. Throws ParseError otherwise.
void check_crt_consistency(const CrtTree& crt);

/// A CRT code is the first whitespace-separated token of a label. When the
/// code names both a category and its per-gas leaves, the match that is an
/// ancestor of all the others wins. Throws DomainError when no unique node
/// resolves.
int resolve_code(const CrtTree& crt, const std::string& code);

struct Table1Row {
  std::string code;
  int min_rank = 0;
  int max_rank = 0;
  Rational min_pct, max_pct;       // exact fractions in [0, 1]
  std::string min_pct_display, max_pct_display;  // percent, 2 decimals
  Partition min_witness, max_witness;            // percentile witnesses
};

std::vector<Table1Row> table1_report(const CrtTree& crt, const std::vector<std::string>& targets);

/// "4.72" style rendering of a fraction as a percentage, two decimals,
/// round half up. Display only; exact values stay rational.
std::string render_percent(const Rational& fraction);

/// Lists a witness's blocks by category label where a block is exactly one
/// category, otherwise by its leaf labels.
std::string render_witness(const CrtTree& crt, const Partition& p);

}  // namespace rankrange

#endif  // RANKRANGE_EPA_HPP_
