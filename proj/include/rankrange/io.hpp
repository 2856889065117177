/** @file io.hpp
 *  @brief Instance files (JSON) and DOT rendering of witnesses.
 *
 *  An instance file carries a graph section (vertices with exact rational
 *  measures, edges, the special subset) and optional variant sections:
 *  "classes" for the equivalence variant, "grid" for the grid variants,
 *  "circulant" for the uniform-circulant case, "gerrymander" for districting.
 *  Rationals are written as "p/q" strings; decimals are accepted on input.
 */
#ifndef RANKRANGE_IO_HPP_
#define RANKRANGE_IO_HPP_

#include <optional>
#include <string>

#include "rankrange/core.hpp"
#include "rankrange/grid.hpp"
#include "rankrange/uniform.hpp"

namespace rankrange {

struct InstanceFile {
  std::optional<Instance> instance;
  std::optional<std::vector<VertexSet>> classes;
  std::optional<CirculantSpec> circulant;
  std::optional<GridInstance> grid;
  std::optional<GerrymanderInstance> gerrymander;

  /// The graph view: the explicit instance, or the grid's derived instance.
  const Instance& graph() const;
};

InstanceFile load_instance_file(const std::string& path);
InstanceFile parse_instance_text(const std::string& text);

std::string instance_to_json_text(const Instance& inst);

/// GraphViz rendering: blocks as clusters, S* shaded.
std::string partition_to_dot(const Instance& inst, const Partition& p);

}  // namespace rankrange

#endif  // RANKRANGE_IO_HPP_
