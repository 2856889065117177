#include "rankrange/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rankrange {

using nlohmann::json;

namespace {

Rational parse_rational_field(const json& j, const std::string& context) {
  std::string text;
  if (j.is_string())
    text = j.get<std::string>();
  else if (j.is_number_integer())
    text = std::to_string(j.get<long long>());
  else
    throw ParseError("instance: " + context + " must be a rational string");
  auto value = Rational::try_parse(text);
  if (!value) throw ParseError("instance: bad rational '" + text + "' in " + context);
  return *value;
}

Instance parse_graph_section(const json& j) {
  const auto& verts = j.at("vertices");
  int n = static_cast<int>(verts.size());
  std::vector<Rational> mu(n, Rational(1));
  for (const auto& v : verts) {
    int id = v.at("id").get<int>();
    if (id < 0 || id >= n) throw ParseError("instance: vertex id out of range");
    if (v.contains("mu")) mu[id] = parse_rational_field(v.at("mu"), "vertex mu");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  VertexSet special;
  if (j.contains("special"))
    for (const auto& s : j.at("special")) special.push_back(s.get<int>());
  return Instance(n, std::move(edges), std::move(mu), std::move(special));
}

GridInstance parse_grid_section(const json& g) {
  GridInstance grid(g.at("l").get<int>(), g.at("w").get<int>());
  if (g.contains("vacant"))
    for (const auto& cell : g.at("vacant"))
      grid.set_vacant(cell.at(0).get<int>(), cell.at(1).get<int>());
  if (g.contains("mu")) {
    const auto& rows = g.at("mu");
    if (static_cast<int>(rows.size()) != grid.w) throw ParseError("grid: mu needs w rows");
    for (int y = 1; y <= grid.w; ++y) {
      const auto& row = rows.at(y - 1);
      if (static_cast<int>(row.size()) != grid.l) throw ParseError("grid: mu row needs l entries");
      for (int x = 1; x <= grid.l; ++x)
        grid.set_mu(x, y, parse_rational_field(row.at(x - 1), "grid mu"));
    }
  }
  if (g.contains("special")) {
    const auto& s = g.at("special");
    grid.set_special({s.at("a").get<int>(), s.at("b").get<int>(), s.at("c").get<int>(),
                      s.at("d").get<int>()});
  }
  if (g.contains("whitelist") && g.at("whitelist").is_array())
    for (const auto& entry : g.at("whitelist"))
      grid.allow_vacancy_set(entry.get<std::vector<int>>());
  grid.validate();
  return grid;
}

}  // namespace

const Instance& InstanceFile::graph() const {
  if (!instance) throw DomainError("instance file: no graph section");
  return *instance;
}

InstanceFile parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance: invalid JSON: ") + e.what());
  }
  InstanceFile file;
  try {
    if (j.contains("vertices")) file.instance = parse_graph_section(j);
    if (j.contains("classes")) {
      std::vector<VertexSet> classes;
      for (const auto& cls : j.at("classes")) classes.push_back(cls.get<VertexSet>());
      file.classes = std::move(classes);
    }
    if (j.contains("circulant")) {
      CirculantSpec spec;
      spec.n = j.at("circulant").at("n").get<int>();
      spec.jumps = j.at("circulant").at("jumps").get<std::vector<int>>();
      file.circulant = std::move(spec);
    }
    if (j.contains("grid")) {
      file.grid = parse_grid_section(j.at("grid"));
      if (!file.instance) file.instance = file.grid->to_instance();
    }
    if (j.contains("gerrymander")) {
      if (!file.grid) throw ParseError("instance: gerrymander section needs a grid section");
      const auto& ger = j.at("gerrymander");
      GridInstance grid = *file.grid;
      std::vector<Rational> margins(grid.l * grid.w, Rational(0));
      const auto& rows = ger.at("mu_r");
      for (int y = 1; y <= grid.w; ++y)
        for (int x = 1; x <= grid.l; ++x)
          margins[grid.idx(x, y)] = parse_rational_field(rows.at(y - 1).at(x - 1), "mu_r");
      file.gerrymander.emplace(std::move(grid), std::move(margins),
                               ger.at("districts").get<int>(),
                               parse_rational_field(ger.at("rho"), "rho"));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return file;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("instance: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

std::string instance_to_json_text(const Instance& inst) {
  json j;
  j["vertices"] = json::array();
  for (Vertex v = 0; v < inst.n(); ++v)
    j["vertices"].push_back({{"id", v}, {"mu", inst.mu(v).str()}});
  j["edges"] = json::array();
  for (auto [a, b] : inst.edge_list()) j["edges"].push_back({a, b});
  j["special"] = inst.special();
  return j.dump(2) + "\n";
}

std::string partition_to_dot(const Instance& inst, const Partition& p) {
  std::ostringstream out;
  out << "graph partition {\n  node [shape=circle];\n";
  if (!inst.special().empty()) {
    out << "  subgraph cluster_special {\n    label=\"S*\";\n    style=filled;\n"
        << "    color=lightgrey;\n";
    for (Vertex v : inst.special()) out << "    v" << v << ";\n";
    out << "  }\n";
  }
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    out << "  subgraph cluster_" << i << " {\n    label=\"S" << i + 1 << "\";\n";
    for (Vertex v : p.blocks[i]) out << "    v" << v << ";\n";
    out << "  }\n";
  }
  for (Vertex v = 0; v < inst.n(); ++v)
    out << "  v" << v << " [xlabel=\"" << inst.mu(v).str() << "\"];\n";
  for (auto [a, b] : inst.edge_list()) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rankrange
