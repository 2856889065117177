#include "rankrange/epa.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rankrange {

namespace {

struct RawLine {
  int depth;
  std::string label;
  Rational value;
};

RawLine split_line(const std::string& line, int lineno) {
  std::size_t indent = 0;
  while (indent < line.size() && line[indent] == ' ') ++indent;
  if (indent % 2 != 0)
    throw ParseError("crt line " + std::to_string(lineno) + ": odd indentation");
  std::size_t open = line.rfind(" (");
  if (open == std::string::npos || line.back() != ')')
    throw ParseError("crt line " + std::to_string(lineno) + ": missing (value)");
  std::string value_text = line.substr(open + 2, line.size() - open - 3);
  auto value = Rational::try_parse(value_text);
  if (!value)
    throw ParseError("crt line " + std::to_string(lineno) + ": bad value '" + value_text + "'");
  RawLine raw;
  raw.depth = static_cast<int>(indent / 2);
  raw.label = line.substr(indent, open - indent);
  raw.value = *value;
  if (raw.label.empty()) throw ParseError("crt line " + std::to_string(lineno) + ": empty label");
  return raw;
}

std::string first_token(const std::string& label) {
  std::size_t space = label.find(' ');
  return space == std::string::npos ? label : label.substr(0, space);
}

}  // namespace

CrtTree parse_crt(const std::string& text) {
  std::vector<RawLine> raws;
  {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
      if (line.empty()) continue;
      raws.push_back(split_line(line, lineno));
      if (raws.size() == 1 && raws[0].depth != 0)
        throw ParseError("crt line " + std::to_string(lineno) + ": first line must be the root");
      if (raws.size() > 1 && raws.back().depth > raws[raws.size() - 2].depth + 1)
        throw ParseError("crt line " + std::to_string(lineno) + ": indentation jumps a level");
    }
  }
  if (raws.empty()) throw ParseError("crt: empty input");

  CrtTree crt;
  std::vector<int> stack;  // node ids along the current rightmost path
  for (std::size_t i = 0; i < raws.size(); ++i) {
    const RawLine& raw = raws[i];
    bool internal = i + 1 < raws.size() && raws[i + 1].depth == raw.depth + 1;
    stack.resize(raw.depth);
    int parent = raw.depth == 0 ? -1 : stack.back();
    if (parent >= 0) {
      for (int sib : crt.tree.nodes[parent].children)
        if (crt.tree.nodes[sib].label == raw.label)
          throw ParseError("crt line " + std::to_string(i + 1) + ": duplicate sibling label '" +
                           raw.label + "'");
    }
    int id = internal ? add_category(crt.tree, parent, raw.label)
                      : add_leaf(crt.tree, parent, raw.value, raw.label);
    crt.printed.push_back(raw.value);
    stack.push_back(id);
  }
  return crt;
}

CrtTree parse_crt_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("crt: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_crt(buf.str());
}

void check_crt_consistency(const CrtTree& crt) {
  const Rational unit(BigInt(5), BigInt(1000));
  for (std::size_t u = 0; u < crt.tree.nodes.size(); ++u) {
    int id = static_cast<int>(u);
    if (crt.tree.is_leaf(id)) continue;
    if (crt.tree.nodes[u].children.size() < 2)
      throw ParseError("crt: category '" + crt.tree.nodes[u].label + "' has < 2 children");
    Rational sum = crt.tree.subtree_value(id);
    int leaves = static_cast<int>(crt.tree.subtree_leaves(id).size());
    Rational diff = sum - crt.printed[u];
    if (diff.sign() < 0) diff = -diff;
    if (diff > unit * Rational(leaves))
      throw ParseError("crt: category '" + crt.tree.nodes[u].label +
                       "' printed value off by " + diff.str());
  }
}

int resolve_code(const CrtTree& crt, const std::string& code) {
  std::vector<int> matches;
  for (std::size_t u = 0; u < crt.tree.nodes.size(); ++u)
    if (first_token(crt.tree.nodes[u].label) == code) matches.push_back(static_cast<int>(u));
  if (matches.empty()) throw DomainError("crt: no node with code '" + code + "'");
  if (matches.size() == 1) return matches.front();
  // The category and its per-gas leaves share the code; keep the common
  // ancestor among the matches.
  for (int cand : matches) {
    bool covers_all = true;
    for (int other : matches) {
      int walk = other;
      while (walk >= 0 && walk != cand) walk = crt.tree.nodes[walk].parent;
      if (walk != cand) {
        covers_all = false;
        break;
      }
    }
    if (covers_all) return cand;
  }
  throw DomainError("crt: code '" + code + "' is ambiguous");
}

std::vector<Table1Row> table1_report(const CrtTree& crt,
                                     const std::vector<std::string>& targets) {
  std::vector<Table1Row> rows;
  for (const std::string& code : targets) {
    CategoryTree tree = crt.tree;
    tree.special_node = resolve_code(crt, code);
    Table1Row row;
    row.code = code;
    row.min_rank = tree_rank_min(tree).rank;
    row.max_rank = tree_rank_max(tree).rank;
    auto lo = tree_percentile_dp(tree, Direction::Min);
    auto hi = tree_percentile_dp(tree, Direction::Max);
    row.min_pct = lo.percentile;
    row.max_pct = hi.percentile;
    row.min_pct_display = render_percent(row.min_pct);
    row.max_pct_display = render_percent(row.max_pct);
    row.min_witness = std::move(lo.witness);
    row.max_witness = std::move(hi.witness);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_percent(const Rational& fraction) {
  // Hundredths of a percent, rounded half up: floor(fraction*10^4 + 1/2).
  BigInt n = fraction.num() * 10000 * 2 + fraction.den();
  BigInt d = fraction.den() * 2;
  BigInt q = n / d;
  if (n < 0 && n % d != 0) --q;  // floor for negatives, not that they occur
  BigInt whole = q / 100, cents = q % 100;
  std::string c = cents.str();
  if (c.size() < 2) c = "0" + c;
  return whole.str() + "." + c;
}

std::string render_witness(const CrtTree& crt, const Partition& p) {
  std::ostringstream out;
  for (const VertexSet& block : p.blocks) {
    out << "- ";
    int as_node = -1;
    for (std::size_t u = 0; u < crt.tree.nodes.size(); ++u)
      if (crt.tree.subtree_leaves(static_cast<int>(u)) == block) {
        as_node = static_cast<int>(u);
        break;
      }
    if (as_node >= 0) {
      out << crt.tree.nodes[as_node].label;
    } else {
      bool first = true;
      for (Vertex v : block) {
        for (std::size_t u = 0; u < crt.tree.nodes.size(); ++u) {
          if (crt.tree.is_leaf(static_cast<int>(u)) && crt.tree.nodes[u].leaf_vertex == v) {
            out << (first ? "" : " + ") << crt.tree.nodes[u].label;
            first = false;
          }
        }
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace rankrange
