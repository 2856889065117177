#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "rankrange/io.hpp"

using namespace rankrange;
using rrtest::Rng;

TEST_CASE("graph section round trip") {
  Rng rng(11001);
  for (int it = 0; it < 50; ++it) {
    int n = rrtest::rnd_int(rng, 2, 8);
    Instance inst = rrtest::rnd_general_instance(rng, n, rrtest::rnd_int(rng, 1, n - 1));
    InstanceFile file = parse_instance_text(instance_to_json_text(inst));
    const Instance& back = file.graph();
    REQUIRE(back.n() == inst.n());
    CHECK(back.special() == inst.special());
    for (Vertex v = 0; v < n; ++v) CHECK(back.mu(v) == inst.mu(v));
    CHECK(back.edge_list() == inst.edge_list());
  }
}

TEST_CASE("rationals accepted as fractions, integers and decimals") {
  InstanceFile file = parse_instance_text(R"({
    "vertices": [
      {"id": 0, "mu": "3/4"},
      {"id": 1, "mu": 2},
      {"id": 2, "mu": "1.25"}
    ],
    "edges": [[0, 1], [1, 2]],
    "special": [1]
  })");
  const Instance& inst = file.graph();
  CHECK(inst.mu(0) == Rational(BigInt(3), BigInt(4)));
  CHECK(inst.mu(1) == Rational(2));
  CHECK(inst.mu(2) == Rational(BigInt(5), BigInt(4)));
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_instance_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_instance_text(R"({"vertices": [{"id": 5}]})"), ParseError);
  CHECK_THROWS_AS(parse_instance_text(
                      R"({"vertices": [{"id": 0, "mu": "x"}], "edges": []})"),
                  ParseError);
  CHECK_THROWS_AS(load_instance_file("/no/such/file.json"), ParseError);
  InstanceFile empty = parse_instance_text("{}");
  CHECK_THROWS_AS(empty.graph(), DomainError);
}

TEST_CASE("variant sections") {
  InstanceFile file = parse_instance_text(R"({
    "vertices": [{"id": 0}, {"id": 1}, {"id": 2}, {"id": 3}],
    "edges": [[0, 1], [1, 2], [2, 3], [3, 0]],
    "special": [0],
    "classes": [[1, 2], [3]],
    "circulant": {"n": 3, "jumps": [1]}
  })");
  REQUIRE(file.classes.has_value());
  CHECK(file.classes->size() == 2);
  REQUIRE(file.circulant.has_value());
  CHECK(file.circulant->n == 3);
  CHECK(file.circulant->jumps == std::vector<int>{1});
}

TEST_CASE("grid section derives the graph instance") {
  InstanceFile file = parse_instance_text(R"({
    "grid": {
      "l": 3, "w": 2,
      "vacant": [[2, 2]],
      "mu": [["1", "2", "3"], ["4", "5", "6"]],
      "special": {"a": 1, "b": 1, "c": 1, "d": 2}
    }
  })");
  REQUIRE(file.grid.has_value());
  CHECK(file.grid->is_vacant(2, 2));
  CHECK(file.grid->mu[file.grid->idx(3, 2)] == Rational(6));
  const Instance& inst = file.graph();
  CHECK(inst.n() == 5);
  CHECK(inst.special().size() == 2);
}

TEST_CASE("gerrymander section") {
  InstanceFile file = parse_instance_text(R"({
    "grid": {"l": 2, "w": 2, "mu": [["1", "1"], ["1", "1"]]},
    "gerrymander": {
      "mu_r": [["1", "-1"], ["1/2", "0"]],
      "districts": 2,
      "rho": "0"
    }
  })");
  REQUIRE(file.gerrymander.has_value());
  CHECK(file.gerrymander->n_districts == 2);
  CHECK(file.gerrymander->mu_r[1] == Rational(-1));
  CHECK_THROWS_AS(parse_instance_text(R"({
    "gerrymander": {"mu_r": [], "districts": 1, "rho": "0"}
  })"),
                  ParseError);
}

TEST_CASE("dot rendering mentions every block") {
  Rng rng(11002);
  Instance inst = rrtest::rnd_general_instance(rng, 5, 1);
  Partition p;
  for (Vertex v : inst.free_vertices()) p.blocks.push_back({v});
  std::string dot = partition_to_dot(inst, p);
  CHECK(dot.find("cluster_special") != std::string::npos);
  CHECK(dot.find("cluster_0") != std::string::npos);
  CHECK(dot.find("cluster_3") != std::string::npos);
  CHECK(dot.find("graph partition {") == 0);
}
