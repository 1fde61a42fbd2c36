#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherical/catalog.hpp"
#include "spherical/io.hpp"

using namespace spherical;
using namespace spherical::io;

TEST_CASE("integers and matrices") {
  CHECK(integer_to_json(BigInt(-7)) == json(-7));
  const BigInt big("123456789012345678901234567890");
  CHECK(integer_to_json(big) == json("123456789012345678901234567890"));
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK_THROWS_AS(integer_from_json(json("12a")), SchemaError);
  CHECK_THROWS_AS(integer_from_json(json(1.5)), SchemaError);

  const IntegerMatrix m = to_integer_matrix({{1, -2, 3}, {4, 5, 6}});
  const json j = matrix_to_json(m);
  CHECK(j.at("rows") == 2);
  CHECK(j.at("cols") == 3);
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(json::parse("[[1,-2,3],[4,5,6]]")) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":2,"cols":3,"entries":[[1,2,3]]})")), SchemaError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), SchemaError);
  try {
    matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[[1,"x"]]})"));
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.where() == "/entries/0/1");
  }
}

TEST_CASE("Cartan and datum documents") {
  CHECK(cartan_from_json(json::parse(R"({"type":"B","rank":4})")) == CartanSpec::of_type('B', 4));
  CHECK(cartan_from_json(json::parse(R"({"cartan":[[2,-1],[-1,2]]})")) == CartanSpec::of_type('A', 2));
  CHECK(cartan_from_json(json::parse(R"({"type":"A1xA1"})")) == CartanSpec::of_type('D', 2));
  CHECK_THROWS_AS(cartan_from_json(json::parse(R"({"type":"Q","rank":2})")), SchemaError);
  CHECK_THROWS_AS(cartan_from_json(json::parse(R"({"cartan":[[2,1],[1,2]]})")), SchemaError);

  const auto [datum, table] = catalog::build_unordered_pairs(5);
  const json j = datum_to_json(datum);
  CHECK(j.at("type") == "B");
  const auto back = datum_from_json(j);
  CHECK(back.cartan == datum.cartan);
  CHECK(back.weight_sublattice == datum.weight_sublattice);
  CHECK(back.spherical_roots == datum.spherical_roots);
  CHECK(datum_to_json(back) == j);
}

TEST_CASE("reflection tables round-trip") {
  for (const auto& t : {catalog::build_ordered_pairs(3).second, catalog::build_g2_case(),
                        catalog::build_unordered_pairs(4).second}) {
    const json j = table_to_json(t);
    const ReflectionTable back = table_from_json(j);
    CHECK(table_to_json(back) == j);
    CHECK(back.size() == t.size());
  }
  const json doc = json::parse(R"({
    "orbits": [{"id":"O","open":true,"max_rank":true},{"id":"O'","open":true},
               {"id":"L1","open":false,"max_rank":false},{"id":"L2","open":false,"max_rank":false}],
    "cartan": {"type":"A","rank":2},
    "spans": [{"root":1,"type":"T2","open":["O","O'"],"lower":["L1","L2"]}]
  })");
  const ReflectionTable t = table_from_json(doc);
  CHECK(t.image(1, "O") == "O'");
  CHECK(t.span_of(2, "O").type == EdgeType::P);

  json bad = doc;
  bad["spans"][0]["type"] = "T9";
  CHECK_THROWS_AS(table_from_json(bad), SchemaError);
  bad = doc;
  bad["spans"][0]["lower"] = json::array({"L1"});
  CHECK_THROWS_AS(table_from_json(bad), SchemaError);
  bad = doc;
  bad.erase("cartan");
  CHECK_THROWS_AS(table_from_json(bad), SchemaError);
}

TEST_CASE("braid reports") {
  const auto report = check_braid(catalog::build_torus_counterexample(CartanSpec::of_type('A', 2)));
  const json j = braid_to_json(report);
  CHECK(j.at("holds") == false);
  CHECK(j.at("pairs").at(0).at("m") == 3);
  CHECK(j.at("pairs").at(0).at("witness") == "++");
  CHECK(braid_to_json(check_braid(catalog::build_g2_case())).at("pairs").at(0).at("witness").is_null());
}

TEST_CASE("DOT output is deterministic and lists every move once") {
  const auto t = catalog::build_ordered_pairs(2).second;
  const std::string dot = to_dot(t, "ordered_pairs");
  CHECK(dot == to_dot(catalog::build_ordered_pairs(2).second, "ordered_pairs"));
  CHECK(dot.rfind("graph \"ordered_pairs\" {\n", 0) == 0);
  CHECK(dot.find("\"O\" [shape=doublecircle];") != std::string::npos);
  CHECK(dot.find("\"O\" -- \"O'\" [label=\"s2:T2\"];") != std::string::npos);
  CHECK(dot.find("\"O\" -- \"O_1\" [label=\"s1:U\"];") != std::string::npos);
  CHECK(dot.find("\"O_1^+\" -- \"O_1^-\" [label=\"s2:T1\"];") != std::string::npos);
  CHECK(dot.find("\"O'\" -- \"O\"") == std::string::npos);
  CHECK(dot.find("s1:P") == std::string::npos);
  // Nodes appear in name order.
  CHECK(dot.find("\"O\" [") < dot.find("\"O'\" [") );
  CHECK(dot.find("\"O'\" [") < dot.find("\"O_1\";"));
}

TEST_CASE("parse errors") { CHECK_THROWS_AS(parse_json("{"), SchemaError); }
