#include "doctest.h"

#include "hourglass/fraser.hpp"
#include "hourglass/json_io.hpp"

using namespace hourglass;

namespace {

RectTableau example() { return RectTableau::from_columns({{1, 2, 4, 5, 8, 11, 13}, {3, 6, 7, 9, 10, 12, 14}}); }

}  // namespace

TEST_CASE("round trips are byte identical") {
  const auto t = example();
  const auto m = matching_from_tableau(t);
  const auto p = triangulate_fan(dissection(m));
  const auto g = fraser_map(t);

  const auto tj = dump_canonical(to_json(t));
  CHECK(dump_canonical(to_json(tableau_from_json(parse_json(tj)))) == tj);
  CHECK(tableau_from_json(parse_json(tj)) == t);

  const auto mj = dump_canonical(to_json(m));
  CHECK(dump_canonical(to_json(matching_from_json(parse_json(mj)))) == mj);

  const auto pj = dump_canonical(to_json(p));
  CHECK(dump_canonical(to_json(polygon_from_json(parse_json(pj)))) == pj);

  const auto gj = dump_canonical(to_json(g));
  const auto back = graph_from_json(parse_json(gj));
  CHECK(dump_canonical(to_json(back)) == gj);
  CHECK(trip_all(back) == trip_all(g));
  CHECK(gj.back() == '\n');
}

TEST_CASE("tableau layout") {
  const auto j = to_json(RectTableau::superstandard(2, 2));
  CHECK(j.at("rows") == 2);
  CHECK(j.at("entries") == Json::parse("[[1,2],[3,4]]"));
}

TEST_CASE("graph ids are renumbered in order of appearance") {
  const auto j = parse_json(R"({
    "r": 2,
    "boundary": [10, 20],
    "vertices": [
      {"id": 10, "color": "black", "kind": "boundary"},
      {"id": 20, "color": "black", "kind": "boundary"},
      {"id": 5, "color": "white", "kind": "internal"}
    ],
    "edges": [{"id": 7, "u": 10, "v": 5, "m": 1}, {"id": 3, "u": 5, "v": 20, "m": 1}],
    "rotation": {"10": [7], "20": [3], "5": [7, 3]}
  })");
  const auto g = graph_from_json(j);
  CHECK(g.boundary == std::vector<int>{0, 1});
  CHECK(g.edges[0].u == 0);
  CHECK(g.edges[0].v == 2);
  CHECK(g.rotation[2] == std::vector<int>{0, 1});
  CHECK(validate(g).ok);
  CHECK(isomorphic(g, star_graph(2)));
}

TEST_CASE("malformed input") {
  try {
    parse_json("{\"rows\": 2,, }");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("byte 12") != std::string::npos);
  }
  CHECK_THROWS_AS(tableau_from_json(parse_json(R"({"rows": 1, "cols": 2})")), InputError);
  CHECK_THROWS_AS(tableau_from_json(parse_json(R"({"rows": 1, "cols": 2, "entries": [[2, 1]]})")), InputError);
  CHECK_THROWS_AS(tableau_from_json(parse_json(R"({"rows": "x", "cols": 2, "entries": [[1, 2]]})")), InputError);
  CHECK_THROWS_AS(matching_from_json(parse_json(R"({"n": 4, "pairs": [[1, 3], [2, 4]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"r": 2, "boundary": [], "vertices": [], "edges": [{"id": 0, "u": 1, "v": 2, "m": 1}], "rotation": {}})")),
                  InputError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
  const auto p = polygon_from_json(parse_json(R"({"s": 3, "boundary_weights": [1, 1, 1], "diagonals": []})"));
  CHECK(p.claw_sizes.empty());
}
