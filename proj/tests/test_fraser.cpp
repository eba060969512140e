#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "hourglass/explorer.hpp"
#include "hourglass/fraser.hpp"
#include "hourglass/trips.hpp"

using namespace hourglass;

namespace {

RectTableau example() { return RectTableau::from_columns({{1, 2, 4, 5, 8, 11, 13}, {3, 6, 7, 9, 10, 12, 14}}); }

// Multiplicity sum at every internal vertex.
bool balanced(const HourglassGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_internal(v)) continue;
    int total = 0;
    for (int e : g.rotation[v]) total += g.edges[e].mult;
    if (total != g.r) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("trip permutations equal promotion permutations") {
  for (int r = 1; r <= 5; ++r) {
    for (const auto& t : all_standard_tableaux(r, 2)) {
      const auto g = fraser_map(t);
      CHECK(balanced(g));
      CHECK(fully_reduced(g));
      CHECK(is_contracted(g));
      for (int i = 1; i < r; ++i) CHECK(trip_perm(g, i) == prom_perm(t, i));
    }
  }
}

TEST_CASE("web of the worked example") {
  const auto g = fraser_map(example());
  const auto rep = validate(g);
  CHECK(rep.ok);
  CHECK(rep.white == 5);
  CHECK(rep.black == 3);
  CHECK(g.boundary_size() == 14);
  CHECK(trip_perm(g, 4)(1) == 8);
}

TEST_CASE("recovery inverts the map") {
  for (int r = 1; r <= 6; ++r) {
    for (const auto& t : all_standard_tableaux(r, 2)) {
      const auto g = fraser_map(t);
      CHECK(recover_tableau(g) == t);
      if (r >= 2) CHECK(recover_tableau(canonicalize(rotate(g))) == promote(t));
    }
  }
}

TEST_CASE("degree one recovers the column tableau") {
  for (int r = 1; r <= 8; ++r) CHECK(recover_tableau(star_graph(r)) == RectTableau::column_tableau(r));
}

TEST_CASE("all completions lie in one move class") {
  for (const auto& t : all_standard_tableaux(5, 2)) {
    const auto d = dissection(matching_from_tableau(t));
    const auto fan = fraser_map(t);
    const auto cls = move_class(fan);
    for (const auto& tri : triangulate_all(d)) {
      const auto g = fraser_map(t, tri);
      CHECK(cls.index_of(canonical_form(g)) >= 0);
      CHECK(trip_all(g) == trip_all(fan));
      CHECK(recover_tableau(g) == t);
    }
  }
}

TEST_CASE("recovered triangulation of the worked example") {
  const auto rec = recover_triangulation(fraser_map(example()));
  CHECK(rec.matching == matching_from_tableau(example()));
  CHECK(strip_zero_diagonals(rec.triangulation) == dissection(rec.matching));
  CHECK(rec.white_of_vertex.size() == 5);
}

TEST_CASE("bad inputs are rejected") {
  const auto t = example();
  const auto other = triangulate_fan(dissection(matching_from_tableau(RectTableau::superstandard(7, 2))));
  CHECK_THROWS_AS(fraser_map(t, other), std::domain_error);
  CHECK_THROWS_AS(web_from_triangulation(dissection(matching_from_tableau(t))), std::domain_error);

  // Subdivided edges are not contracted.
  auto g = fraser_map(RectTableau::superstandard(3, 2));
  int inner = -1;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_internal(g.edges[e].u) && g.is_internal(g.edges[e].v)) inner = e;
  REQUIRE(inner >= 0);
  const auto [u, v, m] = g.edges[inner];
  const int x = g.add_vertex(opposite(g.vertices[u].color), VertexKind::Internal);
  const int y = g.add_vertex(g.vertices[u].color, VertexKind::Internal);
  const int b = g.add_edge(x, y, g.r - m), c = g.add_edge(y, v, m);
  g.edges[inner].v = x;
  if (g.edges[inner].u != u) std::swap(g.edges[inner].u, g.edges[inner].v);
  *std::find(g.rotation[v].begin(), g.rotation[v].end(), inner) = c;
  g.rotation[x] = {b, inner};
  g.rotation[y] = {c, b};
  REQUIRE(validate(g).ok);
  CHECK_THROWS_AS(recover_tableau(g), std::domain_error);

  // Leaf colors do not give standard type.
  const auto sq = standalone_square(4, {1, 1, 1, 1}, Color::White);
  CHECK_FALSE(validate(sq).standard_type);
  CHECK_THROWS_AS(recover_tableau(sq), std::domain_error);
}
