#include "doctest.h"

#include <set>
#include <stdexcept>

#include "hourglass/matching.hpp"

using namespace hourglass;

namespace {

RectTableau example() { return RectTableau::from_columns({{1, 2, 4, 5, 8, 11, 13}, {3, 6, 7, 9, 10, 12, 14}}); }

long long catalan(int k) {
  std::vector<long long> c(k + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= k; ++m)
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c[k];
}

}  // namespace

TEST_CASE("matching validation") {
  CHECK_THROWS_AS(NoncrossingMatching({3, 4, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(NoncrossingMatching({1, 2}), std::invalid_argument);
  const auto m = NoncrossingMatching::from_pairs(4, {{1, 4}, {2, 3}});
  CHECK(m(1) == 4);
  CHECK(m.is_opener(2));
  CHECK(m.pairs() == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
}

TEST_CASE("tableaux and matchings correspond") {
  const auto m = NoncrossingMatching::from_pairs(4, {{1, 2}, {3, 4}});
  CHECK(tableau_from_matching(m).column(1) == std::vector<int>{1, 3});
  for (int r = 1; r <= 6; ++r) {
    const auto all = all_noncrossing_matchings(r);
    CHECK(static_cast<long long>(all.size()) == catalan(r));
    std::set<NoncrossingMatching> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    for (const auto& t : all_standard_tableaux(r, 2)) {
      const auto mt = matching_from_tableau(t);
      CHECK(tableau_from_matching(mt) == t);
      for (int x : t.column(1)) CHECK(mt.is_opener(x));
    }
  }
}

TEST_CASE("claw sets of the worked example") {
  const auto c = claw_sets(matching_from_tableau(example()));
  REQUIRE(c.size() == 5);
  const std::vector<std::vector<int>> expect = {{3, 4, 5}, {6, 7, 8}, {9, 10, 11}, {12, 13}, {14, 1, 2}};
  for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k].members(14) == expect[k]);
  CHECK(c[4].contains(14, 1));
  CHECK_FALSE(c[4].contains(14, 3));
}

TEST_CASE("claw sets partition the circle") {
  for (int r = 1; r <= 6; ++r) {
    for (const auto& m : all_noncrossing_matchings(r)) {
      std::vector<int> hits(2 * r + 1, 0);
      for (const auto& c : claw_sets(m))
        for (int p : c.members(2 * r)) ++hits[p];
      for (int p = 1; p <= 2 * r; ++p) CHECK(hits[p] == 1);
    }
  }
}

TEST_CASE("dissection of the worked example") {
  const auto d = dissection(matching_from_tableau(example()));
  CHECK(d.s == 5);
  CHECK(d.boundary_weights == std::vector<int>{2, 1, 1, 1, 1});
  CHECK(d.diagonals == std::vector<Diagonal>{{3, 5, 1}});
  CHECK(d.total_weight() == 7);
  CHECK(d.edge_weight(3, 5) == 1);
  CHECK(d.edge_weight(1, 3) == -1);
}

TEST_CASE("dissection invariants") {
  for (int r = 1; r <= 6; ++r) {
    for (const auto& m : all_noncrossing_matchings(r)) {
      const auto d = dissection(m);
      CHECK(d.total_weight() == r);
      // Each polygon vertex carries as much weight as its claw has points.
      for (int v = 1; v <= d.s && d.s >= 3; ++v) CHECK(d.vertex_weight(v) == d.claw_sizes[v - 1]);
      for (const auto& diag : d.diagonals) CHECK(diag.weight > 0);
      CHECK(strip_zero_diagonals(triangulate_fan(d)) == d);
    }
  }
  const auto two = dissection(NoncrossingMatching::from_pairs(4, {{1, 2}, {3, 4}}));
  CHECK(two.s == 2);
  CHECK(two.boundary_weights == std::vector<int>{2, 0});
}

TEST_CASE("triangulations of the plain polygon are counted by Catalan numbers") {
  for (int s = 3; s <= 8; ++s) {
    const auto all = triangulate_all(plain_polygon(s));
    CHECK(static_cast<long long>(all.size()) == catalan(s - 2));
    for (const auto& t : all) {
      CHECK(t.is_triangulation());
      CHECK(static_cast<int>(t.diagonals.size()) == s - 3);
      CHECK(static_cast<int>(t.triangles().size()) == s - 2);
    }
  }
}

TEST_CASE("fan completion and flips") {
  const auto fan = triangulate_fan(plain_polygon(5));
  CHECK(fan.diagonals == std::vector<Diagonal>{{1, 3, 0}, {1, 4, 0}});
  const auto flipped = flip_zero_diagonal(fan, 1, 3);
  CHECK(flipped.diagonals == std::vector<Diagonal>{{1, 4, 0}, {2, 4, 0}});
  CHECK_THROWS_AS(flip_zero_diagonal(fan, 2, 4), std::domain_error);
  const auto d = dissection(matching_from_tableau(example()));
  CHECK_THROWS_AS(flip_zero_diagonal(triangulate_fan(d), 3, 5), std::domain_error);
}
