#include "doctest.h"

#include <set>
#include <stdexcept>

#include "hourglass/fraser.hpp"
#include "hourglass/trips.hpp"

using namespace hourglass;

namespace {

RectTableau example() { return RectTableau::from_columns({{1, 2, 4, 5, 8, 11, 13}, {3, 6, 7, 9, 10, 12, 14}}); }

}  // namespace

TEST_CASE("star graph trips rotate the boundary") {
  for (int r = 2; r <= 8; ++r) {
    const auto s = star_graph(r);
    for (int i = 1; i < r; ++i) {
      const auto p = trip_perm(s, i);
      for (int j = 1; j <= r; ++j) CHECK(p(j) == (j + i - 1) % r + 1);
    }
    CHECK(self_intersections(s).empty());
    CHECK(fully_reduced(s));
    CHECK(plabic_reduced(s));
  }
  CHECK_THROWS_AS(trip_perm(star_graph(3), 3), std::domain_error);
  CHECK_THROWS_AS(trip_perm(star_graph(3), 0), std::domain_error);
}

TEST_CASE("trip of the worked example") {
  const auto g = fraser_map(example());
  const auto seg = trip_segment(g, 4, 1);
  CHECK(seg.end == 8);
  CHECK_FALSE(seg.closed);
  CHECK_FALSE(seg.has_repeated_vertex());
  CHECK(trip_perm(g, 4)(1) == 8);
}

TEST_CASE("trip inverses and the underlying simple graph") {
  for (int r = 2; r <= 5; ++r) {
    for (const auto& t : all_standard_tableaux(r, 2)) {
      const auto g = fraser_map(t);
      const auto trips = trip_all(g);
      for (int i = 1; i < r; ++i) CHECK(trips[i - 1].inverse() == trips[r - i - 1]);
      CHECK(trip_perm(underlying_simple(g), 1) == trips[0]);
      CHECK(plabic_reduced(g));
    }
  }
}

TEST_CASE("every directed strand lies on one segment") {
  const auto g = fraser_map(example());
  int strands = 0, trivial_expected = 0;
  for (const auto& e : g.edges) {
    strands += 2 * e.mult;
    trivial_expected += e.mult * (e.mult - 1) / 2;
  }
  for (int i = 1; i < g.r; ++i) {
    std::set<std::pair<int, int>> seen;
    int steps = 0;
    for (const auto& s : all_trip_segments(g, i)) {
      steps += static_cast<int>(s.edges.size());
      for (std::size_t k = 0; k < s.edges.size(); ++k) seen.insert({s.edges[k], s.strands[k] * 2 + (s.vertices[k] == g.edges[s.edges[k]].u)});
    }
    CHECK(steps == static_cast<int>(seen.size()));
  }
  // An m-hourglass carries m choose 2 trivial loops, each met once per orientation.
  int trivial = 0;
  for (int i = 1; i < g.r; ++i)
    for (const auto& s : all_trip_segments(g, i)) trivial += s.trivial;
  CHECK(trivial == 2 * trivial_expected);
  CHECK(strands > 0);
}

TEST_CASE("star segments through the center cross once") {
  const auto s = star_graph(4);
  const auto a = trip_segment(s, 1, 1);
  const auto b = trip_segment(s, 1, 2);
  const auto rep = intersections(s, a, b);
  int essential = 0;
  for (const auto& ix : rep.intersections) essential += ix.essential;
  CHECK(essential == 1);
  CHECK_FALSE(has_oriented_double_crossing(rep));
}

TEST_CASE("Fraser graphs have no self-intersections or bad double crossings") {
  for (int r = 2; r <= 5; ++r) {
    for (const auto& t : all_standard_tableaux(r, 2)) {
      const auto g = fraser_map(t);
      CHECK(self_intersections(g).empty());
      CHECK_FALSE(has_bad_double_crossing(g));
    }
  }
}

TEST_CASE("crossing parity of boundary segments") {
  // Segments with interleaved endpoints cross an odd number of times.
  for (const auto& t : all_standard_tableaux(5, 2)) {
    const auto g = fraser_map(t);
    const int n = g.boundary_size();
    for (int i = 1; i < g.r; ++i) {
      const auto segs = all_trip_segments(g, i);
      for (std::size_t x = 0; x < segs.size(); ++x) {
        for (std::size_t y = x + 1; y < segs.size(); ++y) {
          const auto &s1 = segs[x], &s2 = segs[y];
          if (s1.closed || s2.closed) continue;
          std::set<int> ends = {s1.start, s1.end, s2.start, s2.end};
          if (ends.size() != 4) continue;
          auto between = [n](int a, int b, int c) { return ((c - a + n) % n) < ((b - a + n) % n); };
          const bool interleaved = between(s1.start, s1.end, s2.start) != between(s1.start, s1.end, s2.end);
          int essential = 0;
          for (const auto& ix : intersections(g, s1, s2).intersections) essential += ix.essential;
          CHECK(essential % 2 == (interleaved ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("square criterion examples") {
  const auto ok = standalone_square(4, {1, 1, 1, 1}, Color::White);
  CHECK(square_fully_reduced(ok, faces(ok).at(0)));
  const auto bad = standalone_square(4, {2, 1, 1, 1}, Color::White);
  const auto rep = fully_reduced_report(bad);
  CHECK_FALSE(rep.fully_reduced);
  CHECK_FALSE(rep.diagnosis.empty());
  const auto g = fraser_map(example());
  for (const auto& f : faces(g)) CHECK(square_fully_reduced(g, f));
  Face hex = faces(g).at(0);
  hex.edges.push_back(hex.edges.front());
  hex.vertices.push_back(hex.vertices.front());
  hex.edges.push_back(hex.edges.front());
  hex.vertices.push_back(hex.vertices.front());
  CHECK_THROWS_AS(square_fully_reduced(g, hex), std::domain_error);
}

TEST_CASE("isolated components are not fully reduced") {
  auto g = star_graph(2);
  const auto lonely = standalone_square(2, {1, 1, 1, 1}, Color::White);
  const int off = g.vertex_count(), eoff = g.edge_count();
  for (const auto& v : lonely.vertices) g.add_vertex(v.color, v.kind);
  for (const auto& e : lonely.edges) g.add_edge(e.u + off, e.v + off, e.mult);
  for (int v = 0; v < lonely.vertex_count(); ++v)
    for (int e : lonely.rotation[v]) g.rotation[v + off].push_back(e + eoff);
  const auto rep = fully_reduced_report(g);
  CHECK(rep.isolated_component);
  CHECK_FALSE(rep.fully_reduced);
}

TEST_CASE("a doubled edge makes the plabic graph non-reduced") {
  // Leaf - white = black - leaf, the middle edge doubled into a 2-gon face.
  HourglassGraph g;
  g.r = 2;
  const int b1 = g.add_vertex(Color::Black, VertexKind::Boundary);
  const int b2 = g.add_vertex(Color::White, VertexKind::Boundary);
  const int w = g.add_vertex(Color::White, VertexKind::Internal);
  const int k = g.add_vertex(Color::Black, VertexKind::Internal);
  g.boundary = {b1, b2};
  const int e0 = g.add_edge(b1, w, 1), e1 = g.add_edge(w, k, 1), e2 = g.add_edge(w, k, 1), e3 = g.add_edge(k, b2, 1);
  g.rotation[b1] = {e0};
  g.rotation[b2] = {e3};
  g.rotation[w] = {e0, e1, e2};
  g.rotation[k] = {e3, e2, e1};
  CHECK_FALSE(plabic_reduced(g));
}

TEST_CASE("rotation and reflection act on trips") {
  for (const auto& t : all_standard_tableaux(4, 2)) {
    const auto g = fraser_map(t);
    const auto w0 = Permutation::longest_element(8);
    for (int i = 1; i < 4; ++i) {
      CHECK(trip_perm(rotate(g), i) == conjugate_by_long_cycle(trip_perm(g, i)));
      CHECK(trip_perm(reflect(g), i) == w0 * trip_perm(g, i).inverse() * w0);
    }
  }
}
