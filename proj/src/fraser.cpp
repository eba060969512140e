#include "hourglass/fraser.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hourglass/trips.hpp"

namespace hourglass {

namespace {

bool is_side(int s, int a, int b) {
  if (a > b) std::swap(a, b);
  return b == a + 1 || (a == 1 && b == s);
}

// Total weight on the side of edge {a, b} away from polygon vertex `apex`,
// the edge itself included.
int far_weight(const WeightedPolygonGraph& t, int a, int b, int apex) {
  if (a > b) std::swap(a, b);
  if (is_side(t.s, a, b)) return t.edge_weight(a, b);
  int inner = 0;
  for (int j = a; j < b; ++j) inner += t.boundary_weights[j - 1];
  for (const auto& d : t.diagonals) {
    if (d.a >= a && d.b <= b) inner += d.weight;
  }
  const bool apex_inside = apex > a && apex < b;
  return apex_inside ? t.total_weight() - inner + t.edge_weight(a, b) : inner;
}

}  // namespace

HourglassGraph web_from_triangulation(const WeightedPolygonGraph& t) {
  if (!t.is_triangulation()) throw std::domain_error("web_from_triangulation: input is not a triangulation");
  const int s = t.s;
  const int r = t.total_weight();
  const int n = std::accumulate(t.claw_sizes.begin(), t.claw_sizes.end(), 0);
  if (static_cast<int>(t.claw_sizes.size()) != s || static_cast<int>(t.claw_offsets.size()) != s || n != 2 * r) {
    throw std::domain_error("web_from_triangulation: claw data inconsistent with the weights");
  }

  HourglassGraph g;
  g.r = r;
  for (int p = 0; p < n; ++p) g.boundary.push_back(g.add_vertex(Color::Black, VertexKind::Boundary));
  std::vector<int> white(s + 1);
  for (int j = 1; j <= s; ++j) white[j] = g.add_vertex(Color::White, VertexKind::Internal);
  for (int j = 1; j <= s; ++j) {
    const ClawSet claw{t.claw_offsets[j - 1], t.claw_sizes[j - 1]};
    for (int p : claw.members(n)) {
      const int e = g.add_edge(p - 1, white[j], 1);
      g.rotation[p - 1] = {e};
      g.rotation[white[j]].push_back(e);
    }
  }

  // Edges from each triangle's black vertex, keyed by (white polygon vertex, triangle).
  std::map<std::pair<int, int>, int> tri_edge;
  const auto tris = t.triangles();
  for (std::size_t k = 0; k < tris.size(); ++k) {
    const auto& tri = tris[k];
    const int b = g.add_vertex(Color::Black, VertexKind::Internal);
    for (int idx = 0; idx < 3; ++idx) {
      const int apex = tri[idx];
      const int w = far_weight(t, tri[(idx + 1) % 3], tri[(idx + 2) % 3], apex);
      if (w <= 0) continue;
      const int e = g.add_edge(b, white[apex], w);
      g.rotation[b].push_back(e);
      tri_edge[{apex, static_cast<int>(k)}] = e;
    }
  }
  for (int j = 1; j <= s; ++j) {
    std::vector<std::pair<int, int>> around;  // (angular key, edge)
    for (std::size_t k = 0; k < tris.size(); ++k) {
      auto it = tri_edge.find({j, static_cast<int>(k)});
      if (it == tri_edge.end()) continue;
      int key = s;
      for (int x : tris[k]) {
        if (x != j) key = std::min(key, ((x - j) % s + s) % s);
      }
      around.emplace_back(key, it->second);
    }
    std::sort(around.begin(), around.end());
    for (auto [key, e] : around) g.rotation[white[j]].push_back(e);
  }
  return g;
}

HourglassGraph fraser_map(const RectTableau& t, TriangulationStrategy) {
  return web_from_triangulation(triangulate_fan(dissection(matching_from_tableau(t))));
}

HourglassGraph fraser_map(const RectTableau& t, const WeightedPolygonGraph& tri) {
  const auto d = dissection(matching_from_tableau(t));
  if (!tri.is_triangulation() || strip_zero_diagonals(tri) != d) {
    throw std::domain_error("fraser_map: triangulation does not complete the dissection of the tableau");
  }
  return web_from_triangulation(tri);
}

RecoveredTriangulation recover_triangulation(const HourglassGraph& g) {
  const auto rep = validate(g);
  if (!rep.ok) throw std::domain_error("recover: invalid graph: " + rep.violations.front());
  if (!rep.standard_type || rep.plucker_degree != 2) {
    throw std::domain_error("recover: triangulation recovery needs standard type and Plucker degree two");
  }
  const int n = g.boundary_size();
  const int r = g.r;
  const auto pos = g.boundary_positions();

  struct Claw {
    int white, start, size;
  };
  std::vector<Claw> claws;
  std::vector<int> blacks;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_internal(v)) continue;
    if (g.vertices[v].color == Color::Black) {
      blacks.push_back(v);
      continue;
    }
    std::vector<int> leaves;
    for (int e : g.rotation[v]) {
      const int y = g.other(e, v);
      if (g.is_boundary(y)) leaves.push_back(pos[y] + 1);
    }
    if (leaves.empty()) throw std::domain_error("recover: white vertex " + std::to_string(v) + " has no claw");
    const int size = static_cast<int>(leaves.size());
    // The claw starts at the leaf whose predecessor is not a leaf of v.
    int start = -1;
    for (int p : leaves) {
      const int prev = (p + n - 2) % n + 1;
      if (std::find(leaves.begin(), leaves.end(), prev) == leaves.end() || size == n) {
        if (start != -1 && size != n) throw std::domain_error("recover: claw is not a cyclic interval");
        start = p;
        if (size == n) break;
      }
    }
    if (start == -1) throw std::domain_error("recover: claw is not a cyclic interval");
    claws.push_back({v, start, size});
  }
  std::sort(claws.begin(), claws.end(), [n](const Claw& a, const Claw& b) {
    return (a.start + n - 2) % n < (b.start + n - 2) % n;
  });
  const int s = static_cast<int>(claws.size());
  if (static_cast<int>(blacks.size()) != s - 2) throw std::domain_error("recover: expected w - b = 2");

  RecoveredTriangulation out;
  std::map<int, int> vertex_of;  // white id -> polygon vertex
  auto& t = out.triangulation;
  t.s = s;
  t.boundary_weights.assign(s, 0);
  for (int j = 1; j <= s; ++j) {
    out.white_of_vertex.push_back(claws[j - 1].white);
    vertex_of[claws[j - 1].white] = j;
    t.claw_offsets.push_back(claws[j - 1].start);
    t.claw_sizes.push_back(claws[j - 1].size);
  }

  std::vector<std::vector<int>> tri_of_black;
  std::map<std::pair<int, int>, int> mult;  // (black, polygon vertex) -> multiplicity
  for (int b : blacks) {
    if (g.simple_degree(b) != 3) throw std::domain_error("recover: black vertex of simple degree other than 3");
    std::vector<int> tri;
    for (int e : g.rotation[b]) {
      const int w = g.other(e, b);
      if (!vertex_of.count(w)) throw std::domain_error("recover: black vertex adjacent to the boundary");
      tri.push_back(vertex_of[w]);
      mult[{b, vertex_of[w]}] = g.edges[e].mult;
    }
    std::sort(tri.begin(), tri.end());
    if (std::adjacent_find(tri.begin(), tri.end()) != tri.end()) {
      throw std::domain_error("recover: black vertex with parallel edges");
    }
    tri_of_black.push_back(tri);
  }

  if (s == 2) {
    t.boundary_weights[0] = r;
  } else {
    for (int j = 1; j <= s; ++j) {
      const int y = j % s + 1;
      int found = 0;
      for (std::size_t k = 0; k < blacks.size(); ++k) {
        const auto& tri = tri_of_black[k];
        if (std::count(tri.begin(), tri.end(), j) && std::count(tri.begin(), tri.end(), y)) {
          for (int z : tri) {
            if (z != j && z != y) t.boundary_weights[j - 1] = mult[{blacks[k], z}];
          }
          ++found;
        }
      }
      if (found != 1) throw std::domain_error("recover: polygon side is not in exactly one triangle");
    }
    for (const auto& f : faces(g)) {
      if (f.length() != 4) throw std::domain_error("recover: face of length " + std::to_string(f.length()));
      std::vector<int> ws;
      for (int v : f.vertices) {
        if (g.vertices[v].color == Color::White) ws.push_back(vertex_of.at(v));
      }
      if (ws.size() != 2 || is_side(s, ws[0], ws[1])) throw std::domain_error("recover: square face does not span a diagonal");
      const int w = r - f.m_value;
      if (w < 0) throw std::domain_error("recover: square face with m(F) > r");
      t.diagonals.push_back({std::min(ws[0], ws[1]), std::max(ws[0], ws[1]), w});
    }
    std::sort(t.diagonals.begin(), t.diagonals.end());
  }
  if (!t.is_triangulation()) throw std::domain_error("recover: faces do not form a triangulation");
  if (s >= 3) {
    auto got = t.triangles();
    auto expect = tri_of_black;
    std::sort(expect.begin(), expect.end());
    if (got != expect) throw std::domain_error("recover: triangles disagree with black vertices");
  }

  // Rebuild the matching: claw X sends its last points to the nearest claw
  // clockwise, earlier points to claws further away; pairs between two
  // claws are nested.
  std::map<std::pair<int, int>, std::vector<int>> assigned;
  for (int x = 1; x <= s; ++x) {
    const auto pts = ClawSet{t.claw_offsets[x - 1], t.claw_sizes[x - 1]}.members(n);
    int idx = static_cast<int>(pts.size());
    for (int d = 1; d < s; ++d) {
      const int y = (x - 1 + d) % s + 1;
      const int w = std::max(0, t.edge_weight(x, y));
      if (w > idx) throw std::domain_error("recover: claw sizes disagree with the weights");
      assigned[{x, y}].assign(pts.begin() + (idx - w), pts.begin() + idx);
      idx -= w;
    }
    if (idx != 0) throw std::domain_error("recover: claw sizes disagree with the weights");
  }
  std::vector<int> partner(n, 0);
  for (int x = 1; x <= s; ++x) {
    for (int y = x + 1; y <= s; ++y) {
      const auto& a = assigned[{x, y}];
      const auto& b = assigned[{y, x}];
      if (a.size() != b.size()) throw std::domain_error("recover: unbalanced arcs between claws");
      const int w = static_cast<int>(a.size());
      for (int k = 0; k < w; ++k) {
        partner[a[k] - 1] = b[w - 1 - k];
        partner[b[w - 1 - k] - 1] = a[k];
      }
    }
  }
  try {
    out.matching = NoncrossingMatching(partner);
  } catch (const std::invalid_argument& e) {
    throw std::domain_error(std::string("recover: reconstructed matching is invalid: ") + e.what());
  }
  return out;
}

RectTableau recover_tableau(const HourglassGraph& g, bool check_fully_reduced) {
  const auto rep = validate(g);
  if (!rep.ok) throw std::domain_error("recover_tableau: invalid graph: " + rep.violations.front());
  if (!rep.standard_type) throw std::domain_error("recover_tableau: graph is not of standard type");
  if (!is_contracted(g)) throw std::domain_error("recover_tableau: graph is not contracted");
  if (check_fully_reduced) {
    const auto fr = fully_reduced_report(g);
    if (!fr.fully_reduced) throw std::domain_error("recover_tableau: graph is not fully reduced: " + fr.diagnosis);
  }
  if (rep.plucker_degree == 1) {
    if (!isomorphic(g, star_graph(g.r))) throw std::domain_error("recover_tableau: degree one graph is not the star");
    return RectTableau::column_tableau(g.r);
  }
  if (rep.plucker_degree != 2) throw std::domain_error("recover_tableau: Plucker degree must be 1 or 2");

  const auto rec = recover_triangulation(g);
  const auto d = dissection(rec.matching);
  if (d != strip_zero_diagonals(rec.triangulation)) {
    throw std::domain_error("recover_tableau: recovered dissection disagrees with the recovered matching");
  }
  if (canonical_form(web_from_triangulation(rec.triangulation)) != canonical_form(g)) {
    throw std::domain_error("recover_tableau: rebuilt graph differs from the input");
  }
  return tableau_from_matching(rec.matching);
}

}  // namespace hourglass
