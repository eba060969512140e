#include "hourglass/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "graph_internal.hpp"

namespace hourglass {

int HourglassGraph::degree(int v) const {
  int d = 0;
  for (int e : rotation[v]) d += edges[e].mult;
  return d;
}

std::vector<int> HourglassGraph::boundary_positions() const {
  std::vector<int> pos(vertices.size(), -1);
  for (int j = 0; j < boundary_size(); ++j) pos[boundary[j]] = j;
  return pos;
}

int HourglassGraph::rotation_index(int v, int e) const {
  const auto& rot = rotation[v];
  auto it = std::find(rot.begin(), rot.end(), e);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

std::vector<std::vector<int>> HourglassGraph::components() const {
  std::vector<int> comp(vertices.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (int e : rotation[x]) {
        const int y = other(e, x);
        if (comp[y] == -1) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

int HourglassGraph::add_vertex(Color c, VertexKind k) {
  vertices.push_back({c, k});
  rotation.emplace_back();
  return vertex_count() - 1;
}

int HourglassGraph::add_edge(int u, int v, int mult) {
  edges.push_back({u, v, mult});
  return edge_count() - 1;
}

namespace detail {

DartSystem darts_of(const HourglassGraph& g) {
  DartSystem d;
  d.origin.resize(2 * g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    d.origin[2 * e] = g.edges[e].u;
    d.origin[2 * e + 1] = g.edges[e].v;
  }
  d.rot.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int e : g.rotation[v]) d.rot[v].push_back(2 * e + (g.edges[e].u == v ? 0 : 1));
  }
  d.finish();
  return d;
}

void DartSystem::finish() {
  index.assign(origin.size(), -1);
  for (std::size_t v = 0; v < rot.size(); ++v) {
    for (std::size_t k = 0; k < rot[v].size(); ++k) index[rot[v][k]] = static_cast<int>(k);
  }
}

int DartSystem::next_in_face(int dart) const {
  const int t = dart ^ 1;
  const auto& r = rot[origin[t]];
  const int k = index[t];
  return r[(k + static_cast<int>(r.size()) - 1) % r.size()];
}

std::vector<std::vector<int>> DartSystem::face_orbits() const {
  std::vector<bool> seen(origin.size(), false);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < origin.size(); ++s) {
    if (seen[s] || index[s] < 0) continue;
    std::vector<int> orbit;
    int d = static_cast<int>(s);
    while (!seen[d]) {
      seen[d] = true;
      orbit.push_back(d);
      d = next_in_face(d);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace detail

namespace {

// Euler characteristic check of the embedding closed up by the boundary circle.
bool embedding_is_planar(const HourglassGraph& g, std::string& why) {
  detail::DartSystem d = detail::darts_of(g);
  const int n = g.boundary_size();
  const int base = g.edge_count();
  d.origin.resize(2 * (base + n));
  for (int j = 0; j < n; ++j) {
    d.origin[2 * (base + j)] = g.boundary[j];
    d.origin[2 * (base + j) + 1] = g.boundary[(j + 1) % n];
  }
  for (int j = 0; j < n; ++j) {
    auto& r = d.rot[g.boundary[j]];
    r.push_back(2 * (base + (j + n - 1) % n) + 1);
    r.push_back(2 * (base + j));
  }
  d.finish();

  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < d.origin.size(); k += 2) parent[find(d.origin[k])] = find(d.origin[k + 1]);
  int comps = 0;
  for (int v = 0; v < g.vertex_count(); ++v) comps += find(v) == v;

  const long V = g.vertex_count();
  const long E = static_cast<long>(d.origin.size()) / 2;
  const long F = static_cast<long>(d.face_orbits().size());
  if (V - E + F != 2L * comps) {
    why = "embedding is not planar: V - E + F = " + std::to_string(V - E + F) + " but expected " +
          std::to_string(2 * comps);
    return false;
  }
  return true;
}

}  // namespace

ValidationReport validate(const HourglassGraph& g) {
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const int V = g.vertex_count();
  if (g.r < 1) fail("r must be positive");
  if (static_cast<int>(g.rotation.size()) != V) {
    fail("rotation system size differs from vertex count");
    return rep;
  }
  bool structural = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[e];
    const std::string name = "edge " + std::to_string(e);
    if (ed.u < 0 || ed.u >= V || ed.v < 0 || ed.v >= V) {
      fail(name + " has an endpoint out of range");
      structural = false;
      continue;
    }
    if (ed.u == ed.v) {
      fail(name + " is a loop");
      structural = false;
    }
    if (ed.mult < 1) fail(name + " has multiplicity below 1");
    if (g.vertices[ed.u].color == g.vertices[ed.v].color) fail(name + " joins two vertices of the same color");
  }
  if (!structural) return rep;

  std::vector<int> seen(g.edge_count(), 0);
  for (int v = 0; v < V; ++v) {
    for (int e : g.rotation[v]) {
      if (e < 0 || e >= g.edge_count() || (g.edges[e].u != v && g.edges[e].v != v)) {
        fail("rotation of vertex " + std::to_string(v) + " lists a non-incident edge");
        structural = false;
      } else {
        ++seen[e];
      }
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (seen[e] != 2) {
      fail("edge " + std::to_string(e) + " appears " + std::to_string(seen[e]) + " times in the rotation system");
      structural = false;
    }
  }
  if (!structural) return rep;

  std::vector<int> in_boundary(V, 0);
  for (int b : g.boundary) {
    if (b < 0 || b >= V) {
      fail("boundary lists an unknown vertex");
      return rep;
    }
    ++in_boundary[b];
  }
  bool standard = true;
  for (int v = 0; v < V; ++v) {
    const std::string name = "vertex " + std::to_string(v);
    if (g.is_boundary(v)) {
      if (in_boundary[v] != 1) fail(name + " is a boundary vertex listed " + std::to_string(in_boundary[v]) + " times");
      if (g.simple_degree(v) != 1) fail(name + " is a boundary vertex of simple degree " + std::to_string(g.simple_degree(v)));
      if (g.vertices[v].color != Color::Black || g.degree(v) != 1) standard = false;
    } else {
      if (in_boundary[v]) fail(name + " is internal but listed on the boundary");
      if (g.degree(v) != g.r) {
        fail(name + " has degree " + std::to_string(g.degree(v)) + " instead of " + std::to_string(g.r));
      }
      (g.vertices[v].color == Color::White ? rep.white : rep.black)++;
    }
  }
  std::string why;
  if (!embedding_is_planar(g, why)) fail(why);

  rep.standard_type = standard;
  if (standard && g.r >= 1) {
    const int n = g.boundary_size();
    if (n % g.r != 0) {
      fail("Plucker degree n/r = " + std::to_string(n) + "/" + std::to_string(g.r) + " is not an integer");
    } else {
      rep.plucker_degree = n / g.r;
      if (rep.white - rep.black != n / g.r) {
        fail("white minus black is " + std::to_string(rep.white - rep.black) + " but n/r is " + std::to_string(n / g.r));
      }
    }
  }
  return rep;
}

int plucker_degree(const HourglassGraph& g) {
  for (int b : g.boundary) {
    if (g.vertices[b].color != Color::Black || g.degree(b) != 1) {
      throw std::domain_error("plucker_degree: graph is not of standard type");
    }
  }
  if (g.r < 1 || g.boundary_size() % g.r != 0) throw std::domain_error("plucker_degree: n is not divisible by r");
  return g.boundary_size() / g.r;
}

std::pair<int, int> white_black_counts(const HourglassGraph& g) {
  int w = 0, b = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_internal(v)) continue;
    (g.vertices[v].color == Color::White ? w : b)++;
  }
  return {w, b};
}

std::vector<Face> faces(const HourglassGraph& g) {
  const auto d = detail::darts_of(g);
  std::vector<bool> touches_boundary(g.vertex_count(), false);
  for (const auto& comp : g.components()) {
    const bool has = std::any_of(comp.begin(), comp.end(), [&](int v) { return g.is_boundary(v); });
    for (int v : comp) touches_boundary[v] = has;
  }
  std::vector<Face> out;
  for (const auto& orbit : d.face_orbits()) {
    Face f;
    bool keep = true;
    for (int dart : orbit) {
      const int v = d.origin[dart];
      if (g.is_boundary(v) || !touches_boundary[v]) keep = false;
      f.vertices.push_back(v);
      f.edges.push_back(dart / 2);
      f.m_value += g.edges[dart / 2].mult;
    }
    if (!keep) continue;
    std::size_t best = 0;
    for (std::size_t k = 1; k < f.vertices.size(); ++k) {
      if (std::pair(f.vertices[k], f.edges[k]) < std::pair(f.vertices[best], f.edges[best])) best = k;
    }
    std::rotate(f.vertices.begin(), f.vertices.begin() + best, f.vertices.end());
    std::rotate(f.edges.begin(), f.edges.begin() + best, f.edges.end());
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return std::pair(a.vertices, a.edges) < std::pair(b.vertices, b.edges);
  });
  return out;
}

HourglassGraph restrict_graph(const HourglassGraph& g, const std::vector<int>& inside) {
  std::vector<int> new_id(g.vertex_count(), -1);
  for (int v : inside) {
    if (v < 0 || v >= g.vertex_count() || !g.is_internal(v)) {
      throw std::domain_error("restrict: selection must consist of internal vertices");
    }
    if (new_id[v] != -1) throw std::domain_error("restrict: selection lists a vertex twice");
    new_id[v] = 0;
  }
  auto in_s = [&](int v) { return new_id[v] != -1; };
  auto is_cut = [&](int e) { return in_s(g.edges[e].u) != in_s(g.edges[e].v); };

  int cut_total = 0;
  int start_edge = -1, start_vertex = -1, best_pos = -1;
  const auto pos = g.boundary_positions();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!is_cut(e)) continue;
    ++cut_total;
    const int x = in_s(g.edges[e].u) ? g.edges[e].u : g.edges[e].v;
    const int y = g.other(e, x);
    const int p = g.is_boundary(y) ? pos[y] : -1;
    const bool better = start_edge == -1 || (p >= 0 && (best_pos < 0 || p < best_pos));
    if (better) {
      start_edge = e;
      start_vertex = x;
      best_pos = p;
    }
  }
  if (cut_total == 0) throw std::domain_error("restrict: selection has no cut edges");

  // Walk around the selection clockwise, collecting cut edges in order.
  std::vector<std::pair<int, int>> cut_order;  // (inside vertex, edge)
  std::vector<bool> used(g.edge_count(), false);
  int x = start_vertex, e = start_edge;
  const int limit = 4 * g.edge_count() + 4;
  for (int step = 0;; ++step) {
    if (step > limit) throw std::domain_error("restrict: boundary walk did not close");
    if (used[e]) throw std::domain_error("restrict: cut edges are not separable by a single curve");
    used[e] = true;
    cut_order.emplace_back(x, e);
    int k = g.rotation_index(x, e);
    for (;;) {
      k = (k + 1) % g.simple_degree(x);
      const int f = g.rotation[x][k];
      if (is_cut(f)) {
        e = f;
        break;
      }
      const int y = g.other(f, x);
      k = g.rotation_index(y, f);
      x = y;
    }
    if (x == start_vertex && e == start_edge) break;
  }
  if (static_cast<int>(cut_order.size()) != cut_total) {
    throw std::domain_error("restrict: cut edges are not separable by a single curve");
  }

  HourglassGraph h;
  h.r = g.r;
  for (int v : inside) new_id[v] = h.add_vertex(g.vertices[v].color, VertexKind::Internal);
  std::vector<int> edge_map(g.edge_count(), -1);
  for (int e2 = 0; e2 < g.edge_count(); ++e2) {
    if (in_s(g.edges[e2].u) && in_s(g.edges[e2].v)) {
      edge_map[e2] = h.add_edge(new_id[g.edges[e2].u], new_id[g.edges[e2].v], g.edges[e2].mult);
    }
  }
  std::map<int, std::vector<int>> leaves;  // cut edge -> new simple edges in order
  for (auto [xv, ce] : cut_order) {
    const Color c = g.vertices[g.other(ce, xv)].color;
    for (int k = 0; k < g.edges[ce].mult; ++k) {
      const int b = h.add_vertex(c, VertexKind::Boundary);
      const int ne = h.add_edge(new_id[xv], b, 1);
      h.rotation[b] = {ne};
      h.boundary.push_back(b);
      leaves[ce].push_back(ne);
    }
  }
  for (int v : inside) {
    auto& rot = h.rotation[new_id[v]];
    for (int e2 : g.rotation[v]) {
      if (edge_map[e2] >= 0) {
        rot.push_back(edge_map[e2]);
      } else {
        const auto& ls = leaves.at(e2);
        rot.insert(rot.end(), ls.begin(), ls.end());
      }
    }
  }
  return h;
}

HourglassGraph restrict_to_face(const HourglassGraph& g, const Face& f) {
  std::vector<int> corners;
  for (int v : f.vertices) {
    if (std::find(corners.begin(), corners.end(), v) == corners.end()) corners.push_back(v);
  }
  return restrict_graph(g, corners);
}

HourglassGraph standalone_square(int r, const std::vector<int>& mults, Color first_color) {
  if (mults.size() != 4) throw std::invalid_argument("standalone_square: need four multiplicities");
  HourglassGraph g;
  g.r = r;
  std::vector<int> corner(4);
  for (int k = 0; k < 4; ++k) {
    corner[k] = g.add_vertex(k % 2 == 0 ? first_color : opposite(first_color), VertexKind::Internal);
  }
  std::vector<int> side(4);
  for (int k = 0; k < 4; ++k) {
    if (mults[k] < 1) throw std::invalid_argument("standalone_square: multiplicities must be positive");
    side[k] = g.add_edge(corner[k], corner[(k + 1) % 4], mults[k]);
  }
  for (int k = 0; k < 4; ++k) {
    const int prev = (k + 3) % 4;
    const int out = r - mults[k] - mults[prev];
    if (out < 0) throw std::invalid_argument("standalone_square: corner degree exceeds r");
    auto& rot = g.rotation[corner[k]];
    rot = {side[k], side[prev]};
    for (int t = 0; t < out; ++t) {
      const int b = g.add_vertex(opposite(g.vertices[corner[k]].color), VertexKind::Boundary);
      const int e = g.add_edge(corner[k], b, 1);
      g.rotation[b] = {e};
      g.rotation[corner[k]].push_back(e);
      g.boundary.push_back(b);
    }
  }
  return g;
}

HourglassGraph star_graph(int r) {
  if (r < 1) throw std::invalid_argument("star_graph: r must be positive");
  HourglassGraph g;
  g.r = r;
  for (int j = 0; j < r; ++j) g.boundary.push_back(g.add_vertex(Color::Black, VertexKind::Boundary));
  const int c = g.add_vertex(Color::White, VertexKind::Internal);
  for (int j = 0; j < r; ++j) {
    const int e = g.add_edge(j, c, 1);
    g.rotation[j] = {e};
    g.rotation[c].push_back(e);
  }
  return g;
}

HourglassGraph rotate(const HourglassGraph& g) {
  HourglassGraph h = g;
  if (!h.boundary.empty()) std::rotate(h.boundary.begin(), h.boundary.begin() + 1, h.boundary.end());
  return h;
}

HourglassGraph reflect(const HourglassGraph& g) {
  HourglassGraph h = g;
  std::reverse(h.boundary.begin(), h.boundary.end());
  for (auto& rot : h.rotation) std::reverse(rot.begin(), rot.end());
  return h;
}

HourglassGraph underlying_simple(const HourglassGraph& g) {
  HourglassGraph h = g;
  for (auto& e : h.edges) e.mult = 1;
  return h;
}

}  // namespace hourglass
