#include <algorithm>
#include <stdexcept>
#include <string>

#include "hourglass/graph.hpp"

namespace hourglass {

namespace {

// Drops the marked vertices and edges and renumbers the rest in order.
HourglassGraph compact(const HourglassGraph& g, const std::vector<bool>& dead_v, const std::vector<bool>& dead_e) {
  HourglassGraph h;
  h.r = g.r;
  std::vector<int> vmap(g.vertex_count(), -1), emap(g.edge_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!dead_v[v]) vmap[v] = h.add_vertex(g.vertices[v].color, g.vertices[v].kind);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (dead_e[e]) continue;
    const auto& ed = g.edges[e];
    if (vmap[ed.u] < 0 || vmap[ed.v] < 0) throw std::logic_error("compact: live edge at a deleted vertex");
    emap[e] = h.add_edge(vmap[ed.u], vmap[ed.v], ed.mult);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dead_v[v]) continue;
    for (int e : g.rotation[v]) {
      if (emap[e] < 0) throw std::logic_error("compact: rotation lists a deleted edge");
      h.rotation[vmap[v]].push_back(emap[e]);
    }
  }
  for (int b : g.boundary) h.boundary.push_back(vmap[b]);
  return h;
}

void erase_edge(std::vector<int>& rot, int e) { std::erase(rot, e); }

void replace_edge(std::vector<int>& rot, int e, const std::vector<int>& with) {
  auto it = std::find(rot.begin(), rot.end(), e);
  if (it == rot.end()) throw std::logic_error("replace_edge: edge not in rotation");
  it = rot.erase(it);
  rot.insert(it, with.begin(), with.end());
}

}  // namespace

std::vector<ContractionSite> contraction_sites(const HourglassGraph& g) {
  std::vector<ContractionSite> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation[v];
    const int k = static_cast<int>(rot.size());
    if (g.is_internal(v) && k == 2) {
      const int x = g.other(rot[0], v), y = g.other(rot[1], v);
      if (x != y && g.is_internal(x) && g.is_internal(y)) {
        out.push_back({v, std::min(rot[0], rot[1])});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HourglassGraph apply_contraction(const HourglassGraph& g, const ContractionSite& site) {
  const auto sites = contraction_sites(g);
  if (std::find(sites.begin(), sites.end(), site) == sites.end()) {
    throw std::domain_error("apply_contraction: no contraction applies at the given site");
  }
  HourglassGraph h = g;
  std::vector<bool> dead_v(g.vertex_count(), false), dead_e(g.edge_count(), false);
  const int u = site.vertex;
  const int e1 = g.rotation[u][0], e2 = g.rotation[u][1];
  const int x = g.other(e1, u), y = g.other(e2, u);
  // Splice y's rotation (starting after e2) into x's in place of e1.
  const auto& yr = g.rotation[y];
  const int iy = g.rotation_index(y, e2);
  std::vector<int> splice;
  for (std::size_t k = 1; k < yr.size(); ++k) splice.push_back(yr[(iy + k) % yr.size()]);
  replace_edge(h.rotation[x], e1, splice);
  for (int e : splice) {
    if (h.edges[e].u == y) h.edges[e].u = x;
    if (h.edges[e].v == y) h.edges[e].v = x;
  }
  h.rotation[u].clear();
  h.rotation[y].clear();
  dead_v[u] = dead_v[y] = true;
  dead_e[e1] = dead_e[e2] = true;
  return compact(h, dead_v, dead_e);
}

HourglassGraph normalize_contracted(const HourglassGraph& g) {
  HourglassGraph cur = g;
  for (;;) {
    const auto sites = contraction_sites(cur);
    if (sites.empty()) return cur;
    cur = apply_contraction(cur, sites.front());
  }
}

bool is_contracted(const HourglassGraph& g) { return contraction_sites(g).empty(); }

bool square_move_applies(const HourglassGraph& g, const Face& f) {
  if (f.length() != 4 || f.m_value != g.r) return false;
  for (int k = 0; k < 4; ++k) {
    if (!g.is_internal(f.vertices[k])) return false;
    for (int t = k + 1; t < 4; ++t) {
      if (f.vertices[k] == f.vertices[t] || f.edges[k] == f.edges[t]) return false;
    }
  }
  return true;
}

HourglassGraph apply_square_move(const HourglassGraph& g, const Face& f) {
  if (f.length() != 4) throw std::domain_error("square move: face is not a square");
  if (f.m_value != g.r) {
    throw std::domain_error("square move: m(F) = " + std::to_string(f.m_value) + " differs from r = " +
                            std::to_string(g.r));
  }
  if (!square_move_applies(g, f)) throw std::domain_error("square move: face corners are not four internal vertices");

  HourglassGraph h = g;
  std::vector<int> corner(4), leg(4), side(4);
  for (int k = 0; k < 4; ++k) {
    corner[k] = h.add_vertex(opposite(g.vertices[f.vertices[k]].color), VertexKind::Internal);
  }
  for (int k = 0; k < 4; ++k) {
    const int prev = (k + 3) % 4;
    const int v = f.vertices[k];
    leg[k] = h.add_edge(v, corner[k], g.edges[f.edges[k]].mult + g.edges[f.edges[prev]].mult);
    auto& rot = h.rotation[v];
    const int i = g.rotation_index(v, f.edges[k]);
    if (rot[(i + 1) % rot.size()] != f.edges[prev]) throw std::logic_error("square move: face is not traced clockwise");
    rot[i] = leg[k];
    erase_edge(rot, f.edges[prev]);
  }
  for (int k = 0; k < 4; ++k) side[k] = h.add_edge(corner[k], corner[(k + 1) % 4], g.edges[f.edges[(k + 2) % 4]].mult);
  for (int k = 0; k < 4; ++k) h.rotation[corner[k]] = {leg[k], side[k], side[(k + 3) % 4]};

  std::vector<bool> dead_v(h.vertex_count(), false), dead_e(h.edge_count(), false);
  for (int e : f.edges) dead_e[e] = true;
  return normalize_contracted(compact(h, dead_v, dead_e));
}

std::vector<Ear> find_ears(const HourglassGraph& g) {
  std::vector<Ear> out;
  const int n = g.boundary_size();
  const auto pos = g.boundary_positions();
  auto leaf_of = [&](int position, int center) {
    const int b = g.boundary[((position % n) + n) % n];
    return g.simple_degree(b) == 1 && g.edges[g.rotation[b][0]].mult == 1 && g.other(g.rotation[b][0], b) == center;
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_internal(v) || g.vertices[v].color != Color::Black || g.simple_degree(v) != 3) continue;
    for (int t = 0; t < 3; ++t) {
      const int ea = g.rotation[v][t], eb = g.rotation[v][(t + 1) % 3], ec = g.rotation[v][(t + 2) % 3];
      Ear ear;
      ear.v = v;
      ear.a = g.other(ea, v);
      ear.b = g.other(eb, v);
      ear.c = g.other(ec, v);
      if (ear.a == ear.b || ear.b == ear.c || ear.a == ear.c) continue;
      if (!g.is_internal(ear.a) || !g.is_internal(ear.b) || !g.is_internal(ear.c)) continue;
      ear.q = g.edges[ea].mult;
      ear.p = g.edges[ec].mult;

      const auto& br = g.rotation[ear.b];
      const int ib = g.rotation_index(ear.b, eb);
      bool ok = true;
      for (std::size_t k = 1; k < br.size() && ok; ++k) {
        const int e = br[(ib + k) % br.size()];
        const int leaf = g.other(e, ear.b);
        if (!g.is_boundary(leaf) || g.edges[e].mult != 1) {
          ok = false;
          break;
        }
        const int p1 = pos[leaf] + 1;
        if (!ear.claw_b.empty() && p1 != ear.claw_b.back() % n + 1) ok = false;
        ear.claw_b.push_back(p1);
      }
      if (!ok || static_cast<int>(ear.claw_b.size()) != ear.p + ear.q) continue;

      const int first = ear.claw_b.front() - 1, last = ear.claw_b.back() - 1;
      for (int k = 1; k < n && leaf_of(first - k, ear.a); ++k) ear.claw_a.insert(ear.claw_a.begin(), (((first - k) % n) + n) % n + 1);
      for (int k = 1; k < n && leaf_of(last + k, ear.c); ++k) ear.claw_c.push_back((last + k) % n + 1);
      if (static_cast<int>(ear.claw_a.size()) < ear.p || static_cast<int>(ear.claw_c.size()) < ear.q) continue;
      out.push_back(std::move(ear));
    }
  }
  return out;
}

bool is_proper_ear(const Ear& e, int partner_of_one) {
  for (int x : e.claw_b) {
    if (x == 1 || x == partner_of_one) return false;
  }
  return true;
}

HourglassGraph remove_ear(const HourglassGraph& g, const Ear& ear) {
  const auto ears = find_ears(g);
  if (std::find(ears.begin(), ears.end(), ear) == ears.end()) throw std::domain_error("remove_ear: not an ear of the graph");
  HourglassGraph h = g;
  std::vector<bool> dead_v(g.vertex_count(), false), dead_e(g.edge_count(), false);
  int ossicle_a = -1, ossicle_c = -1;
  for (int e : g.rotation[ear.v]) {
    dead_e[e] = true;
    if (g.other(e, ear.v) == ear.a) ossicle_a = e;
    if (g.other(e, ear.v) == ear.c) ossicle_c = e;
  }
  std::vector<int> to_a, to_c;
  for (int k = 0; k < ear.p + ear.q; ++k) {
    const int leaf = g.boundary[ear.claw_b[k] - 1];
    const int e = g.rotation[leaf][0];
    const int target = k < ear.q ? ear.a : ear.c;
    if (h.edges[e].u == ear.b) h.edges[e].u = target;
    if (h.edges[e].v == ear.b) h.edges[e].v = target;
    (k < ear.q ? to_a : to_c).push_back(e);
  }
  replace_edge(h.rotation[ear.a], ossicle_a, to_a);
  replace_edge(h.rotation[ear.c], ossicle_c, to_c);
  h.rotation[ear.v].clear();
  h.rotation[ear.b].clear();
  dead_v[ear.v] = dead_v[ear.b] = true;
  return compact(h, dead_v, dead_e);
}

}  // namespace hourglass
