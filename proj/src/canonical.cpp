#include <algorithm>
#include <string>

#include "hourglass/graph.hpp"

namespace hourglass {

namespace {

struct Labeling {
  std::vector<int> order;  // old vertex ids in label order
  std::vector<int> label;  // old id -> label, -1 if unlabeled
  std::vector<int> entry;  // old id -> first rotation edge
};

// Breadth-first labeling; each vertex lists its neighbours starting from
// the edge through which it was discovered.
void bfs_label(const HourglassGraph& g, Labeling& lab, std::size_t from) {
  for (std::size_t q = from; q < lab.order.size(); ++q) {
    const int x = lab.order[q];
    const auto& rot = g.rotation[x];
    const int start = std::max(0, g.rotation_index(x, lab.entry[x]));
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const int e = rot[(start + k) % rot.size()];
      const int y = g.other(e, x);
      if (lab.label[y] != -1) continue;
      lab.label[y] = static_cast<int>(lab.order.size());
      lab.entry[y] = e;
      lab.order.push_back(y);
    }
  }
}

std::string vertex_code(const HourglassGraph& g, const Labeling& lab, int x) {
  std::string s;
  s += g.vertices[x].color == Color::White ? 'w' : 'b';
  s += g.is_boundary(x) ? 'B' : 'I';
  const auto& rot = g.rotation[x];
  const int start = std::max(0, g.rotation_index(x, lab.entry[x]));
  for (std::size_t k = 0; k < rot.size(); ++k) {
    const int e = rot[(start + k) % rot.size()];
    s += std::to_string(lab.label[g.other(e, x)]);
    s += '/';
    s += std::to_string(g.edges[e].mult);
    s += ',';
  }
  s += ';';
  return s;
}

Labeling canonical_labeling(const HourglassGraph& g) {
  Labeling lab;
  lab.label.assign(g.vertex_count(), -1);
  lab.entry.assign(g.vertex_count(), -1);
  for (int b : g.boundary) {
    lab.label[b] = static_cast<int>(lab.order.size());
    lab.order.push_back(b);
  }
  bfs_label(g, lab, 0);

  // Isolated components: choose the root and starting edge with least code.
  struct Candidate {
    std::string code;
    std::vector<int> order;
    std::vector<int> entry;
  };
  std::vector<Candidate> comps;
  std::vector<bool> done(g.vertex_count(), false);
  for (int v : lab.order) done[v] = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (done[v]) continue;
    Candidate best;
    bool have = false;
    Labeling probe;
    probe.label.assign(g.vertex_count(), -1);
    probe.entry.assign(g.vertex_count(), -1);
    probe.order = {v};
    probe.label[v] = 0;
    bfs_label(g, probe, 0);
    const std::vector<int> members = probe.order;
    // Every vertex of the component and every starting edge is a candidate root.
    for (int root : members) {
      const int deg = std::max<int>(1, g.simple_degree(root));
      for (int s = 0; s < deg; ++s) {
        Labeling t;
        t.label.assign(g.vertex_count(), -1);
        t.entry.assign(g.vertex_count(), -1);
        t.order = {root};
        t.label[root] = 0;
        t.entry[root] = g.simple_degree(root) ? g.rotation[root][s] : -1;
        bfs_label(g, t, 0);
        std::string code;
        for (int x : t.order) code += vertex_code(g, t, x);
        if (!have || code < best.code) {
          best = {code, t.order, std::vector<int>()};
          best.entry.reserve(t.order.size());
          for (int x : t.order) best.entry.push_back(t.entry[x]);
          have = true;
        }
      }
    }
    for (int x : members) done[x] = true;
    comps.push_back(std::move(best));
  }
  std::sort(comps.begin(), comps.end(), [](const Candidate& a, const Candidate& b) { return a.code < b.code; });
  for (const auto& c : comps) {
    for (std::size_t k = 0; k < c.order.size(); ++k) {
      lab.label[c.order[k]] = static_cast<int>(lab.order.size());
      lab.entry[c.order[k]] = c.entry[k];
      lab.order.push_back(c.order[k]);
    }
  }
  return lab;
}

}  // namespace

HourglassGraph canonicalize(const HourglassGraph& g) {
  const Labeling lab = canonical_labeling(g);
  HourglassGraph h;
  h.r = g.r;
  for (int x : lab.order) h.add_vertex(g.vertices[x].color, g.vertices[x].kind);
  std::vector<int> emap(g.edge_count(), -1);
  for (int x : lab.order) {
    const auto& rot = g.rotation[x];
    const int start = std::max(0, g.rotation_index(x, lab.entry[x]));
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const int e = rot[(start + k) % rot.size()];
      if (emap[e] == -1) {
        emap[e] = h.add_edge(lab.label[g.edges[e].u], lab.label[g.edges[e].v], g.edges[e].mult);
        auto& ne = h.edges[emap[e]];
        if (ne.u > ne.v) std::swap(ne.u, ne.v);
      }
      h.rotation[lab.label[x]].push_back(emap[e]);
    }
  }
  for (int b : g.boundary) h.boundary.push_back(lab.label[b]);
  return h;
}

std::string canonical_form(const HourglassGraph& g) {
  const Labeling lab = canonical_labeling(g);
  std::string s = "r" + std::to_string(g.r) + "n" + std::to_string(g.boundary_size()) + ":";
  for (int x : lab.order) s += vertex_code(g, lab, x);
  return s;
}

bool isomorphic(const HourglassGraph& g, const HourglassGraph& h) { return canonical_form(g) == canonical_form(h); }

}  // namespace hourglass
