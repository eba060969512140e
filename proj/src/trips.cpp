#include "hourglass/trips.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hourglass {

namespace {

// Strand slots around every vertex, clockwise.
struct StrandIndex {
  const HourglassGraph& g;
  std::vector<int> deg;
  std::vector<std::vector<int>> slot_edge, slot_strand;
  std::vector<int> base_u, base_v;  // first slot of each edge at its u / v end
  std::vector<int> offset;          // first directed-state id of each edge

  explicit StrandIndex(const HourglassGraph& graph) : g(graph) {
    const int V = g.vertex_count(), E = g.edge_count();
    deg.assign(V, 0);
    slot_edge.resize(V);
    slot_strand.resize(V);
    base_u.assign(E, 0);
    base_v.assign(E, 0);
    for (int v = 0; v < V; ++v) {
      for (int e : g.rotation[v]) {
        (g.edges[e].u == v ? base_u : base_v)[e] = deg[v];
        for (int k = 0; k < g.edges[e].mult; ++k) {
          slot_edge[v].push_back(e);
          slot_strand[v].push_back(k);
        }
        deg[v] += g.edges[e].mult;
      }
    }
    offset.assign(E + 1, 0);
    for (int e = 0; e < E; ++e) offset[e + 1] = offset[e] + g.edges[e].mult;
  }

  int state_count() const { return 2 * offset.back(); }
  // Directed strand: strand k of e traversed away from `from`.
  int state(int e, int k, int from) const { return 2 * (offset[e] + k) + (g.edges[e].u == from ? 0 : 1); }
  int slot_at(int v, int e, int k) const { return (g.edges[e].u == v ? base_u[e] : base_v[e]) + k; }

  // Arrive at `at` along strand k of e and choose the exit slot.
  int turn(int at, int e, int k, int i) const {
    const int d = deg[at];
    const int p = slot_at(at, e, k);
    const int shift = g.vertices[at].color == Color::White ? i : -i;
    return (((p + shift) % d) + d) % d;
  }
};

TripSegment walk_from_boundary(const StrandIndex& idx, int i, int j, std::vector<char>* used) {
  const auto& g = idx.g;
  const int n = g.boundary_size();
  if (j < 1 || j > n) throw std::domain_error("trip_segment: boundary index out of range");
  TripSegment seg;
  seg.i = i;
  seg.start = j;
  int x = g.boundary[j - 1];
  if (g.rotation[x].empty()) throw std::domain_error("trip_segment: boundary vertex has no edge");
  int e = g.rotation[x][0], k = 0;
  const auto pos = g.boundary_positions();
  seg.vertices.push_back(x);
  const int limit = idx.state_count() + 1;
  for (int step = 0; step <= limit; ++step) {
    if (used) (*used)[idx.state(e, k, x)] = 1;
    seg.edges.push_back(e);
    seg.strands.push_back(k);
    const int y = g.other(e, x);
    seg.vertices.push_back(y);
    if (g.is_boundary(y)) {
      seg.end = pos[y] + 1;
      return seg;
    }
    const int q = idx.turn(y, e, k, i);
    e = idx.slot_edge[y][q];
    k = idx.slot_strand[y][q];
    x = y;
  }
  throw std::logic_error("trip_segment: walk from the boundary did not terminate");
}

}  // namespace

bool TripSegment::has_repeated_vertex() const {
  std::vector<int> v = vertices;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

std::string TripSegment::to_string() const {
  std::ostringstream os;
  os << "trip_" << i << ' ';
  if (closed) {
    os << "closed";
  } else {
    os << start << "->" << end;
  }
  os << " via";
  for (int v : vertices) os << ' ' << v;
  return os.str();
}

TripSegment trip_segment(const HourglassGraph& g, int i, int j) {
  StrandIndex idx(g);
  return walk_from_boundary(idx, i, j, nullptr);
}

std::vector<TripSegment> all_trip_segments(const HourglassGraph& g, int i) {
  StrandIndex idx(g);
  std::vector<char> used(idx.state_count(), 0);
  std::vector<TripSegment> out;
  for (int j = 1; j <= g.boundary_size(); ++j) out.push_back(walk_from_boundary(idx, i, j, &used));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[e];
    if (g.is_boundary(ed.u) || g.is_boundary(ed.v)) continue;
    for (int k = 0; k < ed.mult; ++k) {
      for (int from : {ed.u, ed.v}) {
        if (used[idx.state(e, k, from)]) continue;
        TripSegment seg;
        seg.i = i;
        seg.closed = true;
        int x = from, ce = e, ck = k;
        while (!used[idx.state(ce, ck, x)]) {
          used[idx.state(ce, ck, x)] = 1;
          seg.vertices.push_back(x);
          seg.edges.push_back(ce);
          seg.strands.push_back(ck);
          const int y = g.other(ce, x);
          const int q = idx.turn(y, ce, ck, i);
          ce = idx.slot_edge[y][q];
          ck = idx.slot_strand[y][q];
          x = y;
        }
        seg.trivial = std::all_of(seg.edges.begin(), seg.edges.end(), [&](int f) { return f == seg.edges[0]; });
        out.push_back(std::move(seg));
      }
    }
  }
  return out;
}

Permutation trip_perm(const HourglassGraph& g, int i) {
  if (i < 1 || i > g.r - 1) {
    throw std::domain_error("trip_perm: index " + std::to_string(i) + " outside 1.." + std::to_string(g.r - 1));
  }
  StrandIndex idx(g);
  std::vector<int> images(g.boundary_size());
  for (int j = 1; j <= g.boundary_size(); ++j) images[j - 1] = walk_from_boundary(idx, i, j, nullptr).end;
  return Permutation(std::move(images));
}

PermutationTuple trip_all(const HourglassGraph& g) {
  PermutationTuple out;
  for (int i = 1; i < g.r; ++i) out.push_back(trip_perm(g, i));
  return out;
}

std::vector<SelfIntersection> self_intersections(const HourglassGraph& g) {
  std::vector<SelfIntersection> out;
  for (int i = 1; i < g.r; ++i) {
    for (auto& seg : all_trip_segments(g, i)) {
      if (seg.trivial) continue;
      if (seg.closed || seg.has_repeated_vertex()) out.push_back({i, std::move(seg)});
    }
  }
  return out;
}

namespace {

// Cyclic order of the edges leaving the contracted path, found by walking
// around it clockwise.
std::vector<int> blob_rotation(const HourglassGraph& g, const std::vector<int>& path_vertices,
                               const std::vector<int>& path_edges) {
  auto on_path = [&](int e) { return std::find(path_edges.begin(), path_edges.end(), e) != path_edges.end(); };
  std::vector<int> out;
  const int x0 = path_vertices.front();
  int x = x0, k = 0;
  const int limit = 4 * g.edge_count() + 4;
  for (int step = 0; step < limit; ++step) {
    const auto& rot = g.rotation[x];
    const int e = rot[k];
    if (on_path(e)) {
      const int y = g.other(e, x);
      k = (g.rotation_index(y, e) + 1) % g.simple_degree(y);
      x = y;
    } else {
      out.push_back(e);
      k = (k + 1) % static_cast<int>(rot.size());
    }
    if (x == x0 && k == 0) return out;
  }
  throw std::logic_error("blob_rotation: tour did not close");
}

bool separates(const std::vector<int>& cyc, int a, int b, int c, int d) {
  auto at = [&](int e) {
    auto it = std::find(cyc.begin(), cyc.end(), e);
    return it == cyc.end() ? -1 : static_cast<int>(it - cyc.begin());
  };
  const int pa = at(a), pb = at(b), pc = at(c), pd = at(d);
  if (pa < 0 || pb < 0 || pc < 0 || pd < 0) return false;
  const int lo = std::min(pa, pb), hi = std::max(pa, pb);
  const bool c_in = pc > lo && pc < hi;
  const bool d_in = pd > lo && pd < hi;
  return c_in != d_in;
}

}  // namespace

IntersectionReport intersections(const HourglassGraph& g, const TripSegment& s1, const TripSegment& s2) {
  if (s1.closed || s2.closed || s1.has_repeated_vertex() || s2.has_repeated_vertex()) {
    throw std::domain_error("intersections: segments must reach the boundary without self-intersections");
  }
  IntersectionReport rep;
  rep.shares_both_endpoints = (s1.start == s2.start && s1.end == s2.end) || (s1.start == s2.end && s1.end == s2.start);
  std::vector<int> pos2(g.vertex_count(), -1);
  for (std::size_t t = 0; t < s2.vertices.size(); ++t) pos2[s2.vertices[t]] = static_cast<int>(t);

  const int len1 = static_cast<int>(s1.vertices.size());
  int t = 0;
  while (t < len1) {
    const int v = s1.vertices[t];
    if (pos2[v] < 0) {
      ++t;
      continue;
    }
    const int t_start = t;
    int cur2 = pos2[v], dir = 0;
    std::vector<int> path_edges;
    while (t + 1 < len1) {
      const int u = s1.vertices[t + 1];
      if (pos2[u] < 0) break;
      const int step = pos2[u] - cur2;
      if ((step != 1 && step != -1) || (dir != 0 && step != dir)) break;
      if (s2.edges[std::min(cur2, pos2[u])] != s1.edges[t]) break;
      dir = step;
      path_edges.push_back(s1.edges[t]);
      cur2 = pos2[u];
      ++t;
    }
    const int t_end = t;
    const int lo = std::min(pos2[v], cur2), hi = std::max(pos2[v], cur2);

    Intersection ix;
    ix.vertices.assign(s1.vertices.begin() + t_start, s1.vertices.begin() + t_end + 1);
    ix.first_index = t_start;
    ix.second_index = lo;
    const bool touches_boundary =
        std::any_of(ix.vertices.begin(), ix.vertices.end(), [&](int x) { return g.is_boundary(x); });
    if (touches_boundary) {
      ix.essential = true;
    } else {
      const auto cyc = blob_rotation(g, ix.vertices, path_edges);
      ix.essential = separates(cyc, s1.edges[t_start - 1], s1.edges[t_end], s2.edges[lo - 1], s2.edges[hi]);
    }
    rep.intersections.push_back(std::move(ix));
    ++t;
  }
  return rep;
}

bool has_oriented_double_crossing(const IntersectionReport& rep) {
  std::vector<const Intersection*> ess;
  for (const auto& ix : rep.intersections) {
    if (ix.essential) ess.push_back(&ix);
  }
  for (std::size_t a = 0; a < ess.size(); ++a) {
    for (std::size_t b = a + 1; b < ess.size(); ++b) {
      if (ess[a]->second_index < ess[b]->second_index) return true;
    }
  }
  return false;
}

namespace {

bool is_reversal(const TripSegment& a, const TripSegment& b) {
  return a.vertices.size() == b.vertices.size() && std::equal(a.vertices.begin(), a.vertices.end(), b.vertices.rbegin());
}

std::optional<DoubleCrossingWitness> check_pair(const HourglassGraph& g, const TripSegment& a, const TripSegment& b) {
  if (is_reversal(a, b)) return std::nullopt;
  const auto rep = intersections(g, a, b);
  if (has_oriented_double_crossing(rep)) return DoubleCrossingWitness{a, b, "oriented double crossing"};
  return std::nullopt;
}

std::vector<TripSegment> boundary_segments(const HourglassGraph& g, int i) {
  StrandIndex idx(g);
  std::vector<TripSegment> out;
  for (int j = 1; j <= g.boundary_size(); ++j) out.push_back(walk_from_boundary(idx, i, j, nullptr));
  return out;
}

}  // namespace

std::optional<DoubleCrossingWitness> find_bad_double_crossing(const HourglassGraph& g) {
  std::vector<std::vector<TripSegment>> segs(g.r);
  for (int i = 1; i < g.r; ++i) {
    segs[i] = boundary_segments(g, i);
    for (const auto& s : segs[i]) {
      if (s.has_repeated_vertex()) throw std::domain_error("find_bad_double_crossing: graph has self-intersections");
    }
  }
  for (int i = 1; i < g.r; ++i) {
    const auto& A = segs[i];
    for (std::size_t a = 0; a < A.size(); ++a) {
      for (std::size_t b = a + 1; b < A.size(); ++b) {
        if (auto w = check_pair(g, A[a], A[b])) return w;
      }
    }
    if (i + 1 < g.r) {
      for (const auto& x : A) {
        for (const auto& y : segs[i + 1]) {
          if (auto w = check_pair(g, x, y)) return w;
        }
      }
    }
  }
  return std::nullopt;
}

bool has_bad_double_crossing(const HourglassGraph& g) { return find_bad_double_crossing(g).has_value(); }

FullyReducedReport fully_reduced_report(const HourglassGraph& g) {
  FullyReducedReport rep;
  for (const auto& comp : g.components()) {
    if (std::none_of(comp.begin(), comp.end(), [&](int v) { return g.is_boundary(v); })) {
      rep.isolated_component = true;
      rep.diagnosis = "isolated component containing vertex " + std::to_string(comp.front());
      return rep;
    }
  }
  rep.self_intersections = self_intersections(g);
  if (!rep.self_intersections.empty()) {
    rep.diagnosis = "self-intersecting segment " + rep.self_intersections.front().segment.to_string();
    return rep;
  }
  rep.double_crossing = find_bad_double_crossing(g);
  if (rep.double_crossing) {
    rep.diagnosis = rep.double_crossing->reason + " between " + rep.double_crossing->first.to_string() + " and " +
                    rep.double_crossing->second.to_string();
    return rep;
  }
  rep.fully_reduced = true;
  return rep;
}

bool fully_reduced(const HourglassGraph& g) { return fully_reduced_report(g).fully_reduced; }

bool square_fully_reduced(const HourglassGraph& g, const Face& f) {
  if (f.length() != 4) throw std::domain_error("square_fully_reduced: face is not a square");
  return fully_reduced(restrict_to_face(g, f));
}

bool plabic_reduced(const HourglassGraph& g) {
  const HourglassGraph h = underlying_simple(g);
  const auto segs = all_trip_segments(h, 1);
  std::vector<TripSegment> open;
  for (const auto& s : segs) {
    if (s.closed) return false;
    if (s.start == s.end) {
      if (s.vertices.size() != 3 || h.simple_degree(s.vertices[1]) != 1) return false;
      continue;
    }
    if (s.has_repeated_vertex()) return false;
    open.push_back(s);
  }
  for (std::size_t a = 0; a < open.size(); ++a) {
    for (std::size_t b = a + 1; b < open.size(); ++b) {
      if (check_pair(h, open[a], open[b])) return false;
    }
  }
  return true;
}

}  // namespace hourglass
