#include "hourglass/matching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace hourglass {

NoncrossingMatching::NoncrossingMatching(std::vector<int> partner) : partner_(std::move(partner)) {
  const int n = size();
  if (n % 2 != 0) throw std::invalid_argument("NoncrossingMatching: odd number of points");
  for (int i = 1; i <= n; ++i) {
    const int j = (*this)(i);
    if (j < 1 || j > n || j == i || (*this)(j) != i) {
      throw std::invalid_argument("NoncrossingMatching: not a fixed-point-free involution");
    }
  }
  for (int i = 1; i <= n; ++i) {
    const int j = (*this)(i);
    if (j < i) continue;
    for (int k = i + 1; k < j; ++k) {
      const int l = (*this)(k);
      if (l < i || l > j) throw std::invalid_argument("NoncrossingMatching: arcs cross");
    }
  }
}

NoncrossingMatching NoncrossingMatching::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> partner(n, 0);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("NoncrossingMatching: point out of range");
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  return NoncrossingMatching(std::move(partner));
}

std::vector<std::pair<int, int>> NoncrossingMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= size(); ++i) {
    if (is_opener(i)) out.emplace_back(i, (*this)(i));
  }
  return out;
}

NoncrossingMatching matching_from_tableau(const RectTableau& t) {
  if (t.cols() != 2) throw std::domain_error("matching_from_tableau: tableau must have shape r x 2");
  const int n = t.size();
  std::vector<bool> opener(n + 1, false);
  for (int x : t.column(1)) opener[x] = true;
  std::vector<int> partner(n), stack;
  for (int x = 1; x <= n; ++x) {
    if (opener[x]) {
      stack.push_back(x);
    } else {
      const int o = stack.back();
      stack.pop_back();
      partner[x - 1] = o;
      partner[o - 1] = x;
    }
  }
  return NoncrossingMatching(std::move(partner));
}

RectTableau tableau_from_matching(const NoncrossingMatching& m) {
  std::vector<int> openers, closers;
  for (int i = 1; i <= m.size(); ++i) (m.is_opener(i) ? openers : closers).push_back(i);
  return RectTableau::from_columns({openers, closers});
}

std::vector<NoncrossingMatching> all_noncrossing_matchings(int r) {
  std::vector<NoncrossingMatching> out;
  for (const auto& t : all_standard_tableaux(r, 2)) out.push_back(matching_from_tableau(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ClawSet::members(int n) const {
  std::vector<int> out(size);
  for (int k = 0; k < size; ++k) out[k] = (start - 1 + k) % n + 1;
  return out;
}

bool ClawSet::contains(int n, int point) const {
  const int offset = ((point - start) % n + n) % n;
  return offset < size;
}

std::vector<ClawSet> claw_sets(const NoncrossingMatching& m) {
  const int n = m.size();
  std::vector<int> left;
  for (int i = 1; i <= n; ++i) {
    if (m(i) == i % n + 1) left.push_back(i);
  }
  const int s = static_cast<int>(left.size());
  std::vector<ClawSet> out;
  for (int j = 0; j < s; ++j) {
    const int lo = left[j];
    const int hi = left[(j + 1) % s];
    const int len = ((hi - lo) % n + n) % n;
    out.push_back({lo % n + 1, len == 0 ? n : len});
  }
  return out;
}

int WeightedPolygonGraph::total_weight() const {
  int w = 0;
  for (int x : boundary_weights) w += x;
  for (const auto& d : diagonals) w += d.weight;
  return w;
}

int WeightedPolygonGraph::vertex_weight(int v) const {
  int w = boundary_weights[v - 1] + boundary_weights[(v - 2 + s) % s];
  for (const auto& d : diagonals) {
    if (d.a == v || d.b == v) w += d.weight;
  }
  return w;
}

int WeightedPolygonGraph::edge_weight(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (s == 2) return a == 1 && b == 2 ? boundary_weights[0] + boundary_weights[1] : -1;
  if (b == a + 1) return boundary_weights[a - 1];
  if (a == 1 && b == s) return boundary_weights[s - 1];
  for (const auto& d : diagonals) {
    if (d.a == a && d.b == b) return d.weight;
  }
  return -1;
}

bool WeightedPolygonGraph::has_edge(int a, int b) const { return edge_weight(a, b) >= 0; }

bool WeightedPolygonGraph::is_triangulation() const {
  if (s <= 3) return diagonals.empty();
  return static_cast<int>(diagonals.size()) == s - 3;
}

std::vector<std::vector<int>> WeightedPolygonGraph::regions() const {
  std::vector<std::vector<int>> out(1);
  for (int v = 1; v <= s; ++v) out[0].push_back(v);
  for (const auto& d : diagonals) {
    auto it = std::find_if(out.begin(), out.end(), [&](const std::vector<int>& reg) {
      return std::count(reg.begin(), reg.end(), d.a) && std::count(reg.begin(), reg.end(), d.b);
    });
    if (it == out.end()) throw std::logic_error("WeightedPolygonGraph: crossing diagonals");
    std::vector<int> inner, outer;
    for (int x : *it) {
      if (x >= d.a && x <= d.b) inner.push_back(x);
      if (x <= d.a || x >= d.b) outer.push_back(x);
    }
    *it = std::move(inner);
    out.push_back(std::move(outer));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> WeightedPolygonGraph::triangles() const {
  if (s < 3) return {};
  auto regs = regions();
  for (const auto& reg : regs) {
    if (reg.size() != 3) throw std::domain_error("triangles: polygon graph is not a triangulation");
  }
  return regs;
}

namespace {

void normalize(WeightedPolygonGraph& g) {
  for (auto& d : g.diagonals) {
    if (d.a > d.b) std::swap(d.a, d.b);
  }
  std::sort(g.diagonals.begin(), g.diagonals.end());
}

std::vector<std::vector<Diagonal>> region_triangulations(const std::vector<int>& v) {
  const int k = static_cast<int>(v.size());
  if (k <= 3) return {{}};
  std::vector<std::vector<Diagonal>> out;
  for (int m = 1; m <= k - 2; ++m) {
    std::vector<int> left(v.begin(), v.begin() + m + 1);
    std::vector<int> right(v.begin() + m, v.end());
    const auto lt = region_triangulations(left);
    const auto rt = region_triangulations(right);
    for (const auto& a : lt) {
      for (const auto& b : rt) {
        std::vector<Diagonal> ds = a;
        ds.insert(ds.end(), b.begin(), b.end());
        if (m > 1) ds.push_back({v[0], v[m], 0});
        if (m < k - 2) ds.push_back({v[m], v[k - 1], 0});
        out.push_back(std::move(ds));
      }
    }
  }
  return out;
}

}  // namespace

WeightedPolygonGraph dissection(const NoncrossingMatching& m) {
  const int n = m.size();
  const auto claws = claw_sets(m);
  const int s = static_cast<int>(claws.size());
  std::vector<int> claw_of(n + 1, 0);
  for (int j = 0; j < s; ++j) {
    for (int x : claws[j].members(n)) claw_of[x] = j + 1;
  }

  WeightedPolygonGraph g;
  g.s = s;
  g.boundary_weights.assign(s, 0);
  for (const auto& c : claws) {
    g.claw_sizes.push_back(c.size);
    g.claw_offsets.push_back(c.start);
  }
  std::vector<std::vector<int>> weight(s + 1, std::vector<int>(s + 1, 0));
  for (auto [x, y] : m.pairs()) {
    int a = claw_of[x], b = claw_of[y];
    if (a == b) throw std::logic_error("dissection: arc inside a claw set");
    if (a > b) std::swap(a, b);
    ++weight[a][b];
  }
  if (s == 2) {
    g.boundary_weights[0] = weight[1][2];
    return g;
  }
  for (int a = 1; a <= s; ++a) {
    for (int b = a + 1; b <= s; ++b) {
      if (weight[a][b] == 0) continue;
      if (b == a + 1) {
        g.boundary_weights[a - 1] = weight[a][b];
      } else if (a == 1 && b == s) {
        g.boundary_weights[s - 1] = weight[a][b];
      } else {
        g.diagonals.push_back({a, b, weight[a][b]});
      }
    }
  }
  normalize(g);
  return g;
}

WeightedPolygonGraph triangulate_fan(const WeightedPolygonGraph& d) {
  WeightedPolygonGraph t = d;
  for (const auto& reg : d.regions()) {
    for (std::size_t k = 2; k + 1 < reg.size(); ++k) t.diagonals.push_back({reg[0], reg[k], 0});
  }
  normalize(t);
  return t;
}

std::vector<WeightedPolygonGraph> triangulate_all(const WeightedPolygonGraph& d) {
  std::vector<WeightedPolygonGraph> out{d};
  for (const auto& reg : d.regions()) {
    const auto options = region_triangulations(reg);
    std::vector<WeightedPolygonGraph> next;
    for (const auto& partial : out) {
      for (const auto& ds : options) {
        WeightedPolygonGraph t = partial;
        t.diagonals.insert(t.diagonals.end(), ds.begin(), ds.end());
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  for (auto& t : out) normalize(t);
  std::sort(out.begin(), out.end(),
            [](const WeightedPolygonGraph& x, const WeightedPolygonGraph& y) { return x.diagonals < y.diagonals; });
  return out;
}

WeightedPolygonGraph strip_zero_diagonals(const WeightedPolygonGraph& t) {
  WeightedPolygonGraph d = t;
  std::erase_if(d.diagonals, [](const Diagonal& x) { return x.weight == 0; });
  return d;
}

WeightedPolygonGraph flip_zero_diagonal(const WeightedPolygonGraph& t, int a, int b) {
  if (a > b) std::swap(a, b);
  auto it = std::find_if(t.diagonals.begin(), t.diagonals.end(),
                         [&](const Diagonal& d) { return d.a == a && d.b == b; });
  if (it == t.diagonals.end()) throw std::domain_error("flip_zero_diagonal: diagonal not present");
  if (it->weight != 0) throw std::domain_error("flip_zero_diagonal: diagonal has positive weight");
  if (!t.is_triangulation()) throw std::domain_error("flip_zero_diagonal: not a triangulation");
  std::vector<int> apex;
  for (const auto& tri : t.triangles()) {
    if (std::count(tri.begin(), tri.end(), a) && std::count(tri.begin(), tri.end(), b)) {
      for (int x : tri) {
        if (x != a && x != b) apex.push_back(x);
      }
    }
  }
  if (apex.size() != 2) throw std::logic_error("flip_zero_diagonal: diagonal not shared by two triangles");
  WeightedPolygonGraph out = t;
  out.diagonals.erase(out.diagonals.begin() + (it - t.diagonals.begin()));
  out.diagonals.push_back({apex[0], apex[1], 0});
  normalize(out);
  return out;
}

WeightedPolygonGraph plain_polygon(int s) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= s; ++i) pairs.emplace_back(2 * i - 1, 2 * i);
  return dissection(NoncrossingMatching::from_pairs(2 * s, pairs));
}

}  // namespace hourglass
