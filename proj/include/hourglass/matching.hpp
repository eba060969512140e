#pragma once

#include <vector>

#include "hourglass/tableau.hpp"

namespace hourglass {

/// Noncrossing perfect matching on the points 1..2r of a circle.
class NoncrossingMatching {
 public:
  NoncrossingMatching() = default;
  /// partner[i-1] is the point matched with i. Throws std::invalid_argument
  /// unless it is a fixed-point-free noncrossing involution.
  explicit NoncrossingMatching(std::vector<int> partner);
  static NoncrossingMatching from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return static_cast<int>(partner_.size()); }
  int operator()(int i) const { return partner_[i - 1]; }
  bool is_opener(int i) const { return i < (*this)(i); }
  /// Pairs (opener, closer) sorted by opener.
  std::vector<std::pair<int, int>> pairs() const;
  const std::vector<int>& partners() const { return partner_; }

  friend bool operator==(const NoncrossingMatching&, const NoncrossingMatching&) = default;
  friend auto operator<=>(const NoncrossingMatching&, const NoncrossingMatching&) = default;

 private:
  std::vector<int> partner_;
};

/// Openers are the first column of the r x 2 tableau.
NoncrossingMatching matching_from_tableau(const RectTableau& t);
/// First column = sorted openers, second column = sorted closers.
RectTableau tableau_from_matching(const NoncrossingMatching& m);
std::vector<NoncrossingMatching> all_noncrossing_matchings(int r);

/// The cyclic interval {start, start+1, ..., start+size-1} (mod n).
struct ClawSet {
  int start = 0;
  int size = 0;
  std::vector<int> members(int n) const;
  bool contains(int n, int point) const;
};

/// Claw sets C_j = (i_j, i_{j+1}] where i_1 < ... < i_s are the left
/// endpoints of the short arcs {i, i+1 mod n}.
std::vector<ClawSet> claw_sets(const NoncrossingMatching& m);

struct Diagonal {
  int a = 0;  // a < b, both polygon vertices
  int b = 0;
  int weight = 0;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Weighted dissection or triangulation of an s-gon with vertices 1..s.
/// Side j joins vertices j and j+1 (mod s). The degenerate 2-gon has two
/// parallel sides; the whole weight sits on side 1.
struct WeightedPolygonGraph {
  int s = 0;
  std::vector<int> boundary_weights;
  std::vector<Diagonal> diagonals;  // sorted
  std::vector<int> claw_sizes;
  std::vector<int> claw_offsets;  // first point of each claw set on the 2r circle

  int total_weight() const;
  /// Sum of weights of sides and diagonals incident to vertex v.
  int vertex_weight(int v) const;
  /// Weight of side or diagonal {a, b}; -1 when absent.
  int edge_weight(int a, int b) const;
  bool has_edge(int a, int b) const;
  bool is_triangulation() const;
  /// Regions cut out by the diagonals, each as increasing vertex list.
  std::vector<std::vector<int>> regions() const;
  /// Regions of a triangulation, each as an increasing triple.
  std::vector<std::vector<int>> triangles() const;

  friend bool operator==(const WeightedPolygonGraph&, const WeightedPolygonGraph&) = default;
};

/// Merge each claw set into one polygon vertex; weights count arcs.
WeightedPolygonGraph dissection(const NoncrossingMatching& m);

/// Fan completion: every region is triangulated by weight-0 diagonals from
/// its least vertex.
WeightedPolygonGraph triangulate_fan(const WeightedPolygonGraph& d);
/// Every completion of d by weight-0 diagonals.
std::vector<WeightedPolygonGraph> triangulate_all(const WeightedPolygonGraph& d);
/// Delete weight-0 diagonals.
WeightedPolygonGraph strip_zero_diagonals(const WeightedPolygonGraph& t);

/// Replace the weight-0 diagonal {a, b} by the other diagonal of its
/// quadrilateral. Throws std::domain_error if absent or weighted.
WeightedPolygonGraph flip_zero_diagonal(const WeightedPolygonGraph& t, int a, int b);

/// Undissected s-gon with unit sides and claws of size two, the dissection
/// of the matching (1 2)(3 4)...(2s-1 2s).
WeightedPolygonGraph plain_polygon(int s);

}  // namespace hourglass
