#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hourglass/graph.hpp"
#include "hourglass/permutation.hpp"

namespace hourglass {

/// A walk along strands. Strand k of edge e is the k-th strand (0-based)
/// of e in clockwise order at both endpoints.
struct TripSegment {
  int i = 0;
  /// 1-based boundary positions; 0 for segments that never reach the boundary.
  int start = 0;
  int end = 0;
  /// Visited vertices; for closed segments the first vertex is not repeated.
  std::vector<int> vertices;
  /// edges[k] is traversed from vertices[k] to vertices[k+1] (cyclically if closed).
  std::vector<int> edges;
  std::vector<int> strands;
  bool closed = false;
  bool trivial = false;

  bool has_repeated_vertex() const;
  std::string to_string() const;
};

/// Walk from boundary position j (1-based) taking the i-th leftmost turn at
/// white vertices and the i-th rightmost turn at black vertices.
TripSegment trip_segment(const HourglassGraph& g, int i, int j);
/// All trip_i segments: boundary walks in order of their start, then the
/// closed ones. Each directed strand lies on exactly one of them.
std::vector<TripSegment> all_trip_segments(const HourglassGraph& g, int i);

/// Throws std::domain_error when 1 <= i <= r-1 fails. Walks are always
/// finite; the result is a permutation because the strand walk is a bijection.
Permutation trip_perm(const HourglassGraph& g, int i);
PermutationTuple trip_all(const HourglassGraph& g);

struct SelfIntersection {
  int i = 0;
  TripSegment segment;
};
/// Non-trivial segments (all i) that visit some vertex twice, including
/// every non-trivial closed segment.
std::vector<SelfIntersection> self_intersections(const HourglassGraph& g);

struct Intersection {
  /// Vertices of the contracted common subwalk, in the order of the first segment.
  std::vector<int> vertices;
  bool essential = false;
  int first_index = 0;   // position along the first segment
  int second_index = 0;  // position along the second segment
};

struct IntersectionReport {
  std::vector<Intersection> intersections;  // ordered along the first segment
  /// Flagged, not classified separately: the common subwalks are classified as usual.
  bool shares_both_endpoints = false;
};

/// Classifies the common subwalks of two boundary segments in the
/// underlying simple graph. Throws std::domain_error if either segment
/// visits a vertex twice or is closed.
IntersectionReport intersections(const HourglassGraph& g, const TripSegment& s1, const TripSegment& s2);

/// Two essential intersections met in the same order along both segments.
bool has_oriented_double_crossing(const IntersectionReport& rep);

struct DoubleCrossingWitness {
  TripSegment first;
  TripSegment second;
  std::string reason;
};

/// Scans pairs of trip_i segments and of trip_i / trip_{i+1} segments.
std::optional<DoubleCrossingWitness> find_bad_double_crossing(const HourglassGraph& g);
bool has_bad_double_crossing(const HourglassGraph& g);

struct FullyReducedReport {
  bool fully_reduced = false;
  bool isolated_component = false;
  std::vector<SelfIntersection> self_intersections;
  std::optional<DoubleCrossingWitness> double_crossing;
  std::string diagnosis;
};

FullyReducedReport fully_reduced_report(const HourglassGraph& g);
bool fully_reduced(const HourglassGraph& g);

/// Restricts g to the corners of square face f and tests full reducedness.
/// Throws std::domain_error when f is not a square.
bool square_fully_reduced(const HourglassGraph& g, const Face& f);

/// Reducedness criteria for the underlying simple plabic graph with the
/// first trip permutation: no closed trips, no self-intersections, no
/// oriented double crossings, and fixed points only at leaves.
bool plabic_reduced(const HourglassGraph& g);

}  // namespace hourglass
