#pragma once

#include "hourglass/graph.hpp"
#include "hourglass/matching.hpp"
#include "hourglass/tableau.hpp"

namespace hourglass {

/// Web of a weighted triangulation. Boundary vertex j is matching point j;
/// white vertex w_j is joined to claw C_j by simple edges; each triangle
/// gets a black vertex whose edge to w(x) carries the total weight on the
/// far side of the opposite edge, that edge included. Weight-0 edges are
/// omitted. Throws std::domain_error unless t is a triangulation.
HourglassGraph web_from_triangulation(const WeightedPolygonGraph& t);

enum class TriangulationStrategy { Fan };

HourglassGraph fraser_map(const RectTableau& t, TriangulationStrategy strategy = TriangulationStrategy::Fan);
/// Uses the given completion of the dissection of the tableau's matching.
/// Throws std::domain_error if tri does not complete that dissection.
HourglassGraph fraser_map(const RectTableau& t, const WeightedPolygonGraph& tri);

/// Polygon data read off a contracted fully reduced graph of Plucker
/// degree two: polygon vertices are the white vertices ordered by claw,
/// sides carry the multiplicity of the opposite hourglass and each square
/// face gives a diagonal of weight r - m(F).
struct RecoveredTriangulation {
  WeightedPolygonGraph triangulation;
  NoncrossingMatching matching;
  std::vector<int> white_of_vertex;  // polygon vertex (1-based) -> white vertex id
};

/// Throws std::domain_error with a diagnosis when the hypotheses fail.
RecoveredTriangulation recover_triangulation(const HourglassGraph& g);

/// Inverse of the Fraser map on move classes. Degree one must be the star
/// and gives the column tableau. The result is checked by rebuilding the
/// graph from the recovered triangulation.
/// Throws std::domain_error when g is not contracted, not fully reduced,
/// not of standard type, or of Plucker degree other than 1 or 2.
RectTableau recover_tableau(const HourglassGraph& g, bool check_fully_reduced = true);

}  // namespace hourglass
