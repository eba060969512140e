#pragma once

#include <vector>

#include "hourglass/graph.hpp"

namespace hourglass::detail {

// Half-edge view of a rotation system. Dart 2e leaves edges[e].u and dart
// 2e+1 leaves edges[e].v; the twin of d is d ^ 1.
struct DartSystem {
  std::vector<int> origin;
  std::vector<std::vector<int>> rot;  // clockwise darts leaving each vertex
  std::vector<int> index;             // position of a dart in rot[origin]

  void finish();
  // Clockwise face tracing: the predecessor of the arrival dart.
  int next_in_face(int dart) const;
  std::vector<std::vector<int>> face_orbits() const;
};

DartSystem darts_of(const HourglassGraph& g);

}  // namespace hourglass::detail
