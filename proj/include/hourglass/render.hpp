#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hourglass/explorer.hpp"
#include "hourglass/graph.hpp"

namespace hourglass {

struct LayoutOptions {
  double size = 640.0;
  std::uint32_t seed = 20240611;
  int iterations = 400;
};

/// Boundary vertices equally spaced clockwise on a circle starting at the
/// top; internal vertices placed by a seeded spring embedder.
std::vector<std::pair<double, double>> layout(const HourglassGraph& g, const LayoutOptions& opt = {});

/// An edge of multiplicity m is drawn as m strands twisted once.
std::string render_svg(const HourglassGraph& g, const LayoutOptions& opt = {});
std::string render_dot(const HourglassGraph& g);
std::string flip_graph_dot(const MoveClass& mc);

}  // namespace hourglass
