#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hourglass/graph.hpp"
#include "hourglass/matching.hpp"
#include "hourglass/permutation.hpp"
#include "hourglass/tableau.hpp"
#include "hourglass/trips.hpp"

namespace hourglass {

using Json = nlohmann::json;

/// Malformed or schema-violating input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const RectTableau& t);
Json to_json(const NoncrossingMatching& m);
Json to_json(const WeightedPolygonGraph& p);
Json to_json(const HourglassGraph& g);
Json to_json(const Permutation& p);  // image array
Json to_json(const TripSegment& s);

RectTableau tableau_from_json(const Json& j);
NoncrossingMatching matching_from_json(const Json& j);
/// claw_sizes / claw_offsets are optional and left empty when absent.
WeightedPolygonGraph polygon_from_json(const Json& j);
/// Vertex and edge ids are renumbered in order of appearance.
HourglassGraph graph_from_json(const Json& j);

/// Parses a file; parse errors carry the byte offset.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);
/// Sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace hourglass
