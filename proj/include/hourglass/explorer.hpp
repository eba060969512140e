#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hourglass/graph.hpp"
#include "hourglass/matching.hpp"
#include "hourglass/permutation.hpp"

namespace hourglass {

/// Square-move equivalence class. Member 0 is the starting graph; the rest
/// appear in breadth-first order, each level sorted by canonical form.
struct MoveClass {
  std::vector<std::string> forms;
  std::vector<HourglassGraph> members;          // canonicalized
  std::vector<std::pair<int, int>> edges;       // single square moves, i < j, sorted
  PermutationTuple trips;                       // common trip permutations
  bool complete = true;

  std::size_t size() const { return members.size(); }
  int index_of(const std::string& form) const;  // -1 when absent
};

/// Thrown when a class outgrows the cap; carries the explored part.
class BoundedExplorationError : public std::runtime_error {
 public:
  BoundedExplorationError(const std::string& what, MoveClass partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const MoveClass& partial() const { return partial_; }

 private:
  MoveClass partial_;
};

/// HOURGLASS_MAX_CLASS when set to a positive integer, else 100000.
std::size_t max_class_size();

/// Closure of g under square moves. Every member is checked to have the
/// trip permutations of g; a mismatch throws std::logic_error.
MoveClass move_class(const HourglassGraph& g, std::size_t cap = max_class_size());

struct TamariReport {
  int r = 0;
  std::size_t class_size = 0;
  std::size_t triangulations = 0;
  std::size_t class_edges = 0;
  std::size_t flip_edges = 0;
  bool bijection = false;          // recovered triangulations are exactly the triangulations
  bool flip_graphs_agree = false;  // square moves correspond to diagonal flips
  bool connected = false;
  bool regular = false;            // every vertex has degree r - 3
  /// member k of the class recovers triangulation_of[k] in triangulate_all order
  std::vector<int> triangulation_of;
  bool ok() const { return bijection && flip_graphs_agree && connected && regular; }
};

/// Compares the class of the superstandard r x 2 graph with the
/// triangulations of an r-gon. Throws std::domain_error for r < 3.
TamariReport tamari_check(int r);

/// Whether two triangulations differ in exactly one diagonal.
bool differ_by_flip(const WeightedPolygonGraph& a, const WeightedPolygonGraph& b);

struct ClassStatistics {
  int r = 0;
  std::size_t tableaux = 0;
  std::size_t classes = 0;
  std::size_t graphs = 0;  // size of the union of all classes
  std::vector<std::size_t> class_sizes;
  bool disjoint = false;
  bool trips_constant = false;
  bool trips_distinct = false;
  std::string detail;
  bool ok() const { return disjoint && trips_constant && trips_distinct && classes == tableaux; }
};

/// Classes of the Fraser graphs of all r x 2 tableaux.
/// Throws std::domain_error unless 1 <= r <= 7.
ClassStatistics class_statistics(int r);

}  // namespace hourglass
