#pragma once

#include <compare>
#include <vector>

#include "hourglass/permutation.hpp"

namespace hourglass {

/// A cell of a Young diagram, 1-indexed (row 1 is the top row).
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Standard Young tableau of rectangular shape rows x cols, stored row-major.
class RectTableau {
 public:
  /// Throws std::invalid_argument unless the filling is standard.
  RectTableau(int rows, int cols, std::vector<int> row_major);

  static RectTableau from_rows(const std::vector<std::vector<int>>& rows);
  static RectTableau from_columns(const std::vector<std::vector<int>>& columns);
  /// The unique tableau of shape rows x 1.
  static RectTableau column_tableau(int rows);
  /// Filled left to right, then top to bottom.
  static RectTableau superstandard(int rows, int cols);
  /// Filled top to bottom, then left to right.
  static RectTableau column_superstandard(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }
  int at(int row, int col) const { return entries_[(row - 1) * cols_ + (col - 1)]; }
  Cell find(int value) const;
  std::vector<int> column(int col) const;
  std::vector<std::vector<int>> to_rows() const;
  const std::vector<int>& row_major() const { return entries_; }

  friend bool operator==(const RectTableau&, const RectTableau&) = default;
  friend auto operator<=>(const RectTableau&, const RectTableau&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<int> entries_;
};

struct PromotionRecord {
  RectTableau result;
  /// Cells (in the input tableau) of the values that slid, in sliding order.
  std::vector<Cell> path;
  /// row_crossing_values[i-1] is the value (before renumbering) that slid
  /// from row i+1 into row i; 0 when no value crossed that boundary.
  std::vector<int> row_crossing_values;
};

/// Jeu de taquin promotion: delete 1, slide the smaller of the right and
/// lower neighbours into the hole until it reaches the corner, fill the
/// corner with n+1, and subtract 1 from every entry.
PromotionRecord promotion(const RectTableau& t);
RectTableau promote(const RectTableau& t);
RectTableau promote_power(const RectTableau& t, int k);

/// Schuetzenberger evacuation by n successive deletions and slides.
RectTableau evacuation(const RectTableau& t);

/// i-th promotion permutation. prom_i(T)(j) is the representative in
/// {1..n} of a + j - 1 (mod n), where a is the value that slides from row
/// i+1 to row i when promotion is applied to promotion^{j-1}(T).
/// Throws std::domain_error unless 1 <= i <= rows-1.
Permutation prom_perm(const RectTableau& t, int i);
/// (prom_1(T), ..., prom_{r-1}(T)); empty when r = 1.
PermutationTuple prom_all(const RectTableau& t);

/// (prom_1(T)(1), ..., prom_{r-1}(T)(1)) for a two-column tableau, read
/// off the noncrossing matching: openers strictly inside the barrier arc
/// {1, M(1)}, then closers beyond it. Throws std::domain_error unless cols == 2.
std::vector<int> prom1_via_matching(const RectTableau& t);

/// All standard fillings of the rows x cols rectangle, in lexicographic
/// order of their row-major entry vectors.
std::vector<RectTableau> all_standard_tableaux(int rows, int cols);

/// Sum of descents i, where i+1 sits in a strictly lower row than i.
int major_index(const RectTableau& t);

}  // namespace hourglass
