#pragma once

#include <string>
#include <vector>

namespace hourglass {

/// A permutation of {1, ..., n} in one-line notation. All indexing is
/// 1-based so printed values match the usual combinatorial conventions.
class Permutation {
 public:
  Permutation() = default;
  /// images[j-1] is the image of j. Throws std::invalid_argument if the
  /// array is not a bijection on {1, ..., n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// sigma = (1 2 ... n), i.e. j -> j+1 (mod n).
  static Permutation long_cycle(int n);
  /// w0 = (1 n)(2 n-1)..., i.e. j -> n+1-j.
  static Permutation longest_element(int n);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_involution() const;
  bool has_fixed_point() const;

  /// One-line notation separated by spaces, e.g. "2 6 4 5".
  std::string to_string() const;
  /// Cycle notation without fixed points, e.g. "(1 4)(2 3)".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Composition as functions: (a * b)(j) = a(b(j)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// sigma^{-1} * p * sigma.
Permutation conjugate_by_long_cycle(const Permutation& p);
/// w0 * p * w0.
Permutation conjugate_by_longest(const Permutation& p);

using PermutationTuple = std::vector<Permutation>;

std::string to_string(const PermutationTuple& tuple);

}  // namespace hourglass
