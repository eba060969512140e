#include "hourglass/permutation.hpp"

#include <sstream>
#include <stdexcept>

namespace hourglass {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x]) {
      throw std::invalid_argument("Permutation: images are not a bijection on {1..n}");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int j = 0; j < n; ++j) im[j] = j + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::long_cycle(int n) {
  std::vector<int> im(n);
  for (int j = 1; j <= n; ++j) im[j - 1] = j % n + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::longest_element(int n) {
  std::vector<int> im(n);
  for (int j = 1; j <= n; ++j) im[j - 1] = n + 1 - j;
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(n);
  for (int j = 0; j < n; ++j) im[j] = j + 1;
  for (const auto& c : cycles) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      const int from = c[t];
      const int to = c[(t + 1) % c.size()];
      if (from < 1 || from > n) throw std::invalid_argument("Permutation::from_cycles: entry out of range");
      im[from - 1] = to;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (int j = 1; j <= size(); ++j) im[images_[j - 1] - 1] = j;
  return Permutation(std::move(im));
}

bool Permutation::is_involution() const {
  for (int j = 1; j <= size(); ++j) {
    if ((*this)((*this)(j)) != j) return false;
  }
  return true;
}

bool Permutation::has_fixed_point() const {
  for (int j = 1; j <= size(); ++j) {
    if ((*this)(j) == j) return true;
  }
  return false;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (int j = 0; j < size(); ++j) {
    if (j) os << ' ';
    os << images_[j];
  }
  return os.str();
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> done(size() + 1, false);
  for (int j = 1; j <= size(); ++j) {
    if (done[j] || (*this)(j) == j) continue;
    os << '(';
    int x = j;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = (*this)(x);
    }
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch in composition");
  std::vector<int> im(a.size());
  for (int j = 1; j <= a.size(); ++j) im[j - 1] = a(b(j));
  return Permutation(std::move(im));
}

Permutation conjugate_by_long_cycle(const Permutation& p) {
  const auto sigma = Permutation::long_cycle(p.size());
  return sigma.inverse() * p * sigma;
}

Permutation conjugate_by_longest(const Permutation& p) {
  const auto w0 = Permutation::longest_element(p.size());
  return w0 * p * w0;
}

std::string to_string(const PermutationTuple& tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += " | ";
    out += tuple[i].to_string();
  }
  return out;
}

}  // namespace hourglass
