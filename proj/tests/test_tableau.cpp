#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hourglass/tableau.hpp"

using namespace hourglass;

namespace {

RectTableau example() { return RectTableau::from_columns({{1, 2, 4, 5, 8, 11, 13}, {3, 6, 7, 9, 10, 12, 14}}); }

// Reference promotion on a grid: delete 1, slide the hole to the corner,
// fill with n+1, subtract 1. Also records the value moving up into row i.
struct Slide {
  std::vector<std::vector<int>> grid;
  std::vector<int> crossing;
};

Slide reference_promotion(const RectTableau& t) {
  const int r = t.rows(), d = t.cols(), n = t.size();
  Slide s{t.to_rows(), std::vector<int>(r, 0)};
  int i = 0, j = 0;
  while (i + 1 < r || j + 1 < d) {
    const int below = i + 1 < r ? s.grid[i + 1][j] : n + 1;
    const int right = j + 1 < d ? s.grid[i][j + 1] : n + 1;
    if (below < right) {
      s.crossing[i] = below;
      s.grid[i][j] = below;
      ++i;
    } else {
      s.grid[i][j] = right;
      ++j;
    }
  }
  s.grid[i][j] = n + 1;
  for (auto& row : s.grid)
    for (auto& x : row) --x;
  return s;
}

long long hook_count(int r, int d) {
  // Hook length formula evaluated with exact rational steps.
  std::vector<int> hooks;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= d; ++j) hooks.push_back(r - i + d - j + 1);
  long double v = 1;
  for (int k = 1; k <= r * d; ++k) v *= k;
  for (int h : hooks) v /= h;
  return static_cast<long long>(v + 0.5);
}

}  // namespace

TEST_CASE("construction validates standardness") {
  CHECK_THROWS_AS(RectTableau(2, 2, {1, 2, 4, 3}), std::invalid_argument);
  CHECK_THROWS_AS(RectTableau(2, 2, {2, 1, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(RectTableau(2, 2, {1, 2, 3, 3}), std::invalid_argument);
  const auto t = RectTableau(2, 2, {1, 2, 3, 4});
  CHECK(t.at(2, 1) == 3);
  CHECK(t.find(4).row == 2);
  CHECK(t.find(4).col == 2);
  CHECK(RectTableau::superstandard(3, 2).to_rows() == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5, 6}});
  CHECK(RectTableau::column_superstandard(3, 2).column(2) == std::vector<int>{4, 5, 6});
}

TEST_CASE("tableau counts follow the hook length formula") {
  for (auto [r, d] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}, {5, 2}, {3, 3}, {2, 5}, {4, 3}}) {
    const auto all = all_standard_tableaux(r, d);
    CHECK(static_cast<long long>(all.size()) == hook_count(r, d));
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const RectTableau& a, const RectTableau& b) { return a.row_major() < b.row_major(); }));
  }
}

TEST_CASE("promotion agrees with the reference slide") {
  for (auto [r, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}, {2, 4}}) {
    for (const auto& t : all_standard_tableaux(r, d)) {
      const auto ref = reference_promotion(t);
      const auto rec = promotion(t);
      CHECK(rec.result.to_rows() == ref.grid);
      for (int i = 1; i < r; ++i) CHECK(rec.row_crossing_values[i - 1] == ref.crossing[i - 1]);
    }
  }
}

TEST_CASE("promotion has order n on rectangles") {
  for (const auto& t : all_standard_tableaux(4, 2)) CHECK(promote_power(t, 8) == t);
  for (const auto& t : all_standard_tableaux(3, 3)) CHECK(promote_power(t, 9) == t);
}

TEST_CASE("evacuation is the 180 degree complement on rectangles") {
  for (auto [r, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 3}}) {
    for (const auto& t : all_standard_tableaux(r, d)) {
      const auto e = evacuation(t);
      const int n = t.size();
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= d; ++j) CHECK(e.at(i, j) == n + 1 - t.at(r + 1 - i, d + 1 - j));
      CHECK(evacuation(e) == t);
    }
  }
}

TEST_CASE("promotion permutations of the worked example") {
  const auto t = example();
  CHECK(prom_perm(t, 1).to_string() == "2 6 4 5 9 7 8 12 10 11 14 13 3 1");
  CHECK(prom_perm(t, 2).to_string() == "4 7 5 9 12 8 10 14 11 13 3 1 6 2");
  CHECK(prom_perm(t, 3).to_string() == "5 9 8 12 14 10 11 1 13 3 6 2 7 4");
  CHECK(prom_all(t).size() == 6);
  CHECK(prom1_via_matching(t) == std::vector<int>{2, 4, 5, 8, 12, 14});
}

TEST_CASE("promotion permutations from the reference slide") {
  for (const auto& t : all_standard_tableaux(4, 2)) {
    const int n = t.size();
    for (int i = 1; i < t.rows(); ++i) {
      const auto p = prom_perm(t, i);
      RectTableau cur = t;
      for (int j = 1; j <= n; ++j) {
        const int a = reference_promotion(cur).crossing[i - 1];
        CHECK(p(j) == (a + j - 2) % n + 1);
        cur = promote(cur);
      }
      CHECK(p.inverse() == prom_perm(t, t.rows() - i));
    }
  }
}

TEST_CASE("promotion permutations read off the matching") {
  for (int r = 2; r <= 6; ++r) {
    for (const auto& t : all_standard_tableaux(r, 2)) {
      const auto v = prom1_via_matching(t);
      for (int i = 1; i < r; ++i) CHECK(v[i - 1] == prom_perm(t, i)(1));
    }
  }
  CHECK_THROWS_AS(prom1_via_matching(RectTableau::superstandard(2, 3)), std::domain_error);
  CHECK_THROWS_AS(prom_perm(example(), 7), std::domain_error);
}

TEST_CASE("major index") {
  CHECK(major_index(RectTableau::superstandard(2, 2)) == 2);
  CHECK(major_index(RectTableau::column_superstandard(2, 2)) == 1 + 3);
  CHECK(major_index(RectTableau::column_tableau(4)) == 1 + 2 + 3);
}
