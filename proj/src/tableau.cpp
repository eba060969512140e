#include "hourglass/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hourglass {

RectTableau::RectTableau(int rows, int cols, std::vector<int> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("RectTableau: shape must be at least 1x1");
  const int n = rows * cols;
  if (static_cast<int>(entries_.size()) != n) {
    throw std::invalid_argument("RectTableau: expected " + std::to_string(n) + " entries");
  }
  std::vector<bool> seen(n + 1, false);
  for (int x : entries_) {
    if (x < 1 || x > n || seen[x]) throw std::invalid_argument("RectTableau: entries must be exactly 1..n");
    seen[x] = true;
  }
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      if (j > 1 && at(i, j - 1) >= at(i, j)) throw std::invalid_argument("RectTableau: row not increasing");
      if (i > 1 && at(i - 1, j) >= at(i, j)) throw std::invalid_argument("RectTableau: column not increasing");
    }
  }
}

RectTableau RectTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("RectTableau: empty shape");
  const int r = static_cast<int>(rows.size());
  const int d = static_cast<int>(rows.front().size());
  std::vector<int> flat;
  flat.reserve(r * d);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d) throw std::invalid_argument("RectTableau: rows have unequal length");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return RectTableau(r, d, std::move(flat));
}

RectTableau RectTableau::from_columns(const std::vector<std::vector<int>>& columns) {
  if (columns.empty() || columns.front().empty()) throw std::invalid_argument("RectTableau: empty shape");
  const int d = static_cast<int>(columns.size());
  const int r = static_cast<int>(columns.front().size());
  std::vector<int> flat(r * d);
  for (int j = 0; j < d; ++j) {
    if (static_cast<int>(columns[j].size()) != r) throw std::invalid_argument("RectTableau: columns have unequal length");
    for (int i = 0; i < r; ++i) flat[i * d + j] = columns[j][i];
  }
  return RectTableau(r, d, std::move(flat));
}

RectTableau RectTableau::column_tableau(int rows) { return column_superstandard(rows, 1); }

RectTableau RectTableau::superstandard(int rows, int cols) {
  std::vector<int> flat(rows * cols);
  for (int k = 0; k < rows * cols; ++k) flat[k] = k + 1;
  return RectTableau(rows, cols, std::move(flat));
}

RectTableau RectTableau::column_superstandard(int rows, int cols) {
  std::vector<int> flat(rows * cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) flat[i * cols + j] = j * rows + i + 1;
  }
  return RectTableau(rows, cols, std::move(flat));
}

Cell RectTableau::find(int value) const {
  for (int k = 0; k < size(); ++k) {
    if (entries_[k] == value) return {k / cols_ + 1, k % cols_ + 1};
  }
  throw std::out_of_range("RectTableau::find: value not present");
}

std::vector<int> RectTableau::column(int col) const {
  std::vector<int> out(rows_);
  for (int i = 1; i <= rows_; ++i) out[i - 1] = at(i, col);
  return out;
}

std::vector<std::vector<int>> RectTableau::to_rows() const {
  std::vector<std::vector<int>> out(rows_);
  for (int i = 1; i <= rows_; ++i) {
    out[i - 1].assign(entries_.begin() + (i - 1) * cols_, entries_.begin() + i * cols_);
  }
  return out;
}

PromotionRecord promotion(const RectTableau& t) {
  const int r = t.rows(), d = t.cols(), n = t.size();
  std::vector<int> a = t.row_major();
  auto idx = [d](int i, int j) { return (i - 1) * d + (j - 1); };

  PromotionRecord rec{t, {}, std::vector<int>(std::max(r - 1, 0), 0)};
  int hi = 1, hj = 1;
  while (hi != r || hj != d) {
    const int right = hj < d ? a[idx(hi, hj + 1)] : n + 1;
    const int below = hi < r ? a[idx(hi + 1, hj)] : n + 1;
    if (below < right) {
      rec.path.push_back({hi + 1, hj});
      rec.row_crossing_values[hi - 1] = below;
      a[idx(hi, hj)] = below;
      ++hi;
    } else {
      rec.path.push_back({hi, hj + 1});
      a[idx(hi, hj)] = right;
      ++hj;
    }
  }
  a[idx(r, d)] = n + 1;
  for (int& x : a) --x;
  rec.result = RectTableau(r, d, std::move(a));
  return rec;
}

RectTableau promote(const RectTableau& t) { return promotion(t).result; }

RectTableau promote_power(const RectTableau& t, int k) {
  const int n = t.size();
  k = ((k % n) + n) % n;
  RectTableau cur = t;
  for (int s = 0; s < k; ++s) cur = promote(cur);
  return cur;
}

RectTableau evacuation(const RectTableau& t) {
  const int r = t.rows(), d = t.cols(), n = t.size();
  std::vector<int> a = t.row_major();
  std::vector<bool> active(n, true);
  std::vector<int> out(n, 0);
  auto idx = [d](int i, int j) { return (i - 1) * d + (j - 1); };

  for (int k = 1; k <= n; ++k) {
    // The smallest active entry always sits at (1,1).
    int hi = 1, hj = 1;
    for (;;) {
      const bool has_right = hj < d && active[idx(hi, hj + 1)];
      const bool has_below = hi < r && active[idx(hi + 1, hj)];
      if (!has_right && !has_below) break;
      const int right = has_right ? a[idx(hi, hj + 1)] : n + 1;
      const int below = has_below ? a[idx(hi + 1, hj)] : n + 1;
      if (below < right) {
        a[idx(hi, hj)] = below;
        ++hi;
      } else {
        a[idx(hi, hj)] = right;
        ++hj;
      }
    }
    active[idx(hi, hj)] = false;
    out[idx(hi, hj)] = n + 1 - k;
  }
  return RectTableau(r, d, std::move(out));
}

Permutation prom_perm(const RectTableau& t, int i) {
  if (i < 1 || i > t.rows() - 1) {
    throw std::domain_error("prom_perm: row index " + std::to_string(i) + " outside 1.." +
                            std::to_string(t.rows() - 1));
  }
  return prom_all(t)[i - 1];
}

PermutationTuple prom_all(const RectTableau& t) {
  const int r = t.rows(), n = t.size();
  std::vector<std::vector<int>> images(std::max(r - 1, 0), std::vector<int>(n));
  RectTableau cur = t;
  for (int j = 1; j <= n; ++j) {
    PromotionRecord rec = promotion(cur);
    for (int i = 1; i < r; ++i) {
      const int a = rec.row_crossing_values[i - 1];
      images[i - 1][j - 1] = ((a + j - 2) % n) + 1;
    }
    cur = std::move(rec.result);
  }
  PermutationTuple out;
  out.reserve(images.size());
  for (auto& im : images) out.emplace_back(std::move(im));
  return out;
}

std::vector<int> prom1_via_matching(const RectTableau& t) {
  if (t.cols() != 2) throw std::domain_error("prom1_via_matching: tableau must have two columns");
  const int n = t.size();
  std::vector<bool> opener(n + 1, false);
  for (int x : t.column(1)) opener[x] = true;
  std::vector<int> partner(n + 1, 0), stack;
  for (int x = 1; x <= n; ++x) {
    if (opener[x]) {
      stack.push_back(x);
    } else {
      partner[x] = stack.back();
      partner[stack.back()] = x;
      stack.pop_back();
    }
  }
  const int barrier = partner[1];
  std::vector<int> out;
  for (int x = 2; x < barrier; ++x) {
    if (opener[x]) out.push_back(x);
  }
  for (int x = barrier + 1; x <= n; ++x) {
    if (!opener[x]) out.push_back(x);
  }
  return out;
}

namespace {

void fill_tableaux(int v, int n, int rows, int cols, std::vector<int>& lengths, std::vector<int>& cells,
                   std::vector<RectTableau>& out) {
  if (v > n) {
    out.emplace_back(rows, cols, cells);
    return;
  }
  for (int i = 0; i < rows; ++i) {
    if (lengths[i] == cols) continue;
    if (i > 0 && lengths[i - 1] <= lengths[i]) continue;
    cells[i * cols + lengths[i]] = v;
    ++lengths[i];
    fill_tableaux(v + 1, n, rows, cols, lengths, cells, out);
    --lengths[i];
  }
}

}  // namespace

std::vector<RectTableau> all_standard_tableaux(int rows, int cols) {
  std::vector<RectTableau> out;
  std::vector<int> lengths(rows, 0), cells(rows * cols, 0);
  fill_tableaux(1, rows * cols, rows, cols, lengths, cells, out);
  std::sort(out.begin(), out.end(),
            [](const RectTableau& x, const RectTableau& y) { return x.row_major() < y.row_major(); });
  return out;
}

int major_index(const RectTableau& t) {
  int maj = 0;
  for (int i = 1; i < t.size(); ++i) {
    if (t.find(i + 1).row > t.find(i).row) maj += i;
  }
  return maj;
}

}  // namespace hourglass
