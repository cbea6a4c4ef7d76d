#include "khs/sparse.hpp"

#include <algorithm>
#include <queue>

#include "khs/errors.hpp"

namespace khs {

void SparseMatrixQ::set(int32_t r, int32_t c, const Rational& v) {
  if (v == 0) return;
  auto& col = columns[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, int32_t row) { return e.first < row; });
  if (it != col.end() && it->first == r)
    it->second = v;
  else
    col.insert(it, {r, v});
}

Rational SparseMatrixQ::get(int32_t r, int32_t c) const {
  const auto& col = columns[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, int32_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return Rational(0);
}

bool SparseMatrixQ::is_zero() const {
  for (const auto& col : columns)
    if (!col.empty()) return false;
  return true;
}

SparseMatrixQ SparseMatrixQ::transpose() const {
  SparseMatrixQ t(cols, rows);
  for (int32_t c = 0; c < cols; c++)
    for (const auto& [r, v] : columns[c]) t.columns[r].push_back({c, v});
  return t;
}

SparseMatrixQ SparseMatrixQ::multiply(const SparseMatrixQ& other) const {
  if (cols != other.rows) fail(errc::row_mismatch, "matrix product shape mismatch");
  SparseMatrixQ out(rows, other.cols);
  for (int32_t c = 0; c < other.cols; c++) {
    SparseVectorQ acc;
    for (const auto& [k, v] : other.columns[c]) axpy(acc, v, columns[k]);
    out.columns[c] = std::move(acc);
  }
  return out;
}

SparseVectorQ SparseMatrixQ::apply(const SparseVectorQ& v) const {
  SparseVectorQ acc;
  for (const auto& [k, c] : v) axpy(acc, c, columns[k]);
  return acc;
}

SparseMatrixQ SparseMatrixQ::identity(int32_t n) {
  SparseMatrixQ m(n, n);
  for (int32_t i = 0; i < n; i++) m.columns[i].push_back({i, Rational(1)});
  return m;
}

void axpy(SparseVectorQ& v, const Rational& c, const SparseVectorQ& w) {
  if (c == 0 || w.empty()) return;
  SparseVectorQ out;
  out.reserve(v.size() + w.size());
  auto a = v.begin();
  auto b = w.begin();
  Rational tmp;
  while (a != v.end() || b != w.end()) {
    if (b == w.end() || (a != v.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == v.end() || b->first < a->first) {
      out.push_back({b->first, c * b->second});
      ++b;
    } else {
      tmp = a->second + c * b->second;
      if (tmp != 0) out.push_back({a->first, tmp});
      ++a;
      ++b;
    }
  }
  v = std::move(out);
}

SparseVectorQ add(const SparseVectorQ& a, const SparseVectorQ& b) {
  SparseVectorQ out = a;
  axpy(out, Rational(1), b);
  return out;
}

SparseVectorQ scale(const SparseVectorQ& v, const Rational& c) {
  SparseVectorQ out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& [r, x] : v) out.push_back({r, c * x});
  return out;
}

namespace {

bool has_row(const SparseVectorQ& v, int32_t row, Rational* value) {
  auto it = std::lower_bound(v.begin(), v.end(), row,
                             [](const auto& e, int32_t r) { return e.first < r; });
  if (it != v.end() && it->first == row) {
    if (value) *value = it->second;
    return true;
  }
  return false;
}

}  // namespace

// Eliminates earlier-created pivots first. A pivot column carries no entries
// in rows of pivots created before it, so one pass in creation order
// terminates; newly introduced pivot rows always belong to later pivots.
void Eliminator::reduce_from(SparseVectorQ& v, int64_t first_pivot) const {
  std::priority_queue<int32_t, std::vector<int32_t>, std::greater<>> todo;
  for (const auto& [r, val] : v) {
    int32_t p = pivot_of_row_[r];
    if (p >= first_pivot) todo.push(p);
  }
  Rational value;
  while (!todo.empty()) {
    int32_t p = todo.top();
    todo.pop();
    while (!todo.empty() && todo.top() == p) todo.pop();
    const Pivot& piv = pivots_[p];
    if (!has_row(v, piv.row, &value)) continue;  // cancelled meanwhile
    Rational factor = -value / piv.value;
    std::vector<int32_t> before;
    before.reserve(v.size());
    for (const auto& [r, x] : v) before.push_back(r);
    axpy(v, factor, piv.col);
    // rows introduced by the axpy may hit later pivots
    for (const auto& [r, x] : v) {
      int32_t q = pivot_of_row_[r];
      if (q > p && !std::binary_search(before.begin(), before.end(), r)) todo.push(q);
    }
  }
}

void Eliminator::reduce(SparseVectorQ& v) const { reduce_from(v, 0); }

bool Eliminator::add_column(SparseVectorQ col) {
  reduce(col);
  if (col.empty()) return false;
  // pivot choice: smallest coefficient bit length, ties by lowest row
  std::size_t best = 0;
  std::size_t best_bits = bit_size(col[0].second);
  for (std::size_t i = 1; i < col.size(); i++) {
    std::size_t b = bit_size(col[i].second);
    if (b < best_bits) {
      best = i;
      best_bits = b;
    }
  }
  Pivot p;
  p.row = col[best].first;
  p.value = col[best].second;
  p.col = std::move(col);
  pivot_of_row_[p.row] = static_cast<int32_t>(pivots_.size());
  pivots_.push_back(std::move(p));
  return true;
}

int64_t rank(const SparseMatrixQ& m) {
  Eliminator e(m.rows);
  for (const auto& col : m.columns) e.add_column(col);
  return e.rank();
}

RankProfile rank_profile(const SparseMatrixQ& m, std::vector<int64_t> cuts) {
  for (std::size_t j = 0; j < cuts.size(); j++) {
    if (cuts[j] < 0 || cuts[j] > m.cols || (j > 0 && cuts[j] <= cuts[j - 1]))
      fail(errc::bad_cuts, "rank_profile cuts must be increasing and within column count");
  }
  RankProfile out;
  out.cuts = std::move(cuts);
  out.ranks.reserve(out.cuts.size());
  Eliminator e(m.rows);
  int64_t next = 0;
  std::size_t j = 0;
  while (j < out.cuts.size() && out.cuts[j] == 0) {
    out.ranks.push_back(0);
    j++;
  }
  for (int64_t c = 0; c < m.cols && j < out.cuts.size(); c++) {
    e.add_column(m.columns[c]);
    next = c + 1;
    while (j < out.cuts.size() && out.cuts[j] == next) {
      out.ranks.push_back(e.rank());
      j++;
    }
  }
  return out;
}

int64_t augmented_rank(const SparseMatrixQ& a, const SparseMatrixQ& b) {
  if (a.rows != b.rows) fail(errc::row_mismatch, "augmented_rank: row count mismatch");
  Eliminator e(a.rows);
  for (const auto& col : a.columns) e.add_column(col);
  for (const auto& col : b.columns) e.add_column(col);
  return e.rank();
}

std::vector<SparseVectorQ> kernel_basis(const SparseMatrixQ& m) {
  // same reduction as Eliminator, with a history vector per pivot recording
  // the combination of original columns it represents
  struct Pivot {
    int32_t row;
    Rational value;
    SparseVectorQ col;
    SparseVectorQ hist;
  };
  std::vector<Pivot> pivots;
  std::vector<int32_t> pivot_of_row(m.rows, -1);
  std::vector<SparseVectorQ> kernel;

  Rational value;
  for (int32_t c = 0; c < m.cols; c++) {
    SparseVectorQ v = m.columns[c];
    SparseVectorQ h{{c, Rational(1)}};
    std::priority_queue<int32_t, std::vector<int32_t>, std::greater<>> todo;
    for (const auto& [r, x] : v)
      if (pivot_of_row[r] >= 0) todo.push(pivot_of_row[r]);
    while (!todo.empty()) {
      int32_t p = todo.top();
      todo.pop();
      while (!todo.empty() && todo.top() == p) todo.pop();
      const Pivot& piv = pivots[p];
      auto it = std::lower_bound(v.begin(), v.end(), piv.row,
                                 [](const auto& e, int32_t row) { return e.first < row; });
      if (it == v.end() || it->first != piv.row) continue;
      value = it->second;
      Rational factor = -value / piv.value;
      std::vector<int32_t> before;
      before.reserve(v.size());
      for (const auto& [r, x] : v) before.push_back(r);
      axpy(v, factor, piv.col);
      axpy(h, factor, piv.hist);
      for (const auto& [r, x] : v) {
        int32_t q = pivot_of_row[r];
        if (q > p && !std::binary_search(before.begin(), before.end(), r)) todo.push(q);
      }
    }
    if (v.empty()) {
      kernel.push_back(std::move(h));
    } else {
      std::size_t best = 0;
      std::size_t best_bits = bit_size(v[0].second);
      for (std::size_t i = 1; i < v.size(); i++) {
        std::size_t b = bit_size(v[i].second);
        if (b < best_bits) {
          best = i;
          best_bits = b;
        }
      }
      Pivot p;
      p.row = v[best].first;
      p.value = v[best].second;
      p.col = std::move(v);
      p.hist = std::move(h);
      pivot_of_row[p.row] = static_cast<int32_t>(pivots.size());
      pivots.push_back(std::move(p));
    }
  }
  return kernel;
}

}  // namespace khs
