#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "khs/rational.hpp"

namespace khs {

// One sparse column: (row index, nonzero coefficient) sorted by row.
using SparseVectorQ = std::vector<std::pair<int32_t, Rational>>;

// Column-major sparse matrix over Q. Invariants: indices in range, no stored
// zeros, at most one entry per (row, col), columns sorted by row.
struct SparseMatrixQ {
  int32_t rows = 0;
  int32_t cols = 0;
  std::vector<SparseVectorQ> columns;

  SparseMatrixQ() = default;
  SparseMatrixQ(int32_t r, int32_t c) : rows(r), cols(c), columns(c) {}

  void set(int32_t r, int32_t c, const Rational& v);
  Rational get(int32_t r, int32_t c) const;
  bool is_zero() const;

  SparseMatrixQ transpose() const;
  // Matrix product this * other (for chain map composition).
  SparseMatrixQ multiply(const SparseMatrixQ& other) const;
  // this * v.
  SparseVectorQ apply(const SparseVectorQ& v) const;

  static SparseMatrixQ identity(int32_t n);
};

// v += c * w, both sorted by row.
void axpy(SparseVectorQ& v, const Rational& c, const SparseVectorQ& w);
SparseVectorQ add(const SparseVectorQ& a, const SparseVectorQ& b);
SparseVectorQ scale(const SparseVectorQ& v, const Rational& c);

// Nested rank profile: ranks[j] = rank of the submatrix on the first cuts[j]
// columns. Serves the q-filtration computation, which orders columns by
// descending q so leading-column spans are exactly the F_q restrictions.
struct RankProfile {
  std::vector<int64_t> cuts;
  std::vector<int64_t> ranks;
};

// Incremental left-to-right elimination. Columns are fed once; pivot columns
// are retained for reducing later columns, zero-reduced columns are dropped.
// Pivot choice within a new column: smallest bit-length coefficient, ties by
// lowest row index.
class Eliminator {
 public:
  explicit Eliminator(int32_t rows) : pivot_of_row_(rows, -1) {}

  // Feeds one column; returns true if it added a pivot (rank + 1).
  bool add_column(SparseVectorQ col);
  int64_t rank() const { return static_cast<int64_t>(pivots_.size()); }
  // Reduces v modulo the span of all columns fed so far. v becomes zero iff
  // it lies in that span.
  void reduce(SparseVectorQ& v) const;
  // Continues a previous reduce() after more columns were added. first_pivot
  // is the pivot count at the time of the last reduction.
  void reduce_from(SparseVectorQ& v, int64_t first_pivot) const;

 private:
  struct Pivot {
    int32_t row;
    Rational value;  // coefficient at `row` in col
    SparseVectorQ col;
  };
  std::vector<Pivot> pivots_;
  std::vector<int32_t> pivot_of_row_;
};

int64_t rank(const SparseMatrixQ& m);
RankProfile rank_profile(const SparseMatrixQ& m, std::vector<int64_t> cuts);
// rank of the column-concatenation [A | B]; computes dim(im A + span B).
int64_t augmented_rank(const SparseMatrixQ& a, const SparseMatrixQ& b);

// Basis of { x : M x = 0 }, as combinations of column indices.
std::vector<SparseVectorQ> kernel_basis(const SparseMatrixQ& m);

}  // namespace khs
