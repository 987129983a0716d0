#pragma once

// Exact sparse matrices over the Gaussian rationals, with rank / kernel
// dimension / kernel basis by fraction-exact Gaussian elimination. Rank and
// kernel dimension are exact integers and rank(M) + dim ker(M) == cols.

#include <utility>
#include <vector>

#include "jinv/rational.hpp"

namespace jinv {

// One sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<int, GaussRat>>;

SparseRow row_normalize(SparseRow r);                      // sort, merge, drop zeros
SparseRow row_axpy(const SparseRow& a, const GaussRat& c,  // a + c*b
                   const SparseRow& b);

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static ExactMatrix from_dense(const std::vector<std::vector<GaussRat>>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const GaussRat& v);  // accumulates into (r, c)
  void set_row(int r, SparseRow row);
  GaussRat at(int r, int c) const;
  const SparseRow& row(int r) const { return data_[r]; }

  void append_row(SparseRow row);  // grows the matrix by one row

  ExactMatrix transposed() const;
  std::vector<GaussRat> apply(const std::vector<GaussRat>& v) const;  // M*v

  int rank() const;
  int kernel_dim() const { return cols_ - rank(); }
  // Columns of the returned vectors follow this matrix's column indexing.
  std::vector<std::vector<GaussRat>> kernel_basis() const;

  long long nnz() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseRow> data_;
};

// Incremental rank tracker: feed rows one at a time, rank() grows by one for
// every row independent of those already seen. Used to build operator bases.
class RowEliminator {
 public:
  explicit RowEliminator(int cols) : cols_(cols) {}

  // Returns true (and keeps a reduced copy) iff the row was independent.
  bool insert(SparseRow row);
  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return cols_; }

  // Reduce a row against the current pivots without inserting it.
  SparseRow reduce(SparseRow row) const;

 private:
  int cols_;
  std::vector<std::pair<int, SparseRow>> pivots_;  // (pivot col, monic row), unordered
  std::vector<int> pivot_of_col_ = std::vector<int>();
};

}  // namespace jinv
