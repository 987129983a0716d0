#include "jinv/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace jinv {

SparseRow row_normalize(SparseRow r) {
  std::sort(r.begin(), r.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(r.size());
  for (auto& [c, v] : r) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += v;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!v.is_zero()) {
      out.emplace_back(c, std::move(v));
    }
  }
  return out;
}

SparseRow row_axpy(const SparseRow& a, const GaussRat& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      GaussRat v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.emplace_back(b[j].first, c * b[j].second);
  return out;
}

ExactMatrix ExactMatrix::from_dense(const std::vector<std::vector<GaussRat>>& d) {
  int rows = static_cast<int>(d.size());
  int cols = rows ? static_cast<int>(d[0].size()) : 0;
  ExactMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (!d[r][c].is_zero()) m.data_[r].emplace_back(c, d[r][c]);
  return m;
}

void ExactMatrix::add(int r, int c, const GaussRat& v) {
  if (v.is_zero()) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

void ExactMatrix::set_row(int r, SparseRow row) { data_[r] = row_normalize(std::move(row)); }

GaussRat ExactMatrix::at(int r, int c) const {
  for (const auto& [col, v] : data_[r])
    if (col == c) return v;
  return GaussRat();
}

void ExactMatrix::append_row(SparseRow row) {
  data_.push_back(row_normalize(std::move(row)));
  ++rows_;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;
}

std::vector<GaussRat> ExactMatrix::apply(const std::vector<GaussRat>& v) const {
  std::vector<GaussRat> out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[r]) out[r] += x * v[c];
  return out;
}

long long ExactMatrix::nnz() const {
  long long n = 0;
  for (const auto& r : data_) n += static_cast<long long>(r.size());
  return n;
}

namespace {

// Forward elimination working state shared by rank() and kernel_basis().
// Columns are permuted so that globally sparse columns come first (pivoting
// on them creates less fill-in), rows are fed sparsest first; both choices
// are deterministic and affect speed only, never the resulting rank.
struct Elimination {
  int cols;
  std::vector<int> perm, inv_perm;       // perm[original col] = working col
  std::vector<SparseRow> pivot_rows;     // monic, indexed by insertion order
  std::vector<int> pivot_of_col;        // working col -> pivot index or -1

  explicit Elimination(const ExactMatrix& m) : cols(m.cols()) {
    std::vector<long long> count(cols, 0);
    for (int r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r)) ++count[c];
    std::vector<int> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return count[a] < count[b]; });
    perm.assign(cols, 0);
    inv_perm.assign(cols, 0);
    for (int w = 0; w < cols; ++w) {
      perm[order[w]] = w;
      inv_perm[w] = order[w];
    }
    pivot_of_col.assign(cols, -1);
  }

  SparseRow remap(const SparseRow& row) const {
    SparseRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) out.emplace_back(perm[c], v);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  // Reduce against existing pivots; if nonzero remains, record a new monic
  // pivot and return true.
  bool insert(SparseRow row) {
    while (!row.empty()) {
      int lead = row.front().first;
      int p = pivot_of_col[lead];
      if (p < 0) break;
      GaussRat c = -row.front().second;  // pivot row is monic
      row = row_axpy(row, c, pivot_rows[p]);
    }
    if (row.empty()) return false;
    GaussRat inv = row.front().second.inverse();
    for (auto& [c, v] : row) v *= inv;
    pivot_of_col[row.front().first] = static_cast<int>(pivot_rows.size());
    pivot_rows.push_back(std::move(row));
    return true;
  }

  void run(const ExactMatrix& m) {
    std::vector<int> order(m.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return m.row(a).size() < m.row(b).size();
    });
    for (int r : order)
      if (!m.row(r).empty()) insert(remap(m.row(r)));
  }
};

}  // namespace

int ExactMatrix::rank() const {
  Elimination e(*this);
  e.run(*this);
  return static_cast<int>(e.pivot_rows.size());
}

std::vector<std::vector<GaussRat>> ExactMatrix::kernel_basis() const {
  Elimination e(*this);
  e.run(*this);

  // Back-substitute to reduced echelon form, highest pivot column first.
  std::vector<int> by_col;
  for (int c = 0; c < cols_; ++c)
    if (e.pivot_of_col[c] >= 0) by_col.push_back(c);
  for (auto it = by_col.rbegin(); it != by_col.rend(); ++it) {
    int col = *it;
    const SparseRow low = e.pivot_rows[e.pivot_of_col[col]];
    for (int c : by_col) {
      if (c >= col) break;
      SparseRow& r = e.pivot_rows[e.pivot_of_col[c]];
      GaussRat coeff;
      for (const auto& [cc, v] : r)
        if (cc == col) {
          coeff = v;
          break;
        }
      if (!coeff.is_zero()) r = row_axpy(r, -coeff, low);
    }
  }

  std::vector<std::vector<GaussRat>> basis;
  for (int w = 0; w < cols_; ++w) {
    if (e.pivot_of_col[w] >= 0) continue;
    std::vector<GaussRat> v(cols_);
    v[e.inv_perm[w]] = GaussRat(1);
    for (int c : by_col) {
      const SparseRow& r = e.pivot_rows[e.pivot_of_col[c]];
      for (const auto& [cc, coeff] : r)
        if (cc == w) {
          v[e.inv_perm[c]] = -coeff;
          break;
        }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RowEliminator::insert(SparseRow row) {
  row = reduce(row_normalize(std::move(row)));
  if (row.empty()) return false;
  GaussRat inv = row.front().second.inverse();
  for (auto& [c, v] : row) v *= inv;
  if (pivot_of_col_.empty()) pivot_of_col_.assign(cols_, -1);
  pivot_of_col_[row.front().first] = static_cast<int>(pivots_.size());
  pivots_.emplace_back(row.front().first, std::move(row));
  return true;
}

SparseRow RowEliminator::reduce(SparseRow row) const {
  if (pivot_of_col_.empty()) return row;
  // Eliminating the leading term can only move the leading column rightward,
  // so this terminates after at most cols_ steps; a row reduces to empty iff
  // it lies in the span of the inserted rows.
  while (!row.empty()) {
    int p = pivot_of_col_[row.front().first];
    if (p < 0) break;
    row = row_axpy(row, -row.front().second, pivots_[p].second);
  }
  return row;
}

}  // namespace jinv
