// Internal sparse exact elimination: fraction-free Bareiss echelon forms for
// rank/kernel, and an incremental rational row reducer for quotient
// bookkeeping. Not installed.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "covhom/matrix.hpp"
#include "covhom/rational.hpp"

namespace covhom::detail {

// Sparse vector over Z or Q: (index, value) pairs, sorted by index, no zeros.
using IntRow = std::vector<std::pair<int, mpz_class>>;
using QVec = std::vector<std::pair<int, Rational>>;

inline void sort_and_assert(IntRow& r) {
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

// Echelon form produced by fraction-free elimination. Rows are kept in
// elimination order; row i has its leading nonzero at pivot_col[i], and all
// later rows are zero in the columns pivoted before them.
struct Echelon {
  int cols = 0;
  std::vector<IntRow> rows;
  std::vector<int> pivot_col;

  int rank() const { return static_cast<int>(rows.size()); }
  std::vector<char> pivot_mask() const {
    std::vector<char> mask(cols, 0);
    for (int c : pivot_col) mask[c] = 1;
    return mask;
  }
};

// Bareiss fraction-free elimination of sparse integer rows, pivoting anywhere
// in the remaining submatrix (sparsity-guided full pivoting). Entries stay
// integral; growth is bounded by minors.
Echelon eliminate_int(std::vector<IntRow> rows, int cols);

// Clears denominators row by row (row scaling preserves rank and kernel).
std::vector<IntRow> to_int_rows(const RationalMatrix& m);

// Rank of a matrix given as sparse rational rows.
int rank_of_rows(std::vector<QVec> rows, int cols);

// An RREF-maintained row space over Q supporting reduce-modulo queries.
// Rows are normalized (pivot coefficient 1) and mutually reduced, so the
// coefficient of a vector against row i is just its value at pivot i.
class RowReducer {
 public:
  explicit RowReducer(int dim) : dim_(dim), pivot_row_(dim, -1) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int i) const { return pivot_row_[i] >= 0; }
  const std::vector<QVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces v modulo the row space (eliminates every pivot coordinate).
  QVec reduce(const QVec& v) const;

  // reduce(), also reporting the coefficient used against each stored row.
  QVec reduce_with_coeffs(const QVec& v, std::vector<std::pair<int, Rational>>* coeffs) const;

  // Reduces v and inserts the remainder if nonzero. Returns true if the rank
  // grew. Keeps the stored rows fully inter-reduced.
  bool insert(const QVec& v);

 private:
  int dim_;
  std::vector<QVec> rows_;
  std::vector<int> pivots_;     // pivot coordinate per stored row
  std::vector<int> pivot_row_;  // coordinate -> row index or -1
};

// Dense-free helpers for sparse rational vectors.
QVec axpy(const QVec& x, const Rational& a, const QVec& y);  // x + a*y
bool is_zero(const QVec& v);

}  // namespace covhom::detail
