#include "covhom/matrix.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

#include "elimination.hpp"

namespace covhom {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative shape");
  e_.assign(static_cast<size_t>(rows) * cols, Rational());
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) t.at(c, r) = at(r, c);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

void RationalMatrix::set_block(int r0, int c0, const RationalMatrix& block) {
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
    throw std::invalid_argument("RationalMatrix::set_block: block out of range");
  for (int r = 0; r < block.rows(); ++r)
    for (int c = 0; c < block.cols(); ++c)
      if (!block.at(r, c).is_zero()) at(r0 + r, c0 + c) = block.at(r, c);
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalMatrix p(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) p.at(i, j) += aik * bkj;
      }
    }
  return p;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("RationalMatrix: shape mismatch in sum");
  RationalMatrix s(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) s.at(r, c) = a.at(r, c) + b.at(r, c);
  return s;
}

RationalMatrix operator-(const RationalMatrix& a) { return a.scaled(Rational(-1)); }

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) m.at(r, c) = at(r, c) * s;
  return m;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << "[";
  for (int r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
  }
  return os << "]";
}

namespace detail {

std::vector<IntRow> to_int_rows(const RationalMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    mpz_class lcm_den = 1;
    for (int c = 0; c < m.cols(); ++c) {
      const Rational& q = m.at(r, c);
      if (!q.is_zero()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.den().get_mpz_t());
    }
    IntRow row;
    for (int c = 0; c < m.cols(); ++c) {
      const Rational& q = m.at(r, c);
      if (q.is_zero()) continue;
      mpz_class v = q.num() * (lcm_den / q.den());
      row.emplace_back(c, std::move(v));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

const mpz_class* row_value(const IntRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& p, int c) { return p.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// target := (pivot_val * target - target[pivot_col] * pivot_row) / divisor
IntRow combine(const IntRow& target, const IntRow& pivot_row, const mpz_class& pivot_val,
               const mpz_class& target_at_pivot, const mpz_class& divisor) {
  IntRow out;
  out.reserve(target.size() + pivot_row.size());
  size_t i = 0, j = 0;
  mpz_class v;
  while (i < target.size() || j < pivot_row.size()) {
    int ci = i < target.size() ? target[i].first : INT32_MAX;
    int cj = j < pivot_row.size() ? pivot_row[j].first : INT32_MAX;
    if (ci < cj) {
      v = pivot_val * target[i].second;
      ++i;
    } else if (cj < ci) {
      v = -target_at_pivot * pivot_row[j].second;
      ++j;
    } else {
      v = pivot_val * target[i].second - target_at_pivot * pivot_row[j].second;
      ++i;
      ++j;
    }
    if (v != 0) {
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
      out.emplace_back(ci < cj ? ci : cj, std::move(q));
    }
  }
  return out;
}

}  // namespace

Echelon eliminate_int(std::vector<IntRow> rows, int cols) {
  Echelon ech;
  ech.cols = cols;
  mpz_class prev_pivot = 1;

  std::erase_if(rows, [](const IntRow& r) { return r.empty(); });

  while (!rows.empty()) {
    // Sparsity-guided full pivoting: shortest row, then the entry in it whose
    // column is least populated among the active rows.
    std::vector<int> col_count(cols, 0);
    for (const auto& r : rows)
      for (const auto& [c, v] : r) ++col_count[c];

    size_t best_row = 0;
    for (size_t i = 1; i < rows.size(); ++i)
      if (rows[i].size() < rows[best_row].size()) best_row = i;

    int pivot_col = rows[best_row][0].first;
    for (const auto& [c, v] : rows[best_row])
      if (col_count[c] < col_count[pivot_col]) pivot_col = c;

    IntRow pivot_row = std::move(rows[best_row]);
    rows.erase(rows.begin() + static_cast<long>(best_row));
    const mpz_class pivot_val = *row_value(pivot_row, pivot_col);

    std::vector<IntRow> next;
    next.reserve(rows.size());
    for (auto& r : rows) {
      const mpz_class* tv = row_value(r, pivot_col);
      IntRow updated = tv ? combine(r, pivot_row, pivot_val, *tv, prev_pivot)
                          : combine(r, pivot_row, pivot_val, mpz_class(0), prev_pivot);
      if (!updated.empty()) next.push_back(std::move(updated));
    }
    rows = std::move(next);
    prev_pivot = pivot_val;

    ech.rows.push_back(std::move(pivot_row));
    ech.pivot_col.push_back(pivot_col);
  }
  return ech;
}

int rank_of_rows(std::vector<QVec> qrows, int cols) {
  std::vector<IntRow> rows;
  rows.reserve(qrows.size());
  for (const auto& qr : qrows) {
    if (qr.empty()) continue;
    mpz_class lcm_den = 1;
    for (const auto& [c, q] : qr)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.den().get_mpz_t());
    IntRow row;
    row.reserve(qr.size());
    for (const auto& [c, q] : qr) row.emplace_back(c, mpz_class(q.num() * (lcm_den / q.den())));
    rows.push_back(std::move(row));
  }
  return eliminate_int(std::move(rows), cols).rank();
}

QVec axpy(const QVec& x, const Rational& a, const QVec& y) {
  QVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int ci = i < x.size() ? x[i].first : INT32_MAX;
    int cj = j < y.size() ? y[j].first : INT32_MAX;
    if (ci < cj) {
      out.push_back(x[i++]);
    } else if (cj < ci) {
      Rational v = a * y[j++].second;
      if (!v.is_zero()) out.emplace_back(cj, std::move(v));
    } else {
      Rational v = x[i++].second + a * y[j++].second;
      if (!v.is_zero()) out.emplace_back(ci, std::move(v));
    }
  }
  return out;
}

bool is_zero(const QVec& v) { return v.empty(); }

QVec RowReducer::reduce(const QVec& v) const { return reduce_with_coeffs(v, nullptr); }

QVec RowReducer::reduce_with_coeffs(const QVec& v,
                                    std::vector<std::pair<int, Rational>>* coeffs) const {
  // Stored rows are nonzero only at their own pivot (coefficient 1) and at
  // non-pivot coordinates, so eliminations never introduce new pivot
  // coordinates: the pivots present in v are the only ones ever to clear.
  std::vector<int> todo;
  for (const auto& [c, val] : v)
    if (pivot_row_[c] >= 0) todo.push_back(c);

  QVec cur = v;
  for (int c : todo) {
    auto it = std::lower_bound(cur.begin(), cur.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it == cur.end() || it->first != c) continue;
    const int row = pivot_row_[c];
    Rational coeff = it->second;  // stored rows have pivot coefficient 1
    if (coeffs) coeffs->emplace_back(row, coeff);
    cur = axpy(cur, -coeff, rows_[row]);
  }
  return cur;
}

bool RowReducer::insert(const QVec& v) {
  QVec rem = reduce(v);
  if (rem.empty()) return false;
  // Normalize so the leading coefficient is 1.
  const int pivot = rem[0].first;
  Rational lead = rem[0].second;
  for (auto& [c, val] : rem) val /= lead;
  // Inter-reduce: clear this pivot from existing rows.
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational* at = nullptr;
    for (const auto& [c, val] : rows_[i])
      if (c == pivot) {
        at = &val;
        break;
      }
    if (at) rows_[i] = axpy(rows_[i], -*at, rem);
  }
  pivot_row_[pivot] = static_cast<int>(rows_.size());
  pivots_.push_back(pivot);
  rows_.push_back(std::move(rem));
  return true;
}

}  // namespace detail

int rank(const RationalMatrix& m) {
  return detail::eliminate_int(detail::to_int_rows(m), m.cols()).rank();
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const int n = m.cols();
  detail::Echelon ech = detail::eliminate_int(detail::to_int_rows(m), n);
  std::vector<char> pivot = ech.pivot_mask();

  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!pivot[c]) free_cols.push_back(c);

  RationalMatrix basis(n, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    std::map<int, Rational> x;
    x[free_cols[k]] = 1;
    // Pivot rows in reverse elimination order: each references only its own
    // pivot, later pivots and free columns, all already solved.
    for (int i = ech.rank() - 1; i >= 0; --i) {
      const int pc = ech.pivot_col[i];
      Rational acc = 0;
      Rational diag;
      for (const auto& [c, v] : ech.rows[i]) {
        if (c == pc) {
          diag = Rational(v, mpz_class(1));
          continue;
        }
        auto it = x.find(c);
        if (it != x.end()) acc += Rational(v, mpz_class(1)) * it->second;
      }
      if (!acc.is_zero()) x[pc] = -acc / diag;
    }
    for (const auto& [c, v] : x)
      if (!v.is_zero()) basis.at(c, static_cast<int>(k)) = v;
  }
  return basis;
}

}  // namespace covhom
