// Dense exact-rational matrices and the rank/kernel kernel of the engine.
#pragma once

#include <iosfwd>
#include <vector>

#include "covhom/rational.hpp"

namespace covhom {

/// Dense row-major matrix over Q. Shapes may be zero in either direction;
/// an m x 0 or 0 x n matrix is a legal (empty) linear map.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  static RationalMatrix zero(int rows, int cols) { return RationalMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  RationalMatrix transposed() const;
  bool is_zero() const;

  /// Writes `block` into this matrix with its (0,0) entry at (r0, c0).
  void set_block(int r0, int c0, const RationalMatrix& block);

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a);
  RationalMatrix scaled(const Rational& s) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Rank over Q, via fraction-free (Bareiss) elimination with full pivoting.
int rank(const RationalMatrix& m);

/// Basis of the right kernel: a cols(m) x (cols(m) - rank(m)) matrix whose
/// columns span { x : m x = 0 }. m * kernel_basis(m) is exactly zero.
RationalMatrix kernel_basis(const RationalMatrix& m);

}  // namespace covhom
