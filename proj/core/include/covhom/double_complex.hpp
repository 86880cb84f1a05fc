#pragma once

#include <map>
#include <vector>

#include "covhom/complex.hpp"

namespace covhom {

/// A bounded double complex presented as columns p = 0..P (each a vertical
/// cochain complex in q) and horizontal chain maps column p -> column p+1.
/// Construction checks that every horizontal map is a chain map and that
/// horizontal ∘ horizontal = 0 exactly.
class DoubleComplex {
 public:
  DoubleComplex(std::vector<CochainComplex> columns,
                std::vector<std::map<int, RationalMatrix>> horizontal);

  int column_count() const { return static_cast<int>(columns_.size()); }
  const CochainComplex& column(int p) const { return columns_[p]; }
  const ChainMap& horizontal(int p) const { return horizontal_[p]; }

  /// Rows <-> columns, with verticals and horizontals exchanged. Total
  /// cohomology is invariant under this (up to the fixed sign convention).
  DoubleComplex transposed() const;

 private:
  std::vector<CochainComplex> columns_;
  std::vector<ChainMap> horizontal_;
};

/// Totalization: degree n is the direct sum over p + q = n of column p in
/// degree q; the differential on the (p, q) summand is
/// horizontal + (-1)^p vertical.
CochainComplex totalize(const DoubleComplex& d);

}  // namespace covhom
