// Bounded cochain complexes of finite-dimensional Q-vector spaces.
#pragma once

#include <map>
#include <memory>
#include <vector>

#include "covhom/betti.hpp"
#include "covhom/matrix.hpp"

namespace covhom {

/// A bounded cochain complex: dimensions dims[lo..hi] and differentials
/// d_m : degree m -> degree m+1. Construction checks shapes and d∘d = 0
/// exactly. Immutable and cheap to copy (shared storage).
class CochainComplex {
 public:
  /// The zero complex.
  CochainComplex();

  /// dims[i] is the dimension in degree lo + i; differentials[i] maps degree
  /// lo + i to lo + i + 1 and must have shape dims[i+1] x dims[i]. The last
  /// differential (out of degree hi) is implicitly zero and not passed.
  CochainComplex(int lo, std::vector<int> dims, std::vector<RationalMatrix> differentials);

  int lo() const;
  int hi() const;                 // lo() - 1 when the complex is zero
  bool is_zero_complex() const;   // no degrees with nonzero dimension
  int dim_at(int m) const;        // 0 outside [lo, hi]
  long total_dim() const;
  long euler() const;             // alternating sum of dims

  /// The differential out of degree m. Returns a correctly-shaped zero matrix
  /// outside the stored range (including m == hi).
  RationalMatrix differential(int m) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// dim H^m = dim ker d_m - rank d_{m-1}, computed exactly for every degree.
BettiTable cohomology(const CochainComplex& c);

/// Degree m of the result is degree m + k of the input; differentials pick up
/// the Koszul sign (-1)^k.
CochainComplex shift(const CochainComplex& c, int k);

/// A chain map between two complexes; commutes with differentials exactly
/// (checked at construction). Components not given are zero.
class ChainMap {
 public:
  ChainMap(CochainComplex source, CochainComplex target,
           std::map<int, RationalMatrix> components);

  const CochainComplex& source() const { return *src_; }
  const CochainComplex& target() const { return *tgt_; }

  /// Component in degree m (zero matrix of the right shape when absent).
  RationalMatrix component(int m) const;

 private:
  std::shared_ptr<const CochainComplex> src_, tgt_;
  std::map<int, RationalMatrix> comp_;
};

ChainMap identity_map(const CochainComplex& c);
ChainMap zero_map(CochainComplex source, CochainComplex target);

/// Standard mapping cone: cone(f)^m = X^{m+1} ⊕ Y^m with differential
/// (x, y) -> (-d_X x, f x + d_Y y). Acyclic iff f is a quasi-isomorphism.
CochainComplex cone(const ChainMap& f);

/// True iff cone(f) has zero cohomology in every degree.
bool is_quasi_iso(const ChainMap& f);

/// Layout of a direct sum: offsets[i] maps degree -> coordinate offset of
/// summand i inside the sum at that degree.
struct SumLayout {
  std::vector<std::map<int, int>> offsets;
};

/// Degreewise direct sum with block-diagonal differentials.
CochainComplex direct_sum(const std::vector<CochainComplex>& parts, SumLayout* layout = nullptr);

}  // namespace covhom
