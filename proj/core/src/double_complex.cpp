#include "covhom/double_complex.hpp"

#include <stdexcept>

namespace covhom {

DoubleComplex::DoubleComplex(std::vector<CochainComplex> columns,
                             std::vector<std::map<int, RationalMatrix>> horizontal)
    : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("DoubleComplex: no columns");
  if (horizontal.size() + 1 != columns_.size())
    throw std::invalid_argument("DoubleComplex: need one horizontal map per adjacent column pair");
  horizontal_.reserve(horizontal.size());
  for (size_t p = 0; p < horizontal.size(); ++p) {
    // ChainMap construction checks commutation with the verticals.
    horizontal_.emplace_back(columns_[p], columns_[p + 1], std::move(horizontal[p]));
  }
  // horizontal ∘ horizontal = 0, degreewise.
  for (size_t p = 0; p + 1 < horizontal_.size(); ++p) {
    const CochainComplex& a = columns_[p];
    for (int q = a.lo(); q <= a.hi(); ++q) {
      if (!(horizontal_[p + 1].component(q) * horizontal_[p].component(q)).is_zero())
        throw std::invalid_argument("DoubleComplex: horizontal∘horizontal != 0 at column " +
                                    std::to_string(p) + ", degree " + std::to_string(q));
    }
  }
}

DoubleComplex DoubleComplex::transposed() const {
  // New column q collects the degree-q pieces of all old columns, with the
  // old horizontal components as its differential; the old verticals become
  // the new horizontal components.
  int qlo = 0, qhi = -1;
  bool any = false;
  for (const auto& col : columns_) {
    if (col.is_zero_complex()) continue;
    if (!any) {
      qlo = col.lo();
      qhi = col.hi();
      any = true;
    } else {
      qlo = std::min(qlo, col.lo());
      qhi = std::max(qhi, col.hi());
    }
  }
  if (!any) throw std::invalid_argument("DoubleComplex::transposed: all columns zero");

  const int pcount = column_count();
  std::vector<CochainComplex> new_cols;
  std::vector<std::map<int, RationalMatrix>> new_h;
  for (int q = qlo; q <= qhi; ++q) {
    std::vector<int> dims;
    std::vector<RationalMatrix> diffs;
    for (int p = 0; p < pcount; ++p) dims.push_back(columns_[p].dim_at(q));
    for (int p = 0; p + 1 < pcount; ++p) diffs.push_back(horizontal_[p].component(q));
    new_cols.emplace_back(0, std::move(dims), std::move(diffs));
  }
  for (int q = qlo; q < qhi; ++q) {
    std::map<int, RationalMatrix> comps;
    for (int p = 0; p < pcount; ++p) {
      RationalMatrix v = columns_[p].differential(q);
      if (v.rows() > 0 && v.cols() > 0 && !v.is_zero()) comps[p] = std::move(v);
    }
    new_h.push_back(std::move(comps));
  }
  return DoubleComplex(std::move(new_cols), std::move(new_h));
}

CochainComplex totalize(const DoubleComplex& dc) {
  const int pcount = dc.column_count();
  int nlo = 0, nhi = -1;
  bool any = false;
  for (int p = 0; p < pcount; ++p) {
    const CochainComplex& col = dc.column(p);
    if (col.is_zero_complex()) continue;
    if (!any) {
      nlo = col.lo() + p;
      nhi = col.hi() + p;
      any = true;
    } else {
      nlo = std::min(nlo, col.lo() + p);
      nhi = std::max(nhi, col.hi() + p);
    }
  }
  if (!any) return CochainComplex();

  // Offsets of the (p, q = n - p) summand inside total degree n.
  auto dims_at = [&](int n) {
    std::vector<int> offs(pcount + 1, 0);
    for (int p = 0; p < pcount; ++p) offs[p + 1] = offs[p] + dc.column(p).dim_at(n - p);
    return offs;
  };

  std::vector<int> dims;
  for (int n = nlo; n <= nhi; ++n) dims.push_back(dims_at(n)[pcount]);

  std::vector<RationalMatrix> diffs;
  for (int n = nlo; n < nhi; ++n) {
    const auto src = dims_at(n);
    const auto dst = dims_at(n + 1);
    RationalMatrix d(dst[pcount], src[pcount]);
    for (int p = 0; p < pcount; ++p) {
      const int q = n - p;
      if (dc.column(p).dim_at(q) == 0) continue;
      // Vertical (p, q) -> (p, q+1) with sign (-1)^p.
      RationalMatrix v = dc.column(p).differential(q);
      if (p % 2 != 0) v = -v;
      d.set_block(dst[p], src[p], v);
      // Horizontal (p, q) -> (p+1, q).
      if (p + 1 < pcount) d.set_block(dst[p + 1], src[p], dc.horizontal(p).component(q));
    }
    diffs.push_back(std::move(d));
  }
  return CochainComplex(nlo, std::move(dims), std::move(diffs));
}

}  // namespace covhom
