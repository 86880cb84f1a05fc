#include "covhom/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "elimination.hpp"

namespace covhom {

// --- BettiTable -------------------------------------------------------------

void BettiTable::set(int m, long value) {
  if (value < 0) throw std::invalid_argument("BettiTable: negative dimension");
  if (value == 0)
    dims_.erase(m);
  else
    dims_[m] = value;
}

BettiTable BettiTable::shifted(int k) const {
  BettiTable t;
  for (const auto& [m, v] : dims_) t.set(m - k, v);
  return t;
}

long BettiTable::euler() const {
  long e = 0;
  for (const auto& [m, v] : dims_) e += (m % 2 == 0) ? v : -v;
  return e;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [m, v] : dims_) {
    if (!first) os << ", ";
    os << m << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

// --- CochainComplex ---------------------------------------------------------

struct CochainComplex::Data {
  int lo = 0;
  std::vector<int> dims;
  std::vector<RationalMatrix> d;  // d[i]: degree lo+i -> lo+i+1; size = max(dims.size()-1, 0)
};

CochainComplex::CochainComplex() : d_(std::make_shared<Data>()) {}

CochainComplex::CochainComplex(int lo, std::vector<int> dims,
                               std::vector<RationalMatrix> differentials) {
  // Trim zero dimensions at both ends so degree ranges are canonical.
  while (!dims.empty() && dims.front() == 0) {
    dims.erase(dims.begin());
    if (!differentials.empty()) differentials.erase(differentials.begin());
    ++lo;
  }
  while (!dims.empty() && dims.back() == 0) {
    dims.pop_back();
    if (!differentials.empty()) differentials.pop_back();
  }
  auto data = std::make_shared<Data>();
  if (dims.empty()) {
    d_ = std::move(data);
    return;
  }
  const size_t n = dims.size();
  if (differentials.size() + 1 != n && !(n == 1 && differentials.empty()))
    throw std::invalid_argument("CochainComplex: need one differential per adjacent degree pair");
  for (size_t i = 0; i < n; ++i)
    if (dims[i] < 0) throw std::invalid_argument("CochainComplex: negative dimension");
  for (size_t i = 0; i + 1 < n; ++i) {
    if (differentials[i].rows() != dims[i + 1] || differentials[i].cols() != dims[i])
      throw std::invalid_argument("CochainComplex: differential shape mismatch at degree " +
                                  std::to_string(lo + static_cast<int>(i)));
  }
  for (size_t i = 0; i + 2 < n; ++i) {
    if (!(differentials[i + 1] * differentials[i]).is_zero())
      throw std::invalid_argument("CochainComplex: d∘d != 0 at degree " +
                                  std::to_string(lo + static_cast<int>(i)));
  }
  data->lo = lo;
  data->dims = std::move(dims);
  data->d = std::move(differentials);
  d_ = std::move(data);
}

int CochainComplex::lo() const { return d_->lo; }
int CochainComplex::hi() const { return d_->lo + static_cast<int>(d_->dims.size()) - 1; }
bool CochainComplex::is_zero_complex() const { return d_->dims.empty(); }

int CochainComplex::dim_at(int m) const {
  const int i = m - d_->lo;
  if (i < 0 || i >= static_cast<int>(d_->dims.size())) return 0;
  return d_->dims[i];
}

long CochainComplex::total_dim() const {
  long t = 0;
  for (int v : d_->dims) t += v;
  return t;
}

long CochainComplex::euler() const {
  long e = 0;
  for (size_t i = 0; i < d_->dims.size(); ++i) {
    const int m = d_->lo + static_cast<int>(i);
    e += (m % 2 == 0) ? d_->dims[i] : -d_->dims[i];
  }
  return e;
}

RationalMatrix CochainComplex::differential(int m) const {
  const int i = m - d_->lo;
  if (i >= 0 && i < static_cast<int>(d_->d.size())) return d_->d[i];
  return RationalMatrix(dim_at(m + 1), dim_at(m));
}

BettiTable cohomology(const CochainComplex& c) {
  BettiTable t;
  if (c.is_zero_complex()) return t;
  // rank of the differential out of each degree; rank below lo is 0.
  std::map<int, int> rk;
  for (int m = c.lo(); m <= c.hi(); ++m) rk[m] = rank(c.differential(m));
  for (int m = c.lo(); m <= c.hi(); ++m) {
    const int below = m > c.lo() ? rk[m - 1] : 0;
    t.set(m, c.dim_at(m) - rk[m] - below);
  }
  return t;
}

CochainComplex shift(const CochainComplex& c, int k) {
  if (c.is_zero_complex()) return c;
  std::vector<int> dims;
  std::vector<RationalMatrix> diffs;
  for (int m = c.lo(); m <= c.hi(); ++m) dims.push_back(c.dim_at(m));
  for (int m = c.lo(); m < c.hi(); ++m) {
    RationalMatrix d = c.differential(m);
    diffs.push_back(k % 2 == 0 ? d : -d);
  }
  return CochainComplex(c.lo() - k, std::move(dims), std::move(diffs));
}

// --- ChainMap ---------------------------------------------------------------

ChainMap::ChainMap(CochainComplex source, CochainComplex target,
                   std::map<int, RationalMatrix> components)
    : src_(std::make_shared<CochainComplex>(std::move(source))),
      tgt_(std::make_shared<CochainComplex>(std::move(target))),
      comp_(std::move(components)) {
  for (const auto& [m, f] : comp_) {
    if (f.rows() != tgt_->dim_at(m) || f.cols() != src_->dim_at(m))
      throw std::invalid_argument("ChainMap: component shape mismatch at degree " +
                                  std::to_string(m));
  }
  const int lo = std::min(src_->lo(), tgt_->lo());
  const int hi = std::max(src_->hi(), tgt_->hi());
  for (int m = lo; m < hi; ++m) {
    if (component(m + 1) * src_->differential(m) != tgt_->differential(m) * component(m))
      throw std::invalid_argument("ChainMap: does not commute with differentials at degree " +
                                  std::to_string(m));
  }
}

RationalMatrix ChainMap::component(int m) const {
  auto it = comp_.find(m);
  if (it != comp_.end()) return it->second;
  return RationalMatrix(tgt_->dim_at(m), src_->dim_at(m));
}

ChainMap identity_map(const CochainComplex& c) {
  std::map<int, RationalMatrix> comps;
  for (int m = c.lo(); m <= c.hi(); ++m)
    if (c.dim_at(m) > 0) comps[m] = RationalMatrix::identity(c.dim_at(m));
  return ChainMap(c, c, std::move(comps));
}

ChainMap zero_map(CochainComplex source, CochainComplex target) {
  return ChainMap(std::move(source), std::move(target), {});
}

CochainComplex cone(const ChainMap& f) {
  const CochainComplex& x = f.source();
  const CochainComplex& y = f.target();
  if (x.is_zero_complex() && y.is_zero_complex()) return CochainComplex();
  const int lo = std::min(x.lo() - 1, y.lo());
  const int hi = std::max(x.hi() - 1, y.hi());
  std::vector<int> dims;
  std::vector<RationalMatrix> diffs;
  for (int m = lo; m <= hi; ++m) dims.push_back(x.dim_at(m + 1) + y.dim_at(m));
  for (int m = lo; m < hi; ++m) {
    const int rx = x.dim_at(m + 2), ry = y.dim_at(m + 1);
    const int cx = x.dim_at(m + 1), cy = y.dim_at(m);
    RationalMatrix d(rx + ry, cx + cy);
    d.set_block(0, 0, -x.differential(m + 1));
    d.set_block(rx, 0, f.component(m + 1));
    d.set_block(rx, cx, y.differential(m));
    diffs.push_back(std::move(d));
  }
  return CochainComplex(lo, std::move(dims), std::move(diffs));
}

bool is_quasi_iso(const ChainMap& f) { return cohomology(cone(f)).empty(); }

CochainComplex direct_sum(const std::vector<CochainComplex>& parts, SumLayout* layout) {
  if (layout) layout->offsets.assign(parts.size(), {});
  bool any = false;
  int lo = 0, hi = -1;
  for (const auto& p : parts) {
    if (p.is_zero_complex()) continue;
    if (!any) {
      lo = p.lo();
      hi = p.hi();
      any = true;
    } else {
      lo = std::min(lo, p.lo());
      hi = std::max(hi, p.hi());
    }
  }
  if (!any) return CochainComplex();

  std::vector<int> dims(hi - lo + 1, 0);
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int m = lo; m <= hi; ++m) {
      const int d = parts[i].dim_at(m);
      if (layout && d > 0) layout->offsets[i][m] = dims[m - lo];
      dims[m - lo] += d;
    }
  }
  std::vector<RationalMatrix> diffs;
  for (int m = lo; m < hi; ++m) {
    RationalMatrix d(dims[m + 1 - lo], dims[m - lo]);
    int roff = 0, coff = 0;
    for (const auto& p : parts) {
      d.set_block(roff, coff, p.differential(m));
      roff += p.dim_at(m + 1);
      coff += p.dim_at(m);
    }
    diffs.push_back(std::move(d));
  }
  return CochainComplex(lo, std::move(dims), std::move(diffs));
}

}  // namespace covhom
