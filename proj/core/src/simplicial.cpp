#include "covhom/simplicial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace covhom {

const std::vector<Simplex> SimplicialComplex::kNone = {};

namespace {

void validate_simplex(const Simplex& s, int vertex_count) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= vertex_count)
      throw std::invalid_argument("simplex " + simplex_str(s) + ": vertex index out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("simplex " + simplex_str(s) +
                                  ": vertices must be strictly increasing");
  }
}

}  // namespace

std::string simplex_str(const Simplex& s) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ")";
  return os.str();
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Simplex> simplices)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("SimplicialComplex: negative vertex count");
  std::set<Simplex> seen;
  int max_dim = -1;
  for (const auto& s : simplices) {
    if (s.empty()) throw std::invalid_argument("SimplicialComplex: empty simplex");
    validate_simplex(s, vertex_count);
    if (!seen.insert(s).second)
      throw std::invalid_argument("SimplicialComplex: duplicate simplex " + simplex_str(s));
    max_dim = std::max(max_dim, static_cast<int>(s.size()) - 1);
  }
  by_dim_.assign(max_dim + 1, {});
  for (auto& s : seen) by_dim_[s.size() - 1].push_back(s);
  // std::set iteration is lex within equal sizes already, but sort per
  // dimension to make the order explicit.
  for (auto& lst : by_dim_) std::sort(lst.begin(), lst.end());

  // Face-closure: every facet of every simplex must be present.
  for (const auto& s : seen) {
    if (s.size() == 1) continue;
    Simplex face;
    face.reserve(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      if (!seen.count(face))
        throw std::invalid_argument("SimplicialComplex: not face-closed, missing " +
                                    simplex_str(face) + " (face of " + simplex_str(s) + ")");
    }
  }

  global_offset_.assign(by_dim_.size() + 1, 0);
  for (size_t d = 0; d < by_dim_.size(); ++d) {
    global_offset_[d + 1] = global_offset_[d] + static_cast<int>(by_dim_[d].size());
    for (size_t i = 0; i < by_dim_[d].size(); ++i)
      index_[by_dim_[d][i]] = static_cast<int>(i);
  }
}

int SimplicialComplex::size() const {
  return global_offset_.empty() ? 0 : global_offset_.back();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return kNone;
  return by_dim_[d];
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_.count(s) > 0; }

int SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

int SimplicialComplex::global_index(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return -1;
  return global_offset_[s.size() - 1] + it->second;
}

const Simplex& SimplicialComplex::simplex_at(int gi) const {
  for (size_t d = 0; d < by_dim_.size(); ++d)
    if (gi < global_offset_[d + 1]) return by_dim_[d][gi - global_offset_[d]];
  throw std::out_of_range("SimplicialComplex: global index out of range");
}

long SimplicialComplex::euler() const {
  long e = 0;
  for (size_t d = 0; d < by_dim_.size(); ++d)
    e += (d % 2 == 0) ? static_cast<long>(by_dim_[d].size()) : -static_cast<long>(by_dim_[d].size());
  return e;
}

SimplicialComplex closure(int vertex_count, const std::vector<Simplex>& generators) {
  std::set<Simplex> out;
  std::vector<Simplex> stack;
  for (const auto& g : generators) {
    if (g.empty()) throw std::invalid_argument("closure: empty generator");
    validate_simplex(g, vertex_count);
    stack.push_back(g);
  }
  while (!stack.empty()) {
    Simplex s = std::move(stack.back());
    stack.pop_back();
    if (!out.insert(s).second || s.size() == 1) continue;
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      if (!out.count(face)) stack.push_back(std::move(face));
    }
  }
  return SimplicialComplex(vertex_count, {out.begin(), out.end()});
}

// --- Subcomplex ---------------------------------------------------------------

Subcomplex::Subcomplex(std::shared_ptr<const SimplicialComplex> parent,
                       std::vector<Simplex> members)
    : parent_(std::move(parent)) {
  if (!parent_) throw std::invalid_argument("Subcomplex: null parent");
  member_.assign(parent_->size(), 0);
  for (const auto& s : members) {
    const int gi = parent_->global_index(s);
    if (gi < 0)
      throw std::invalid_argument("Subcomplex: " + simplex_str(s) + " is not in the parent");
    if (!member_[gi]) {
      member_[gi] = 1;
      ++count_;
    }
  }
  // Face-closedness inside the parent.
  for (int gi = 0; gi < parent_->size(); ++gi) {
    if (!member_[gi]) continue;
    const Simplex& s = parent_->simplex_at(gi);
    if (s.size() == 1) continue;
    Simplex face;
    for (size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      if (!member_[parent_->global_index(face)])
        throw std::invalid_argument("Subcomplex: not face-closed, missing " + simplex_str(face));
    }
  }
}

Subcomplex Subcomplex::empty(std::shared_ptr<const SimplicialComplex> parent) {
  return Subcomplex(std::move(parent), {});
}

Subcomplex Subcomplex::whole(std::shared_ptr<const SimplicialComplex> parent) {
  Subcomplex s(parent, {});
  s.member_.assign(parent->size(), 1);
  s.count_ = parent->size();
  return s;
}

Subcomplex Subcomplex::closure_in(std::shared_ptr<const SimplicialComplex> parent,
                                  const std::vector<Simplex>& generators) {
  SimplicialComplex closed = closure(parent->vertex_count(), generators);
  std::vector<Simplex> members;
  for (int d = 0; d <= closed.dim(); ++d)
    for (const auto& s : closed.simplices(d)) members.push_back(s);
  return Subcomplex(std::move(parent), std::move(members));
}

bool Subcomplex::contains(const Simplex& s) const {
  const int gi = parent_->global_index(s);
  return gi >= 0 && member_[gi];
}

SimplicialComplex Subcomplex::as_complex() const {
  return SimplicialComplex(parent_->vertex_count(), members());
}

std::vector<Simplex> Subcomplex::members() const {
  std::vector<Simplex> out;
  out.reserve(count_);
  for (int gi = 0; gi < parent_->size(); ++gi)
    if (member_[gi]) out.push_back(parent_->simplex_at(gi));
  return out;
}

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b) {
  if (a.parent_ != b.parent_ && !(*a.parent_ == *b.parent_))
    throw std::invalid_argument("intersect: subcomplexes of different parents");
  Subcomplex out = a;
  out.count_ = 0;
  for (size_t i = 0; i < out.member_.size(); ++i) {
    out.member_[i] = a.member_[i] && b.member_[i];
    out.count_ += out.member_[i];
  }
  return out;
}

Subcomplex unite(const Subcomplex& a, const Subcomplex& b) {
  if (a.parent_ != b.parent_ && !(*a.parent_ == *b.parent_))
    throw std::invalid_argument("unite: subcomplexes of different parents");
  Subcomplex out = a;
  out.count_ = 0;
  for (size_t i = 0; i < out.member_.size(); ++i) {
    out.member_[i] = a.member_[i] || b.member_[i];
    out.count_ += out.member_[i];
  }
  return out;
}

bool Subcomplex::subset_of(const Subcomplex& other) const {
  for (size_t i = 0; i < member_.size(); ++i)
    if (member_[i] && !other.member_[i]) return false;
  return true;
}

// --- Barycentric subdivision --------------------------------------------------

int Subdivision::vertex_of(const Simplex& parent_simplex) const {
  const int gi = parent->global_index(parent_simplex);
  if (gi < 0) throw std::invalid_argument("Subdivision: not a parent simplex");
  return gi;
}

Subdivision barycentric_subdivision(const SimplicialComplex& k) {
  auto parent = std::make_shared<SimplicialComplex>(k);
  const int n = k.size();

  // Strict-superset lists: for each simplex, every simplex properly containing
  // it. Built by enumerating proper nonempty subsets of each simplex.
  std::vector<std::vector<int>> supersets(n);
  for (int gi = 0; gi < n; ++gi) {
    const Simplex& s = k.simplex_at(gi);
    const size_t sz = s.size();
    if (sz == 1) continue;
    for (unsigned mask = 1; mask + 1 < (1u << sz); ++mask) {
      Simplex sub;
      for (size_t i = 0; i < sz; ++i)
        if (mask & (1u << i)) sub.push_back(s[i]);
      supersets[k.global_index(sub)].push_back(gi);
    }
  }

  // Chains in the face order, as vertex tuples of the subdivision. Inclusion
  // implies a smaller global index, so chains are automatically increasing.
  std::vector<Simplex> chains;
  Simplex cur;
  auto extend = [&](auto&& self, int top) -> void {
    cur.push_back(top);
    chains.push_back(cur);
    for (int up : supersets[top]) self(self, up);
    cur.pop_back();
  };
  for (int gi = 0; gi < n; ++gi) extend(extend, gi);

  Subdivision sd;
  sd.parent = parent;
  sd.complex = SimplicialComplex(n, std::move(chains));
  sd.vertex_to_parent.reserve(n);
  for (int gi = 0; gi < n; ++gi) sd.vertex_to_parent.push_back(k.simplex_at(gi));
  return sd;
}

std::vector<Simplex> full_subcomplex_members(const SimplicialComplex& sd,
                                             const std::vector<char>& vertex_allowed) {
  if (static_cast<int>(vertex_allowed.size()) != sd.vertex_count())
    throw std::invalid_argument("full_subcomplex_members: mask size mismatch");
  std::vector<Simplex> out;
  for (int d = 0; d <= sd.dim(); ++d) {
    for (const auto& s : sd.simplices(d)) {
      bool ok = true;
      for (int v : s)
        if (!vertex_allowed[v]) {
          ok = false;
          break;
        }
      if (ok) out.push_back(s);
    }
  }
  return out;
}

OpenModel open_model(std::shared_ptr<const SimplicialComplex> k,
                     const std::vector<Subcomplex>& avoided) {
  for (const auto& a : avoided)
    if (&a.parent() != k.get() && !(a.parent() == *k))
      throw std::invalid_argument("open_model: avoided subcomplex has a different parent");

  auto sd = std::make_shared<Subdivision>(barycentric_subdivision(*k));
  std::vector<char> allowed(k->size(), 1);
  for (int gi = 0; gi < k->size(); ++gi)
    for (const auto& a : avoided)
      if (a.contains_global(gi)) {
        allowed[gi] = 0;
        break;
      }
  auto sd_complex = std::make_shared<const SimplicialComplex>(sd->complex);
  Subcomplex carrier(sd_complex, full_subcomplex_members(sd->complex, allowed));
  return OpenModel{std::move(sd), std::move(carrier)};
}

// --- Cochain complexes ---------------------------------------------------------

CochainComplex cochain_complex(const SimplicialComplex& k) {
  const int top = k.dim();
  if (top < 0) return CochainComplex();
  std::vector<int> dims;
  for (int d = 0; d <= top; ++d) dims.push_back(static_cast<int>(k.simplices(d).size()));
  std::vector<RationalMatrix> diffs;
  for (int d = 0; d < top; ++d) {
    const auto& rows = k.simplices(d + 1);
    RationalMatrix m(static_cast<int>(rows.size()), dims[d]);
    for (size_t r = 0; r < rows.size(); ++r) {
      const Simplex& tau = rows[r];
      Simplex face;
      for (size_t drop = 0; drop < tau.size(); ++drop) {
        face.clear();
        for (size_t i = 0; i < tau.size(); ++i)
          if (i != drop) face.push_back(tau[i]);
        m.at(static_cast<int>(r), k.index_of(face)) = (drop % 2 == 0) ? 1 : -1;
      }
    }
    diffs.push_back(std::move(m));
  }
  return CochainComplex(0, std::move(dims), std::move(diffs));
}

RationalMatrix cochain_projection(const SimplicialComplex& from, const SimplicialComplex& to,
                                  int d) {
  const auto& cols = from.simplices(d);
  const auto& rows = to.simplices(d);
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    const int c = from.index_of(rows[r]);
    if (c < 0)
      throw std::invalid_argument("cochain_projection: " + simplex_str(rows[r]) +
                                  " is not in the source complex");
    m.at(static_cast<int>(r), c) = 1;
  }
  return m;
}

bool complex_subset(const SimplicialComplex& inner, const SimplicialComplex& outer) {
  for (int d = 0; d <= inner.dim(); ++d)
    for (const auto& s : inner.simplices(d))
      if (!outer.contains(s)) return false;
  return true;
}

ChainMap restriction_map(const std::shared_ptr<const SimplicialComplex>& k,
                         const Subcomplex& sub) {
  if (&sub.parent() != k.get() && !(sub.parent() == *k))
    throw std::invalid_argument("restriction_map: subcomplex of a different parent");
  SimplicialComplex target = sub.as_complex();
  CochainComplex src = cochain_complex(*k);
  CochainComplex dst = cochain_complex(target);
  std::map<int, RationalMatrix> comps;
  for (int d = 0; d <= target.dim(); ++d) comps[d] = cochain_projection(*k, target, d);
  return ChainMap(std::move(src), std::move(dst), std::move(comps));
}

CochainComplex relative_cochain_complex(const SimplicialComplex& k, const Subcomplex& sub) {
  if (&sub.parent() != &k && !(sub.parent() == k))
    throw std::invalid_argument("relative_cochain_complex: subcomplex of a different parent");
  const int top = k.dim();
  if (top < 0) return CochainComplex();

  // Basis in degree d: the d-simplices of k not in sub. The coboundary of
  // such a cochain is supported off sub (faces of sub-simplices lie in sub),
  // so the relative differential is just the corresponding submatrix.
  std::vector<std::vector<int>> keep(top + 1);
  std::vector<int> dims;
  for (int d = 0; d <= top; ++d) {
    const auto& lst = k.simplices(d);
    for (size_t i = 0; i < lst.size(); ++i)
      if (!sub.contains(lst[i])) keep[d].push_back(static_cast<int>(i));
    dims.push_back(static_cast<int>(keep[d].size()));
  }
  const CochainComplex ambient = cochain_complex(k);
  std::vector<RationalMatrix> diffs;
  for (int d = 0; d < top; ++d) {
    RationalMatrix full = ambient.differential(d);
    RationalMatrix m(dims[d + 1], dims[d]);
    for (int r = 0; r < dims[d + 1]; ++r)
      for (int c = 0; c < dims[d]; ++c) m.at(r, c) = full.at(keep[d + 1][r], keep[d][c]);
    diffs.push_back(std::move(m));
  }
  return CochainComplex(0, std::move(dims), std::move(diffs));
}

}  // namespace covhom
