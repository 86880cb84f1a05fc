#include "covhom/space_pair.hpp"

#include <chrono>
#include <stdexcept>

namespace covhom {

namespace {

// Subsets of {0..r-1} of size m, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int r, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < r; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Sign of the Cech arrow J -> J ∪ {j}: (-1)^(position of j in sorted J ∪ {j}).
int cech_sign(const std::vector<int>& j_set, int j) {
  int pos = 0;
  for (int k : j_set)
    if (k < j) ++pos;
  return pos % 2 == 0 ? 1 : -1;
}

}  // namespace

SpacePairInstance::SpacePairInstance(std::string name_,
                                     std::shared_ptr<const SimplicialComplex> space_,
                                     std::vector<Subcomplex> closed_, std::string notes_)
    : name(std::move(name_)), space(std::move(space_)), closed(std::move(closed_)),
      notes(std::move(notes_)) {
  if (!space) throw std::invalid_argument("SpacePairInstance: null space");
  if (closed.empty()) throw std::invalid_argument("SpacePairInstance: needs at least one E_i");
  for (const auto& e : closed)
    if (&e.parent() != space.get() && !(e.parent() == *space))
      throw std::invalid_argument("SpacePairInstance: E_i has a different parent");
}

Subcomplex SpacePairInstance::closed_union() const {
  Subcomplex u = closed[0];
  for (size_t i = 1; i < closed.size(); ++i) u = unite(u, closed[i]);
  return u;
}

std::vector<Subcomplex> intersection_level(const SpacePairInstance& inst, int m) {
  if (m < 1 || m > inst.r())
    throw std::invalid_argument("intersection_level: m out of range 1..r");
  std::vector<Subcomplex> out;
  for (const auto& J : subsets_of_size(inst.r(), m)) {
    Subcomplex e = inst.closed[J[0]];
    for (size_t i = 1; i < J.size(); ++i) e = intersect(e, inst.closed[J[i]]);
    out.push_back(std::move(e));
  }
  return out;
}

DoubleComplex resolution_double_complex(const SpacePairInstance& inst) {
  const int r = inst.r();

  // Column p = 0: C(F). Column p = m: ⨁_{|J|=m} C(E_J), J lexicographic.
  std::vector<CochainComplex> columns;
  std::vector<SumLayout> layouts(r + 1);
  std::vector<std::vector<std::vector<int>>> level_sets(r + 1);
  std::vector<std::vector<SimplicialComplex>> level_complexes(r + 1);

  level_sets[0] = {{}};
  level_complexes[0].push_back(*inst.space);
  columns.push_back(cochain_complex(*inst.space));
  layouts[0].offsets.assign(1, {});
  for (int q = columns[0].lo(); q <= columns[0].hi(); ++q) layouts[0].offsets[0][q] = 0;

  for (int m = 1; m <= r; ++m) {
    level_sets[m] = subsets_of_size(r, m);
    std::vector<CochainComplex> parts;
    for (const auto& J : level_sets[m]) {
      Subcomplex e = inst.closed[J[0]];
      for (size_t i = 1; i < J.size(); ++i) e = intersect(e, inst.closed[J[i]]);
      level_complexes[m].push_back(e.as_complex());
      parts.push_back(cochain_complex(level_complexes[m].back()));
    }
    columns.push_back(direct_sum(parts, &layouts[m]));
  }

  // Horizontal components: block (J -> J ∪ {j}) is the signed restriction.
  std::vector<std::map<int, RationalMatrix>> horizontal(r);
  for (int p = 0; p < r; ++p) {
    const CochainComplex& src = columns[p];
    const CochainComplex& dst = columns[p + 1];
    for (int q = std::min(src.lo(), dst.lo()); q <= std::max(src.hi(), dst.hi()); ++q) {
      if (src.dim_at(q) == 0 || dst.dim_at(q) == 0) continue;
      RationalMatrix h(dst.dim_at(q), src.dim_at(q));
      bool nonzero = false;
      for (size_t a = 0; a < level_sets[p].size(); ++a) {
        const auto& J = level_sets[p][a];
        for (size_t b = 0; b < level_sets[p + 1].size(); ++b) {
          const auto& J2 = level_sets[p + 1][b];
          // J2 = J ∪ {j} for exactly one j?
          int extra = -1;
          size_t ji = 0;
          bool super = true;
          for (int x : J2) {
            if (ji < J.size() && J[ji] == x) {
              ++ji;
            } else if (extra < 0) {
              extra = x;
            } else {
              super = false;
              break;
            }
          }
          if (!super || ji != J.size() || extra < 0) continue;
          RationalMatrix block =
              cochain_projection(level_complexes[p][a], level_complexes[p + 1][b], q);
          if (block.rows() == 0 || block.cols() == 0) continue;
          const int sign = cech_sign(J, extra);
          if (sign < 0) block = -block;
          auto roff = layouts[p + 1].offsets[b].find(q);
          auto coff = layouts[p].offsets[a].find(q);
          if (roff == layouts[p + 1].offsets[b].end() || coff == layouts[p].offsets[a].end())
            continue;
          h.set_block(roff->second, coff->second, block);
          nonzero = true;
        }
      }
      if (nonzero) horizontal[p][q] = std::move(h);
    }
  }
  return DoubleComplex(std::move(columns), std::move(horizontal));
}

Report verify_resolution(const SpacePairInstance& inst) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.instance = inst.name;
  rep.check = "verify-resolution";
  rep.left_label = "totalized resolution";
  rep.right_label = "relative complex";
  rep.left = cohomology(totalize(resolution_double_complex(inst)));
  rep.right = cohomology(relative_cochain_complex(*inst.space, inst.closed_union()));
  finish_comparison(rep);
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace covhom
