#include "covhom/cover.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace covhom {

namespace {

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

int cech_sign(const std::vector<int>& j_set, int j) {
  int pos = 0;
  for (int k : j_set)
    if (k < j) ++pos;
  return pos % 2 == 0 ? 1 : -1;
}

}  // namespace

CoverInstance::CoverInstance(std::string name_, std::shared_ptr<const SimplicialComplex> space_,
                             std::vector<Subcomplex> avoided_,
                             std::optional<CompanionPair> companion_, std::string notes_)
    : name(std::move(name_)), space(std::move(space_)), avoided(std::move(avoided_)),
      companion(std::move(companion_)), notes(std::move(notes_)) {
  if (!space) throw std::invalid_argument("CoverInstance: null space");
  if (avoided.empty()) throw std::invalid_argument("CoverInstance: needs at least one A_i");
  for (const auto& a : avoided)
    if (&a.parent() != space.get() && !(a.parent() == *space))
      throw std::invalid_argument("CoverInstance: A_i has a different parent");
  if (companion && companion->pair.r() != r())
    throw std::invalid_argument("CoverInstance: companion pair has a different r");
}

bool CoverInstance::cover_condition() const {
  Subcomplex common = avoided[0];
  for (size_t i = 1; i < avoided.size(); ++i) common = intersect(common, avoided[i]);
  return common.is_empty();
}

// --- CoverRealization ---------------------------------------------------------

CoverRealization::CoverRealization(const CoverInstance& inst) : inst_(&inst) {
  sd_ = std::make_shared<Subdivision>(barycentric_subdivision(*inst.space));
  avoided_mask_.resize(inst.avoided.size());
  for (size_t i = 0; i < inst.avoided.size(); ++i) {
    avoided_mask_[i].assign(inst.space->size(), 0);
    for (int gi = 0; gi < inst.space->size(); ++gi)
      avoided_mask_[i][gi] = inst.avoided[i].contains_global(gi) ? 1 : 0;
  }
}

std::vector<char> CoverRealization::allowed_vertices(const std::vector<int>& block) const {
  std::vector<char> allowed(inst_->space->size(), 1);
  for (int i : block) {
    if (i < 1 || i > inst_->r())
      throw std::invalid_argument("CoverRealization: cover index out of range");
    const auto& mask = avoided_mask_[i - 1];
    for (size_t v = 0; v < allowed.size(); ++v)
      if (mask[v]) allowed[v] = 0;
  }
  return allowed;
}

SimplicialComplex CoverRealization::full_model(const CoverTerm& t) const {
  std::vector<char> allowed(inst_->space->size(), 0);
  for (const auto& block : t.blocks()) {
    std::vector<char> a = allowed_vertices(block);
    for (size_t v = 0; v < allowed.size(); ++v)
      if (a[v]) allowed[v] = 1;
  }
  return SimplicialComplex(sd_->complex.vertex_count(),
                           full_subcomplex_members(sd_->complex, allowed));
}

SimplicialComplex CoverRealization::union_model(const CoverTerm& t) const {
  std::set<Simplex> members;
  for (const auto& block : t.blocks()) {
    std::vector<char> a = allowed_vertices(block);
    for (auto& s : full_subcomplex_members(sd_->complex, a)) members.insert(std::move(s));
  }
  return SimplicialComplex(sd_->complex.vertex_count(), {members.begin(), members.end()});
}

CochainComplex realize(const CoverTerm& t, const CoverInstance& inst) {
  if (t.max_index() > inst.r())
    throw std::invalid_argument("realize: term index exceeds the instance's r");
  return cochain_complex(CoverRealization(inst).full_model(t));
}

// --- pseudo-MV double complex ---------------------------------------------------

DoubleComplex pseudo_mv_double_complex(const CoverInstance& inst) {
  if (!inst.cover_condition())
    throw std::invalid_argument(
        "pseudo_mv_double_complex: cover condition violated (some simplex lies in every A_i)");
  const int r = inst.r();
  CoverRealization real(inst);

  // Column p: terms U_Jbar for |J| = p, J lexicographic; p = 0..r-1.
  std::vector<CochainComplex> columns;
  std::vector<SumLayout> layouts(r);
  std::vector<std::vector<std::vector<int>>> jsets(r);
  std::vector<std::vector<SimplicialComplex>> models(r);

  for (int p = 0; p < r; ++p) {
    jsets[p] = subsets_of_size(r, p);
    std::vector<CochainComplex> parts;
    for (const auto& J : jsets[p]) {
      std::vector<int> comp;
      size_t ji = 0;
      for (int i = 0; i < r; ++i) {
        if (ji < J.size() && J[ji] == i) {
          ++ji;
        } else {
          comp.push_back(i + 1);  // cover indices are 1-based
        }
      }
      models[p].push_back(real.full_model(CoverTerm::singletons(comp)));
      parts.push_back(cochain_complex(models[p].back()));
    }
    columns.push_back(direct_sum(parts, &layouts[p]));
  }

  std::vector<std::map<int, RationalMatrix>> horizontal(r - 1);
  for (int p = 0; p + 1 < r; ++p) {
    const CochainComplex& src = columns[p];
    const CochainComplex& dst = columns[p + 1];
    if (src.is_zero_complex() || dst.is_zero_complex()) continue;
    for (int q = std::min(src.lo(), dst.lo()); q <= std::max(src.hi(), dst.hi()); ++q) {
      if (src.dim_at(q) == 0 || dst.dim_at(q) == 0) continue;
      RationalMatrix h(dst.dim_at(q), src.dim_at(q));
      bool nonzero = false;
      for (size_t a = 0; a < jsets[p].size(); ++a) {
        for (size_t b = 0; b < jsets[p + 1].size(); ++b) {
          const auto& J = jsets[p][a];
          const auto& J2 = jsets[p + 1][b];
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
          RationalMatrix block = cochain_projection(models[p][a], models[p + 1][b], q);
          if (block.rows() == 0 || block.cols() == 0) continue;
          if (cech_sign(J, extra) < 0) block = -block;
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

// --- verification -----------------------------------------------------------------

namespace {

CoverTerm full_intersection_term(int r) {
  std::vector<int> all(r);
  for (int i = 0; i < r; ++i) all[i] = i + 1;
  return CoverTerm::of_blocks({all});
}

}  // namespace

Report verify_final(const CoverInstance& inst) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.instance = inst.name;
  rep.check = "verify-final";
  rep.left_label = "totalized pseudo-MV";
  rep.right_label = "deepest intersection, shifted";
  if (!inst.cover_condition()) {
    rep.status = Status::InvalidInstance;
    rep.detail = "cover condition violated: some simplex lies in every A_i";
    return rep;
  }
  const int r = inst.r();
  CoverRealization real(inst);
  rep.left = cohomology(totalize(pseudo_mv_double_complex(inst)));
  BettiTable inter = cohomology(cochain_complex(real.full_model(full_intersection_term(r))));
  rep.right = inter.shifted(-(r - 1));
  finish_comparison(rep);
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Report verify_theorem(const CoverInstance& inst) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.instance = inst.name;
  rep.check = "verify-theorem";
  rep.left_label = "relative cohomology of companion pair";
  rep.right_label = "deepest intersection, shifted";
  if (!inst.companion) {
    rep.status = Status::NotApplicable;
    rep.detail = "no companion pair declared";
    return rep;
  }
  if (!inst.cover_condition()) {
    rep.status = Status::InvalidInstance;
    rep.detail = "cover condition violated: some simplex lies in every A_i";
    return rep;
  }
  const SpacePairInstance& pair = inst.companion->pair;
  rep.left = cohomology(relative_cochain_complex(*pair.space, pair.closed_union()));
  CoverRealization real(inst);
  BettiTable inter = cohomology(cochain_complex(real.full_model(full_intersection_term(inst.r()))));
  rep.right = inter.shifted(-inst.companion->shift);
  finish_comparison(rep);
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace covhom
