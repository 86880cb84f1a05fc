// Numeric realization of the pseudo-Mayer-Vietoris complex of an open cover
// and the end-to-end verification of the reduction and the main isomorphism.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "covhom/cover_term.hpp"
#include "covhom/double_complex.hpp"
#include "covhom/report.hpp"
#include "covhom/simplicial.hpp"
#include "covhom/space_pair.hpp"

namespace covhom {

/// A declared relative-pair model of the same data as a cover instance,
/// with the expected degree shift (r - 1).
struct CompanionPair {
  SpacePairInstance pair;
  int shift;
};

/// A base complex W with closed subcomplexes A_1..A_r; the opens are
/// U_i = W - A_i. The cover condition ⋃U_i = W means ⋂A_i = ∅.
struct CoverInstance {
  std::string name;
  std::shared_ptr<const SimplicialComplex> space;  // W
  std::vector<Subcomplex> avoided;                 // A_1..A_r
  std::optional<CompanionPair> companion;
  std::string notes;

  CoverInstance(std::string name, std::shared_ptr<const SimplicialComplex> space,
                std::vector<Subcomplex> avoided,
                std::optional<CompanionPair> companion = std::nullopt,
                std::string notes = {});

  int r() const { return static_cast<int>(avoided.size()); }
  bool cover_condition() const;  // ⋂A_i = ∅
};

/// Shared realization machinery for one instance: the barycentric
/// subdivision of W and the full-subcomplex models of cover terms.
class CoverRealization {
 public:
  explicit CoverRealization(const CoverInstance& inst);

  const Subdivision& sd() const { return *sd_; }
  const CoverInstance& instance() const { return *inst_; }

  /// Allowed sd-vertices for one block: barycenters of simplices avoiding
  /// every A_i with i in the block (indices 1-based).
  std::vector<char> allowed_vertices(const std::vector<int>& block) const;

  /// The open_model realization of a term: the full subcomplex on the union
  /// of the blocks' allowed vertex sets.
  SimplicialComplex full_model(const CoverTerm& t) const;

  /// The union over blocks of the full subcomplexes on each block's allowed
  /// vertices. Same cohomology as full_model; turns each MV triple of the
  /// reduction into literal complex identities (union and intersection).
  SimplicialComplex union_model(const CoverTerm& t) const;

 private:
  const CoverInstance* inst_;
  std::shared_ptr<const Subdivision> sd_;
  std::vector<std::vector<char>> avoided_mask_;  // per A_i, over sd vertices
};

/// Cochain complex of the open model of the term's opens in this instance.
CochainComplex realize(const CoverTerm& t, const CoverInstance& inst);

/// Column p = ⨁_{|J|=p} C(model of U_Jbar) for p = 0..r-1, with Cech-signed
/// restriction arrows; column 0 is the model of the whole space.
DoubleComplex pseudo_mv_double_complex(const CoverInstance& inst);

/// PASS iff the totalized pseudo-MV table at degree m equals the deepest
/// intersection's table at m - (r - 1), for all m.
Report verify_final(const CoverInstance& inst);

/// With a companion pair: PASS iff H^m(pair) equals the deepest
/// intersection's table at m - shift, for all m. NOT-APPLICABLE otherwise.
Report verify_theorem(const CoverInstance& inst);

/// Certifies the rewrite trace on this instance: realizes the initial complex,
/// performs each step as a quotient by the eliminated term's graph subcomplex,
/// and checks per step that the subcomplex is acyclic, that quotient dimensions
/// match the formal after-complex, and that the total Betti table is unchanged.
/// Finally checks the table equals the realized full intersection shifted by
/// -(r-1). Cover-condition violations report INVALID-INSTANCE.
Report verify_trace(const RewriteTrace& trace, const CoverInstance& inst);

}  // namespace covhom
