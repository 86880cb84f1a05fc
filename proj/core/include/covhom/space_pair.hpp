// The closed-cover resolution of a pair (F, E_1 ∪ ... ∪ E_r) and its
// verification against the direct relative cochain complex.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "covhom/double_complex.hpp"
#include "covhom/report.hpp"
#include "covhom/simplicial.hpp"

namespace covhom {

/// A simplicial complex F together with an ordered family of closed
/// subcomplexes E_1, ..., E_r (r >= 1).
struct SpacePairInstance {
  std::string name;
  std::shared_ptr<const SimplicialComplex> space;  // F
  std::vector<Subcomplex> closed;                  // E_1..E_r, subcomplexes of F
  std::string notes;

  SpacePairInstance(std::string name, std::shared_ptr<const SimplicialComplex> space,
                    std::vector<Subcomplex> closed, std::string notes = {});

  int r() const { return static_cast<int>(closed.size()); }
  /// E_1 ∪ ... ∪ E_r.
  Subcomplex closed_union() const;
};

/// The subcomplexes E_J = ∩_{j in J} E_j for all |J| = m, in lexicographic J
/// order; empty intersections are kept as empty subcomplexes.
std::vector<Subcomplex> intersection_level(const SpacePairInstance& inst, int m);

/// Column p = 0 is C(F); column p = m >= 1 is the direct sum over |J| = m of
/// C(E_J); horizontal maps are Cech-signed restrictions along J -> J ∪ {j}.
DoubleComplex resolution_double_complex(const SpacePairInstance& inst);

/// PASS iff cohomology(totalize(resolution_double_complex(inst))) equals the
/// cohomology of relative_cochain_complex(F, ∪E_i) in every degree.
Report verify_resolution(const SpacePairInstance& inst);

}  // namespace covhom
