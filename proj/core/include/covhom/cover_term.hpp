// The symbolic calculus of cover terms and the left-to-right elimination
// that rewrites the pseudo-Mayer-Vietoris complex down to its deepest
// intersection term.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace covhom {

/// A formal union of intersections of opens: an ordered list of nonempty
/// pairwise-disjoint blocks of indices from {1..r}. The term denotes
/// ∪_blocks ( ∩_{i in block} U_i ). Canonical form: each block ascending,
/// blocks ordered by their minimum. Printed like the paper: "(1,2∩3)".
class CoverTerm {
 public:
  /// Canonicalizes; validates blocks nonempty, disjoint, indices >= 1.
  static CoverTerm of_blocks(std::vector<std::vector<int>> blocks);
  /// The term with one singleton block per index.
  static CoverTerm singletons(const std::vector<int>& indices);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int max_index() const;
  /// All indices appearing in any block, ascending.
  std::vector<int> support() const;
  bool has_block(const std::vector<int>& block) const;

  std::string str() const;

  friend bool operator==(const CoverTerm& a, const CoverTerm& b) { return a.blocks_ == b.blocks_; }
  friend std::strong_ordering operator<=>(const CoverTerm& a, const CoverTerm& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  CoverTerm() = default;
  std::vector<std::vector<int>> blocks_;
};

/// A graded formal sum of cover terms; each degree holds a multiset, kept
/// sorted in canonical term order.
class FormalComplex {
 public:
  FormalComplex() = default;

  void add(int degree, CoverTerm t);
  /// Removes one occurrence; throws if absent.
  void remove(int degree, const CoverTerm& t);
  bool contains(int degree, const CoverTerm& t) const;

  const std::map<int, std::vector<CoverTerm>>& slots() const { return slots_; }
  const std::vector<CoverTerm>& at(int degree) const;
  int lo() const;  // lowest nonempty degree; 0 for the empty complex
  int hi() const;
  long term_count() const;

  /// Paper-style rendering, e.g. "0 -> (1,2∩3) -> (1) + (2∩3)". The leading
  /// "0 -> " appears when the lowest nonempty degree is positive.
  std::string str() const;

  friend bool operator==(const FormalComplex& a, const FormalComplex& b) {
    return a.slots_ == b.slots_;
  }

 private:
  std::map<int, std::vector<CoverTerm>> slots_;
  static const std::vector<CoverTerm> kNone;
};

/// The Mayer-Vietoris triple of one elimination: `eliminated` is covered by
/// the two parts, whose intersection is `merged`.
struct MvTriple {
  CoverTerm eliminated, part_a, part_b, merged;
};

enum class StepKind { InitialElimination, PairMerge };

const char* step_kind_str(StepKind k);

struct RewriteStep {
  StepKind kind;
  int degree;  // degree of the eliminated term
  MvTriple triple;
  FormalComplex before, after;
};

struct RewriteTrace {
  int r = 0;
  std::vector<RewriteStep> steps;
  FormalComplex initial, final_complex;
};

/// The pseudo-Mayer-Vietoris complex of r opens in symbolic form: degree 0
/// holds (1,...,r); degree p holds, for every |J| = p, the term with
/// singleton blocks over the complement of J.
FormalComplex initial_complex(int r);

/// One elimination: `target` at `degree` must have >= 2 blocks; its two
/// blocks of largest minimum are split off as the cover parts, which must be
/// present at degree + 1. They are consumed and replaced by the merged term.
/// Throws std::invalid_argument when the target is not eligible.
std::pair<FormalComplex, RewriteStep> mv_step(const FormalComplex& c, int degree,
                                              const CoverTerm& target);

/// The full left-to-right elimination: repeatedly merges the two largest
/// surviving index groups, ending in the single term (1∩...∩r) in degree
/// r - 1. Performs exactly 2^(r-1) - 1 steps for r >= 2 (none for r = 1).
RewriteTrace reduce(int r);

/// Textual trace: per step its kind, MV triple and after-complex, suitable
/// for eyeball diffs against the worked r = 2, 3 examples.
std::string render_trace(const RewriteTrace& trace);

}  // namespace covhom
