// Finite simplicial complexes, subcomplexes, barycentric subdivision and the
// full-subcomplex model of open complements.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "covhom/complex.hpp"

namespace covhom {

/// A simplex is a strictly increasing tuple of vertex indices.
using Simplex = std::vector<int>;

/// A finite abstract simplicial complex on an ambient vertex set
/// {0, ..., vertex_count - 1}. The simplex set is face-closed; vertices not
/// appearing in any simplex are allowed (the ambient set only bounds indices).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Validates: vertices sorted, distinct, in range; the set face-closed; no
  /// duplicates.
  SimplicialComplex(int vertex_count, std::vector<Simplex> simplices);

  int vertex_count() const { return vertex_count_; }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }  // -1 if empty
  int size() const;                                                 // total simplex count

  /// Simplices of dimension d, sorted lexicographically. Empty list outside range.
  const std::vector<Simplex>& simplices(int d) const;

  bool contains(const Simplex& s) const;
  /// Position of s within simplices(dim(s)); -1 if absent.
  int index_of(const Simplex& s) const;
  /// Position of s in the global (dim, lex) order over all simplices; -1 if absent.
  int global_index(const Simplex& s) const;
  /// Inverse of global_index.
  const Simplex& simplex_at(int global_index) const;

  long euler() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.by_dim_ == b.by_dim_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, int> index_;         // simplex -> index within its dimension
  std::vector<int> global_offset_;       // per dimension
  static const std::vector<Simplex> kNone;
};

/// Smallest face-closed complex containing the generators.
SimplicialComplex closure(int vertex_count, const std::vector<Simplex>& generators);

/// A face-closed subset of a parent complex's simplices. Holds the parent
/// alive via shared ownership.
class Subcomplex {
 public:
  Subcomplex(std::shared_ptr<const SimplicialComplex> parent, std::vector<Simplex> members);

  static Subcomplex empty(std::shared_ptr<const SimplicialComplex> parent);
  static Subcomplex whole(std::shared_ptr<const SimplicialComplex> parent);
  /// Closure of the generators taken inside the parent.
  static Subcomplex closure_in(std::shared_ptr<const SimplicialComplex> parent,
                               const std::vector<Simplex>& generators);

  const SimplicialComplex& parent() const { return *parent_; }
  const std::shared_ptr<const SimplicialComplex>& parent_ptr() const { return parent_; }

  bool contains(const Simplex& s) const;
  bool contains_global(int global_index) const { return member_[global_index] != 0; }
  int size() const { return count_; }
  bool is_empty() const { return count_ == 0; }

  /// The member simplices as a standalone complex on the same ambient vertex set.
  SimplicialComplex as_complex() const;
  std::vector<Simplex> members() const;

  friend Subcomplex intersect(const Subcomplex& a, const Subcomplex& b);
  friend Subcomplex unite(const Subcomplex& a, const Subcomplex& b);
  bool subset_of(const Subcomplex& other) const;

 private:
  Subcomplex() = default;
  std::shared_ptr<const SimplicialComplex> parent_;
  std::vector<char> member_;  // indexed by parent global index
  int count_ = 0;
};

/// Barycentric subdivision, together with the correspondence between new
/// vertices and parent simplices (new vertex i is the barycenter of the
/// parent simplex with global index i).
struct Subdivision {
  std::shared_ptr<const SimplicialComplex> parent;
  SimplicialComplex complex;
  std::vector<Simplex> vertex_to_parent;  // sd vertex -> parent simplex

  int vertex_of(const Simplex& parent_simplex) const;
};

Subdivision barycentric_subdivision(const SimplicialComplex& k);

/// The full subcomplex of sd.complex spanned by the allowed vertices
/// (allowed.size() == number of sd vertices).
std::vector<Simplex> full_subcomplex_members(const SimplicialComplex& sd,
                                             const std::vector<char>& vertex_allowed);

/// Combinatorial model of the open complement of a family of closed
/// subcomplexes: the full subcomplex of the barycentric subdivision spanned
/// by barycenters of simplices avoiding every member of the family.
struct OpenModel {
  std::shared_ptr<const Subdivision> ambient;
  Subcomplex carrier;  // subcomplex of ambient->complex
};

OpenModel open_model(std::shared_ptr<const SimplicialComplex> k,
                     const std::vector<Subcomplex>& avoided);

/// Simplicial cochain complex with the alternating-face differential
/// (vertices ordered ascending).
CochainComplex cochain_complex(const SimplicialComplex& k);

/// Degreewise coordinate projection C(k) -> C(sub); a surjective chain map.
ChainMap restriction_map(const std::shared_ptr<const SimplicialComplex>& k, const Subcomplex& sub);

/// Kernel of the restriction map: the subcomplex of cochains vanishing on
/// sub, whose cohomology is the relative cohomology of the pair (k, sub).
CochainComplex relative_cochain_complex(const SimplicialComplex& k, const Subcomplex& sub);

/// Projection matrix in dimension d from the cochains of `from` onto the
/// cochains of `to`; every simplex of `to` must belong to `from`.
RationalMatrix cochain_projection(const SimplicialComplex& from, const SimplicialComplex& to, int d);

/// True iff every simplex of `inner` is a simplex of `outer`.
bool complex_subset(const SimplicialComplex& inner, const SimplicialComplex& outer);

std::string simplex_str(const Simplex& s);

}  // namespace covhom
