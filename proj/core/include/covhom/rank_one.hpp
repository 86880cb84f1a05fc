// Cyclic Plucker-monomial sections and the exact rank-one verification for
// d = 1 Calabi-Yau complete intersections.
#pragma once

#include <string>
#include <vector>

#include "covhom/report.hpp"
#include "covhom/simplicial.hpp"

namespace covhom {

/// The Plucker coordinate x_{start, start+1, ..., start+d-1} with indices
/// taken cyclically in {1..N}.
struct PluckerIndex {
  int d, N, start;

  std::vector<int> tuple() const;  // the d cyclic indices, starting at start
  std::string str() const;         // "x(1,2)"
};

/// A degree-d_i monomial section: a consecutive block of cyclic Plucker
/// coordinates.
struct PluckerMonomialSection {
  int degree;
  std::vector<PluckerIndex> factors;

  std::string str() const;  // "x(1,2)*x(2,3)"
};

/// The r cyclic monomial sections for degrees (d_1..d_r): section i takes the
/// next d_i consecutive factors of the hypersurface monomial
/// x_{1..d} x_{2..d+1} ... x_{N,1,..,d-1}. Requires sum of degrees == N.
std::vector<PluckerMonomialSection> plucker_sections(int d, int N,
                                                     const std::vector<int>& degrees);

/// Triangulated k-torus (1 <= k <= 3), the iterated staircase product of
/// triangle-boundary circles.
SimplicialComplex torus_model(int k);

/// For d = 1, 2 <= N <= 4: generates the sections, models the hyperplane
/// complement as the (N-1)-torus, and reports PASS iff its top Betti number
/// dim H^{N-1} equals 1. The full table and the sections are in the report.
Report rank_one_check(int N, const std::vector<int>& degrees);

}  // namespace covhom
