#pragma once

// Euler characteristics of branch loci and double covers, Hodge numbers.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fracmirror/nef_partition.hpp"

namespace fracmirror {

/// chi of a smooth MPCP resolution of P_delta: normalized volume of delta^v.
Integer euler_mpcp(const LatticePolytope& delta);

/// Danilov-Khovanskii: chi(D_1 ∩ ... ∩ D_r ∩ T) from the Newton polytopes.
Integer dk_intersection_euler(const std::vector<LatticePolytope>& part_polytopes, std::size_t n);

struct CoverTopology {
  std::size_t n = 0;
  Integer chi_X, chi_X_dual;
  Integer vol_Lambda, vol_Lambda_dual;
  Integer chi_Y, chi_Y_dual;
  /// chi of the branch locus, 2 chi(X) - chi(Y).
  Integer chi_branch() const { return 2 * chi_X - chi_Y; }
};

/// Throws AssertionFailure "vol(Λ) ≠ χ(X∨)" when the smoothness hypothesis fails.
CoverTopology euler_double_cover(const NefPartitionData& data);

using Stratum = std::vector<std::string>;  // sorted divisor names

struct SncResult {
  Integer chi_branch;
  Integer chi_Y;
};

/// Inclusion-exclusion over every nonempty intersection of `divisors`; the
/// table must list each of them.
SncResult euler_snc_union_oracle(const std::vector<std::string>& divisors,
                                 const std::map<Stratum, Integer>& strata, const Integer& chi_X);

struct HodgeTable {
  std::size_t n = 0;
  std::map<std::pair<int, int>, Integer> h;
  bool middle_determined = true;
  std::string note;

  Integer at(int p, int q) const;
};

/// h^{p,q}(Y) for the double cover of P_delta with Euler characteristic chi_Y.
HodgeTable hodge_numbers(const NefPartitionData& data, const Integer& chi_Y);

/// #boundary lattice points of delta^v minus n: h^{1,1} of the toric base.
Integer toric_h11(const LatticePolytope& delta);

}  // namespace fracmirror
