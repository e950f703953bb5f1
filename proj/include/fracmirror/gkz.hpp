#pragma once

// GKZ A-hypergeometric data of a nef-partition and its holomorphic solution.

#include <utility>
#include <vector>

#include "fracmirror/nef_partition.hpp"
#include "fracmirror/series.hpp"

namespace fracmirror {

enum class GkzSide { kNabla, kDelta };

struct GkzData {
  std::size_t n = 0;  // lattice rank
  std::size_t r = 0;  // number of parts
  /// Rows 0..n-1 are lattice rows, rows n..n+r-1 the Kronecker pattern.
  IntegerMatrix a;
  RatVector beta;
  RatVector alpha;
  std::vector<IntVector> kernel;
  /// (part i, index j) per column, both 0-based; j = 0 is ν_{i,0}.
  std::vector<std::pair<std::size_t, std::size_t>> column_labels;

  /// Row order with the Kronecker rows first, as the matrices are displayed.
  std::vector<std::size_t> display_row_order() const;
  IntegerMatrix display_matrix() const;
  RatVector display_beta() const;
};

/// Columns of part i: ν_{i,0} then the nonzero lattice points of ∇_i (or Δ_i),
/// in descending lexicographic order.
GkzData build_gkz(const NefPartitionData& data, GkzSide side = GkzSide::kNabla);

/// Normalized volume of the convex hull of the columns of A.
Integer gkz_volume(const GkzData& gkz);

/// Generator of a rank-one kernel with every ℓ_{i,0} <= 0.
IntVector principal_kernel_vector(const GkzData& gkz);

/// One-parameter data read off (ℓ, α): per part k_i = -ℓ_{i,0} and
/// a_i = -α_{i,0}; the positive ℓ_{i,j}, j >= 1, pooled.
struct OneParameterShape {
  std::vector<long> k;
  std::vector<Rational> a;
  std::vector<long> l;

  static OneParameterShape from_gkz(const GkzData& gkz, const IntVector& ell);
  long total_k() const;
};

/// Σ c_n z^n with c_n = (-1)^{nΣk} Π (a_i)_{k_i n} / Π (l_j n)!.
RationalSeries holo_solution(const OneParameterShape& shape, std::size_t order);
RationalSeries holo_solution(const GkzData& gkz, std::size_t order);

/// Checks □_ℓ Σ c_n x^{α+nℓ} = 0 coefficientwise, ℓ and α as full column vectors.
bool box_annihilation_check(const IntVector& ell, const RatVector& alpha, const RationalSeries& series);

struct GkzTerm {
  IntVector ell;
  Rational coefficient;
};

/// Terms of the general solution over ℓ ∈ L with 0 <= ℓ_{i,j} <= cutoff (j >= 1),
/// for kernels of any rank. Sorted by ℓ.
std::vector<GkzTerm> enumerate_terms(const GkzData& gkz, long cutoff);

/// Rising factorial (x)_m.
Rational rising_factorial(const Rational& x, unsigned long m);
/// Falling factorial x(x-1)...(x-m+1).
Rational falling_factorial(const Rational& x, unsigned long m);

}  // namespace fracmirror
