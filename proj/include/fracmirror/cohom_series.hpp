#pragma once

// Cohomology-valued series in Q[ε]/(ε^m): the ρ-deformed solution, the
// B-series, the untwisted I-function and the Poincaré pairing.

#include <utility>
#include <vector>

#include "fracmirror/gkz.hpp"
#include "fracmirror/picard_fuchs.hpp"
#include "fracmirror/series.hpp"

namespace fracmirror {

/// One-parameter ring: every divisor class D_c = divisors[c]·ε, ∫ε^{m-1} = top_integral.
struct CohomRing {
  std::size_t m = 1;
  Rational top_integral = 1;
  RatVector divisors;

  /// D_c = λ ℓ_c ε for the GKZ columns.
  static CohomRing one_parameter(const GkzData& gkz, const IntVector& ell, std::size_t m, const Rational& top,
                                 const Rational& lambda = 1);
  /// top_integral times the ε^{m-1} coefficient.
  Rational integral(const EpsPolynomial& x) const;
  /// D_{i,0} = -Σ_j D_{i,j} for every part.
  bool relations_hold(const GkzData& gkz) const;
};

/// Σ c_n(ρ) z^n with c_n(ρ) = c(n+ρ)/c(ρ) in Q[ρ]/(ρ^m); no z^ρ factor.
NilpotentSeries deformed_solution(const OneParameterShape& shape, std::size_t order, std::size_t m);

struct FrobeniusResidue {
  NilpotentSeries residue;
  std::size_t degree = 0;
  /// (n, k): nonzero z^n coefficient in the ρ^k slice, k < degree, or a wrong ρ^degree slice.
  std::vector<std::pair<std::size_t, std::size_t>> offending;
  bool certified() const { return offending.empty(); }
};

/// op applied to exp(ρΛ)·deformed, compared against ρ^d exp(ρΛ) mod ρ^{d+1}.
FrobeniusResidue frobenius_residue(const ThetaOperator& op, const NilpotentSeries& deformed);

/// exp(λεΛ)·Σ Ô_n z^n from the ring's divisor multiples.
NilpotentSeries b_series(const CohomRing& ring, const GkzData& gkz, const IntVector& ell, std::size_t order);

/// exp(εΛ)·Σ_d q^d Π_w Π_{j≤wd}(wε+j) / Π_v Π_{j≤vd}(vε+j).
NilpotentSeries i_function_untwisted(const std::vector<long>& numerator, const std::vector<long>& denominator,
                                     std::size_t m, std::size_t order);

/// B/A where I = A + ε(AΛ + B) + O(ε²).
RationalSeries i_function_mirror_map(const NilpotentSeries& i_function);

/// Gram matrix ∫ b_i b_j.
std::vector<RatVector> pairing_matrix(const CohomRing& ring, const std::vector<EpsPolynomial>& basis);

}  // namespace fracmirror
