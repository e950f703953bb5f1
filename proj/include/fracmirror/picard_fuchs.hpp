#pragma once

// Picard-Fuchs operators in θ = z d/dz with polynomial-in-z coefficients.

#include <optional>
#include <string>
#include <vector>

#include "fracmirror/gkz.hpp"
#include "fracmirror/series.hpp"

namespace fracmirror {

/// Σ_i z^i p_i(θ); stored as the θ-polynomials p_i, ascending coefficients.
class ThetaOperator {
 public:
  ThetaOperator() = default;
  explicit ThetaOperator(std::vector<RatVector> theta_polys);

  /// Order in θ.
  std::size_t degree() const;
  std::size_t z_degree() const { return polys_.size() - 1; }
  /// θ-polynomial multiplying z^i.
  RatVector theta_poly(std::size_t i) const;
  /// z-polynomial multiplying θ^j.
  RatVector z_poly(std::size_t j) const;
  /// p_0, the indicial polynomial at z = 0.
  RatVector indicial() const { return theta_poly(0); }

  bool operator==(const ThetaOperator& other) const = default;

 private:
  std::vector<RatVector> polys_{RatVector{Rational(0)}};
};

/// Product of linear factors c·Π(θ - root).
RatVector theta_polynomial(const Rational& lead, const std::vector<Rational>& roots);
Rational evaluate(const RatVector& poly, const Rational& x);

/// x^{-α} x^{ℓ+} □_ℓ x^α in z = x^ℓ, normalized to a monic θ^d at z = 0.
ThetaOperator theta_conjugate(const OneParameterShape& shape);

/// Q with op = θ·Q, if op has a left θ factor.
std::optional<ThetaOperator> strip_left_theta(const ThetaOperator& op);
/// Strips left θ factors until none remain.
ThetaOperator reduce_left_theta(ThetaOperator op);

RationalSeries apply(const ThetaOperator& op, const RationalSeries& s);
LogSeries apply(const ThetaOperator& op, const LogSeries& s);
NilpotentSeries apply(const ThetaOperator& op, const NilpotentSeries& s);

/// The power series solution with c_0 = 1 from the operator's own recurrence.
RationalSeries power_series_solution(const ThetaOperator& op, std::size_t order);

/// Factored form, e.g. "θ⁴ − z(θ+1/2)⁴".
std::string display(const ThetaOperator& op);

/// num(z) / den(z) with den(0) = 1.
struct RationalFunction {
  RatVector num;
  RatVector den;
  RationalSeries expand(std::size_t order) const;
  std::string display() const;
};

/// g with θY = g·Y from Griffiths transversality: g = -p_3 / (2 p_4) in θ-coefficients.
RationalFunction yukawa_ode_rhs(const ThetaOperator& op);

}  // namespace fracmirror
