#pragma once

// Frobenius basis, mirror map, Yukawa coupling and the A-model series.

#include "fracmirror/gkz.hpp"
#include "fracmirror/picard_fuchs.hpp"
#include "fracmirror/series.hpp"

namespace fracmirror {

/// ω₁ = ω₀·(Λ - log s) + τ; the constant -log s ω₀ is kept implicit.
struct FrobeniusPair {
  RationalSeries omega0;
  RationalSeries tau;
  Integer scale = 1;

  std::size_t order() const { return omega0.order(); }
  /// ω₀Λ + τ as a log series.
  LogSeries omega1() const;
};

/// s = Π 4^{k_i} over parts with a_i = 1/2; parts with a_i = 1 contribute 1.
/// Verified against double-precision digamma values.
Integer frobenius_scale(const OneParameterShape& shape);

FrobeniusPair frobenius_pair(const OneParameterShape& shape, std::size_t order);
FrobeniusPair frobenius_pair(const GkzData& gkz, std::size_t order);

struct MirrorMap {
  RationalSeries q_of_z;
  RationalSeries z_of_q;
};

/// q = (z/s)·exp(τ/ω₀), z(q) by reversion.
MirrorMap mirror_map(const FrobeniusPair& pair);

/// Y^Ω with θY = gY, Y(0) = C.
RationalSeries yukawa_omega(const ThetaOperator& op, const Rational& c, std::size_t order);
/// Y^Ω / ω₀², ω₀ the operator's power series solution.
RationalSeries yukawa_z(const ThetaOperator& op, const Rational& c, std::size_t order);

Rational classical_normalization(long cover_degree, long base_triple_intersection);

/// K(q) = (Y^Ω/ω₀²)(z(q)) · (θ_q z / z)³.
RationalSeries a_model_correlation(const ThetaOperator& op, const FrobeniusPair& pair, const Rational& c,
                                   std::size_t order);

struct YukawaData {
  Rational c;
  RationalSeries y_z;
  RationalSeries k_q;
};

YukawaData yukawa_data(const ThetaOperator& op, const FrobeniusPair& pair, const Rational& c, std::size_t order);

}  // namespace fracmirror
