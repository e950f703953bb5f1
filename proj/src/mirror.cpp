#include "fracmirror/mirror.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <cmath>

namespace fracmirror {

namespace {

// Harmonic-type sum Σ_{m<count} 1/(a+m).
Rational shifted_harmonic(const Rational& a, unsigned long count) {
  Rational s = 0;
  for (unsigned long m = 0; m < count; ++m) s += 1 / (a + Rational(static_cast<long>(m)));
  return s;
}

// s(z)/z for s with s(0) = 0.
RationalSeries divide_by_z(const RationalSeries& s) {
  if (s[0] != 0) throw AssertionFailure("series does not vanish at 0");
  RationalSeries out(s.order() - 1);
  for (std::size_t n = 1; n <= s.order(); ++n) out[n - 1] = s[n];
  return out;
}

}  // namespace

LogSeries FrobeniusPair::omega1() const { return LogSeries({tau, omega0}); }

Integer frobenius_scale(const OneParameterShape& shape) {
  Integer s = 1;
  double kappa = 0;
  for (std::size_t i = 0; i < shape.k.size(); ++i) {
    const Rational& a = shape.a[i];
    if (a == Rational(1, 2)) {
      Integer f;
      mpz_ui_pow_ui(f.get_mpz_t(), 4, static_cast<unsigned long>(shape.k[i]));
      s *= f;
    } else if (a != 1) {
      throw ValidationError("scale not integral");
    }
    kappa += static_cast<double>(shape.k[i]) *
             (boost::math::digamma(a.get_d()) - boost::math::digamma(1.0));
  }
  if (std::abs(kappa + std::log(s.get_d())) > 1e-12) throw AssertionFailure("digamma cross-check failed for scale");
  return s;
}

FrobeniusPair frobenius_pair(const OneParameterShape& shape, std::size_t order) {
  FrobeniusPair p;
  p.omega0 = holo_solution(shape, order);
  p.scale = frobenius_scale(shape);
  p.tau = RationalSeries(order);
  for (std::size_t n = 1; n <= order; ++n) {
    // d/dρ log c(n+ρ) at ρ = 0, less its value at n = 0
    Rational r = 0;
    for (std::size_t i = 0; i < shape.k.size(); ++i) {
      const auto k = static_cast<unsigned long>(shape.k[i]);
      r += Rational(shape.k[i]) * shifted_harmonic(shape.a[i], k * n);
    }
    for (long l : shape.l) r -= Rational(l) * shifted_harmonic(Rational(1), static_cast<unsigned long>(l) * n);
    p.tau[n] = p.omega0[n] * r;
  }
  return p;
}

FrobeniusPair frobenius_pair(const GkzData& gkz, std::size_t order) {
  return frobenius_pair(OneParameterShape::from_gkz(gkz, principal_kernel_vector(gkz)), order);
}

MirrorMap mirror_map(const FrobeniusPair& pair) {
  const RationalSeries e = exp_series(pair.tau / pair.omega0);
  MirrorMap m;
  m.q_of_z = shift(e, 1) * Rational(Integer(1), pair.scale);
  m.z_of_q = reversion(m.q_of_z);
  return m;
}

RationalSeries yukawa_omega(const ThetaOperator& op, const Rational& c, std::size_t order) {
  const RationalSeries g = yukawa_ode_rhs(op).expand(order);
  if (g[0] != 0) throw ValidationError("Yukawa ODE right-hand side does not vanish at z = 0");
  // log Y = log C + Σ g_n z^n / n
  RationalSeries l(order);
  for (std::size_t k = 1; k <= order; ++k) l[k] = g[k] / Rational(static_cast<long>(k));
  return exp_series(l) * c;
}

RationalSeries yukawa_z(const ThetaOperator& op, const Rational& c, std::size_t order) {
  const RationalSeries w = power_series_solution(op, order);
  return yukawa_omega(op, c, order) / (w * w);
}

Rational classical_normalization(long cover_degree, long base_triple_intersection) {
  if (cover_degree <= 0 || base_triple_intersection <= 0) throw ValidationError("normalization inputs must be positive");
  return Rational(cover_degree * base_triple_intersection);
}

RationalSeries a_model_correlation(const ThetaOperator& op, const FrobeniusPair& pair, const Rational& c,
                                   std::size_t order) {
  if (pair.order() < order + 1) throw ValidationError("Frobenius pair truncated below N + 1");
  const FrobeniusPair p{pair.omega0.truncated(order + 1), pair.tau.truncated(order + 1), pair.scale};
  const MirrorMap m = mirror_map(p);
  const RationalSeries yn = (yukawa_omega(op, c, order) / (p.omega0 * p.omega0).truncated(order));
  const RationalSeries zq = m.z_of_q;
  const RationalSeries ratio = divide_by_z(theta(zq)) / divide_by_z(zq);
  return compose(yn, zq.truncated(order)) * (ratio * ratio * ratio);
}

YukawaData yukawa_data(const ThetaOperator& op, const FrobeniusPair& pair, const Rational& c, std::size_t order) {
  return {c, yukawa_z(op, c, order), a_model_correlation(op, pair, c, order)};
}

}  // namespace fracmirror
