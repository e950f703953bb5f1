#include "fracmirror/cohom_series.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <string>

namespace fracmirror {

namespace {

// (x + yε)_count in Q[ε]/ε^m.
EpsPolynomial eps_rising(std::size_t m, const Rational& x, const Rational& y, unsigned long count) {
  EpsPolynomial p(m, 1);
  for (unsigned long j = 0; j < count; ++j) p *= EpsPolynomial::linear(m, x + Rational(static_cast<long>(j)), y);
  return p;
}

}  // namespace

CohomRing CohomRing::one_parameter(const GkzData& gkz, const IntVector& ell, std::size_t m, const Rational& top,
                                   const Rational& lambda) {
  if (ell.size() != gkz.a.cols()) throw ValidationError("ℓ has wrong length");
  CohomRing r;
  r.m = m;
  r.top_integral = top;
  for (const auto& x : ell) r.divisors.push_back(lambda * Rational(x));
  return r;
}

Rational CohomRing::integral(const EpsPolynomial& x) const {
  if (x.nilpotency() < m) return 0;
  return top_integral * x[m - 1];
}

bool CohomRing::relations_hold(const GkzData& gkz) const {
  std::map<std::size_t, Rational> sums;
  for (std::size_t c = 0; c < divisors.size(); ++c) sums[gkz.column_labels[c].first] += divisors[c];
  for (const auto& [part, s] : sums)
    if (s != 0) return false;
  return true;
}

NilpotentSeries deformed_solution(const OneParameterShape& shape, std::size_t order, std::size_t m) {
  std::vector<EpsPolynomial> coeffs;
  const bool odd = shape.total_k() % 2 != 0;
  for (std::size_t n = 0; n <= order; ++n) {
    EpsPolynomial num(m, 1), den(m, 1);
    for (std::size_t i = 0; i < shape.k.size(); ++i)
      num *= eps_rising(m, shape.a[i], Rational(shape.k[i]), static_cast<unsigned long>(shape.k[i]) * n);
    for (long l : shape.l) den *= eps_rising(m, Rational(1), Rational(l), static_cast<unsigned long>(l) * n);
    EpsPolynomial c = num * inverse(den);
    if (odd && n % 2 == 1) c = EpsPolynomial(m, -1) * c;
    coeffs.push_back(c);
  }
  return NilpotentSeries::from_coefficients(coeffs);
}

FrobeniusResidue frobenius_residue(const ThetaOperator& op, const NilpotentSeries& deformed) {
  const std::size_t m = deformed.nilpotency();
  const std::size_t d = op.degree();
  if (m != d + 1) throw ValidationError("frobenius residue needs nilpotency degree + 1");
  const std::size_t order = deformed.order();
  FrobeniusResidue out;
  out.degree = d;
  out.residue = apply(op, NilpotentSeries::exp_eps_log(1, m, order) * deformed);
  for (std::size_t k = 0; k < m; ++k) {
    const LogSeries& slice = out.residue.slice(k);
    for (std::size_t n = 0; n <= order; ++n) {
      bool bad = false;
      for (std::size_t j = 0; j <= slice.log_degree(); ++j) {
        const Rational expect = (k == d && j == 0 && n == 0) ? Rational(1) : Rational(0);
        if (slice.part(j)[n] != expect) bad = true;
      }
      if (bad) out.offending.emplace_back(n, k);
    }
  }
  return out;
}

NilpotentSeries b_series(const CohomRing& ring, const GkzData& gkz, const IntVector& ell, std::size_t order) {
  if (gkz.kernel.size() != 1) throw ValidationError("b_series needs a rank-one kernel");
  if (ring.divisors.size() != ell.size()) throw ValidationError("ring does not match the GKZ columns");
  // D = λℓε for a single λ.
  std::optional<Rational> lambda;
  for (std::size_t c = 0; c < ell.size(); ++c) {
    if (ell[c] == 0) {
      if (ring.divisors[c] != 0) throw ValidationError("non-rank-1 ring");
      continue;
    }
    const Rational r = ring.divisors[c] / Rational(ell[c]);
    if (lambda && *lambda != r) throw ValidationError("non-rank-1 ring");
    lambda = r;
  }
  if (!lambda) throw ValidationError("non-rank-1 ring");

  const std::size_t m = ring.m;
  long sum0 = 0;
  for (std::size_t c = 0; c < ell.size(); ++c)
    if (gkz.column_labels[c].second == 0) sum0 += ell[c].get_si();
  std::vector<EpsPolynomial> coeffs;
  for (std::size_t n = 0; n <= order; ++n) {
    EpsPolynomial c(m, 1);
    for (std::size_t col = 0; col < ell.size(); ++col) {
      const long l = ell[col].get_si();
      const auto count = static_cast<unsigned long>(std::labs(l)) * n;
      if (l < 0) {
        // Γ(-ℓn - D + γ)/Γ(-D + γ) with γ = -α
        c *= eps_rising(m, -gkz.alpha[col], -ring.divisors[col], count);
      } else if (l > 0) {
        c *= inverse(eps_rising(m, Rational(1) + gkz.alpha[col], ring.divisors[col], count));
      }
    }
    if (sum0 % 2 != 0 && n % 2 == 1) c = EpsPolynomial(m, -1) * c;
    coeffs.push_back(c);
  }
  return NilpotentSeries::exp_eps_log(*lambda, m, order) * NilpotentSeries::from_coefficients(coeffs);
}

NilpotentSeries i_function_untwisted(const std::vector<long>& numerator, const std::vector<long>& denominator,
                                     std::size_t m, std::size_t order) {
  for (long w : numerator)
    if (w <= 0) throw ValidationError("weights must be positive");
  for (long w : denominator)
    if (w <= 0) throw ValidationError("weights must be positive");
  std::vector<EpsPolynomial> coeffs;
  for (std::size_t d = 0; d <= order; ++d) {
    EpsPolynomial num(m, 1), den(m, 1);
    for (long w : numerator) num *= eps_rising(m, Rational(1), Rational(w), static_cast<unsigned long>(w) * d);
    for (long w : denominator) den *= eps_rising(m, Rational(1), Rational(w), static_cast<unsigned long>(w) * d);
    coeffs.push_back(num * inverse(den));
  }
  return NilpotentSeries::exp_eps_log(1, m, order) * NilpotentSeries::from_coefficients(coeffs);
}

RationalSeries i_function_mirror_map(const NilpotentSeries& i_function) {
  if (i_function.nilpotency() < 2) throw ValidationError("I-function needs nilpotency at least 2");
  const RationalSeries a = i_function.slice(0).part(0);
  if (a[0] == 0) throw ValidationError("A(q) is not a unit");
  const LogSeries& first = i_function.slice(1);
  if (first.part(1) != a) throw AssertionFailure("ε¹ component is not AΛ + B");
  return first.part(0) / a;
}

std::vector<RatVector> pairing_matrix(const CohomRing& ring, const std::vector<EpsPolynomial>& basis) {
  std::vector<RatVector> g(basis.size(), RatVector(basis.size(), Rational(0)));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = ring.integral(basis[i] * basis[j]);
  return g;
}

}  // namespace fracmirror
