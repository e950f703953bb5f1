#include <gtest/gtest.h>

#include <random>

#include "fracmirror/series.hpp"

using namespace fracmirror;

namespace {

RationalSeries series_of(std::initializer_list<long> xs, std::size_t order) {
  RatVector c;
  for (long x : xs) c.emplace_back(x);
  return RationalSeries(c, order);
}

RationalSeries random_series(std::mt19937& rng, std::size_t order, bool unit_constant = false) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  RationalSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) {
    s[n] = Rational(num(rng), den(rng));
    s[n].canonicalize();
  }
  if (unit_constant) s[0] = 1;
  return s;
}

RationalSeries power(const RationalSeries& s, long e) {
  RationalSeries out = RationalSeries::constant(1, s.order());
  const RationalSeries base = e >= 0 ? s : RationalSeries::constant(1, s.order()) / s;
  for (long i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

// [q^n] z(q) = (1/n) [z^{n-1}] u(z)^{-n} for q = z u(z).
RationalSeries lagrange_inverse(const RationalSeries& q) {
  const std::size_t order = q.order();
  RationalSeries u(order);
  for (std::size_t n = 0; n < order; ++n) u[n] = q[n + 1];
  RationalSeries z(order);
  for (std::size_t n = 1; n <= order; ++n) z[n] = power(u, -static_cast<long>(n))[n - 1] / static_cast<long>(n);
  return z;
}

}  // namespace

TEST(Series, DifferenceOfSquares) {
  EXPECT_EQ(series_of({1, 1}, 4) * series_of({1, -1}, 4), series_of({1, 0, -1}, 4));
}

TEST(Series, GeometricDivision) {
  const RationalSeries one = RationalSeries::constant(1, 12);
  const RationalSeries g = one / series_of({1, -256}, 12);
  Integer p = 1;
  for (std::size_t n = 0; n <= 12; ++n, p *= 256) EXPECT_EQ(g[n], Rational(p));
  EXPECT_EQ(g, RationalSeries::geometric(256, 12));
}

TEST(Series, DivisionByNonUnit) {
  EXPECT_THROW(RationalSeries::constant(1, 5) / RationalSeries::variable(5), ValidationError);
}

TEST(Series, TruncationIsMinimum) {
  const RationalSeries a = series_of({1, 2, 3}, 7), b = series_of({4, 5}, 3);
  EXPECT_EQ((a * b).order(), 3u);
  EXPECT_EQ((a + b).order(), 3u);
  EXPECT_EQ((a / b).order(), 3u);
  EXPECT_THROW(b.truncated(5), ValidationError);
}

TEST(Series, ExpLog) {
  const RationalSeries one_plus_z = series_of({1, 1}, 10);
  EXPECT_EQ(exp_series(log_series(one_plus_z)), one_plus_z);
  const RationalSeries l = log_series(RationalSeries::constant(1, 10) / series_of({1, -1}, 10));
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(l[n], Rational(1, static_cast<long>(n)));
  EXPECT_EQ(l[0], 0);
  EXPECT_THROW(exp_series(one_plus_z), ValidationError);
  EXPECT_THROW(log_series(series_of({2, 1}, 3)), ValidationError);
}

TEST(Series, ReversionQuarticMirrorMap) {
  RationalSeries q(3);
  q[1] = Rational(1, 256);
  q[2] = Rational(247, 1024);
  q[3] = Rational(13386541, 524288);
  const RationalSeries z = reversion(q);
  EXPECT_EQ(z[1], 256);
  EXPECT_EQ(z[2], -4046848);
  EXPECT_EQ(z[3], Rational(Integer("18282602496")));
  // The transposed digits 13368541 do not invert to 18282602496.
  q[3] = Rational(13368541, 524288);
  EXPECT_EQ(reversion(q)[3], Rational(Integer("18430058496")));
}

TEST(Series, ReversionIdentityAndCatalan) {
  EXPECT_EQ(reversion(RationalSeries::variable(6)), RationalSeries::variable(6));
  EXPECT_EQ(reversion(series_of({0, 1, 1}, 6)), series_of({0, 1, -1, 2, -5, 14, -42}, 6));
  EXPECT_THROW(reversion(series_of({0, 0, 1}, 4)), ValidationError);
  EXPECT_THROW(reversion(series_of({1, 1}, 4)), ValidationError);
}

TEST(Series, ThetaBasics) {
  RationalSeries zn(8);
  zn[5] = 1;
  EXPECT_EQ(theta(zn), 5 * zn);
  const LogSeries t = theta(log_variable(6));
  EXPECT_EQ(t, LogSeries(RationalSeries::constant(1, 6)));
}

TEST(Series, LogLeibniz) {
  std::mt19937 rng(3);
  const RationalSeries s = random_series(rng, 8);
  const LogSeries lam = log_variable(8);
  // θ(Λ² S) = 2Λ S + Λ² θS
  const LogSeries lhs = theta(lam * lam * LogSeries(s));
  const LogSeries rhs = Rational(2) * (lam * LogSeries(s)) + lam * lam * LogSeries(theta(s));
  EXPECT_EQ(lhs, rhs);
}

// ---- properties ----------------------------------------------------------

TEST(SeriesProperties, RingAxioms) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 9), b = random_series(rng, 9), c = random_series(rng, 9);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(SeriesProperties, DivisionInvertsMultiplication) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 9), b = random_series(rng, 9, true);
    EXPECT_EQ((a * b) / b, a);
  }
}

TEST(SeriesProperties, ExpLogInverse) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    RationalSeries s = random_series(rng, 10);
    s[0] = 0;
    EXPECT_EQ(log_series(exp_series(s)), s);
    const RationalSeries u = random_series(rng, 10, true);
    EXPECT_EQ(exp_series(log_series(u)), u);
  }
}

TEST(SeriesProperties, ReversionRoundTripAgainstLagrange) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    RationalSeries q = random_series(rng, 16);
    q[0] = 0;
    if (q[1] == 0) q[1] = 1;
    const RationalSeries z = reversion(q);
    EXPECT_EQ(z, lagrange_inverse(q));
    EXPECT_EQ(compose(q, z), RationalSeries::variable(16));
    EXPECT_EQ(compose(z, q), RationalSeries::variable(16));
  }
}

TEST(SeriesProperties, ComposeAgainstDirectPowers) {
  std::mt19937 rng(9);
  const auto f = random_series(rng, 7);
  auto g = random_series(rng, 7);
  g[0] = 0;
  RationalSeries direct(7), gp = RationalSeries::constant(1, 7);
  for (std::size_t k = 0; k <= 7; ++k, gp = gp * g) direct += f[k] * gp;
  EXPECT_EQ(compose(f, g), direct);
}

TEST(EpsPolynomial, InverseAndProducts) {
  const EpsPolynomial a(RatVector{Rational(2), Rational(3), Rational(-1), Rational(5)});
  EXPECT_EQ(a * inverse(a), EpsPolynomial(4, 1));
  EXPECT_THROW(inverse(EpsPolynomial(RatVector{Rational(0), Rational(1)})), ValidationError);
  const EpsPolynomial e = EpsPolynomial::linear(3, 0, 1);
  EXPECT_EQ(e * e * e, EpsPolynomial(3, 0));
}

TEST(NilpotentSeries, DegeneratesAtOrderOne) {
  std::mt19937 rng(10);
  const auto a = random_series(rng, 8), b = random_series(rng, 8);
  const auto na = NilpotentSeries::embed(a, 1), nb = NilpotentSeries::embed(b, 1);
  EXPECT_EQ((na * nb).slice(0).part(0), a * b);
  EXPECT_EQ((na + nb).slice(0).part(0), a + b);
  EXPECT_EQ(theta(na).slice(0).part(0), theta(a));
}

TEST(NilpotentSeries, ExpEpsLogIsZPowerEps) {
  // θ z^ε = ε z^ε
  const NilpotentSeries zeps = NilpotentSeries::exp_eps_log(1, 4, 6);
  std::vector<LogSeries> eps_slices(4, LogSeries(RationalSeries(6)));
  eps_slices[1] = LogSeries(RationalSeries::constant(1, 6));
  const NilpotentSeries eps(eps_slices);
  EXPECT_EQ(theta(zeps), eps * zeps);
  // z^{2ε} = z^ε · z^ε
  EXPECT_EQ(NilpotentSeries::exp_eps_log(2, 4, 6), zeps * zeps);
}

TEST(NilpotentSeries, NilpotencyEnforced) {
  std::vector<LogSeries> slices(3, LogSeries(RationalSeries(4)));
  slices[1] = LogSeries(RationalSeries::constant(1, 4));
  const NilpotentSeries eps(slices);
  EXPECT_TRUE((eps * eps * eps).is_zero());
  EXPECT_FALSE((eps * eps).is_zero());
}
