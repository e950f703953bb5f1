#include <gtest/gtest.h>

#include "fracmirror/mirror.hpp"
#include "test_support.hpp"

using namespace fracmirror;
using namespace fracmirror::testing;

namespace {

struct Case {
  ThetaOperator op;
  OneParameterShape shape;
};

Case case_of(const NefPartitionData& d) {
  const GkzData g = build_gkz(d);
  const auto shape = OneParameterShape::from_gkz(g, principal_kernel_vector(g));
  return {theta_conjugate(shape), shape};
}

RationalSeries series(std::initializer_list<const char*> cs, std::size_t order) {
  RatVector v;
  for (const char* c : cs) v.push_back(parse_rational(c));
  return RationalSeries(v, order);
}

// τ_n from the ε-linear part of c(n+ε)/c(ε), Pochhammers expanded in Q[ε]/ε².
RationalSeries tau_oracle(const OneParameterShape& s, std::size_t order) {
  RationalSeries tau(order);
  for (std::size_t n = 0; n <= order; ++n) {
    EpsPolynomial num = EpsPolynomial::linear(2, 1, 0), den = num;
    for (std::size_t i = 0; i < s.k.size(); ++i)
      for (long m = 0; m < s.k[i] * static_cast<long>(n); ++m)
        num *= EpsPolynomial::linear(2, s.a[i] + Rational(m), Rational(s.k[i]));
    for (long l : s.l)
      for (long m = 1; m <= l * static_cast<long>(n); ++m) den *= EpsPolynomial::linear(2, Rational(m), Rational(l));
    const EpsPolynomial c = num * inverse(den);
    tau[n] = (s.total_k() % 2 != 0 && n % 2 == 1) ? -c[1] : c[1];
  }
  return tau;
}

RationalSeries negate_variable(const RationalSeries& s) {
  RationalSeries out = s;
  for (std::size_t n = 1; n <= s.order(); n += 2) out[n] = -out[n];
  return out;
}

}  // namespace

TEST(Frobenius, TauMatchesDeformationOracle) {
  for (const auto& d : {p2_k3(), p3_quartic(), p3_eight_hyperplanes()}) {
    const Case c = case_of(d);
    const FrobeniusPair p = frobenius_pair(c.shape, 12);
    EXPECT_EQ(p.tau, tau_oracle(c.shape, 12));
    EXPECT_EQ(p.tau[0], 0);
    EXPECT_EQ(p.omega0[0], 1);
  }
}

TEST(Frobenius, PairAnnihilated) {
  for (const auto& d : {p2_k3(), p3_quartic(), p3_eight_hyperplanes()}) {
    const Case c = case_of(d);
    const FrobeniusPair p = frobenius_pair(c.shape, 15);
    EXPECT_TRUE(apply(c.op, p.omega1()).is_zero());
    EXPECT_TRUE(apply(c.op, LogSeries(p.omega0)).is_zero());
  }
}

TEST(Frobenius, Scale) {
  EXPECT_EQ(frobenius_scale(case_of(p3_quartic()).shape), 256);
  EXPECT_EQ(frobenius_scale(case_of(p3_eight_hyperplanes()).shape), 256);
  EXPECT_EQ(frobenius_scale(case_of(p2_k3()).shape), 64);
  EXPECT_EQ(frobenius_scale(OneParameterShape{{5}, {Rational(1)}, {1, 1, 1, 1, 1}}), 1);
  EXPECT_THROW(frobenius_scale(OneParameterShape{{3}, {Rational(1, 3)}, {1, 1, 1}}), ValidationError);
}

TEST(MirrorMap, Quartic) {
  const MirrorMap m = mirror_map(frobenius_pair(case_of(p3_quartic()).shape, 10));
  EXPECT_EQ(m.q_of_z.truncated(4), series({"0", "1/256", "247/1024", "13386541/524288", "3634826757/1048576"}, 4));
  EXPECT_EQ(m.z_of_q.truncated(4), series({"0", "256", "-4046848", "18282602496", "-200056818368512"}, 4));
}

TEST(MirrorMap, RoundTripAndStability) {
  for (const auto& d : {p3_quartic(), p3_eight_hyperplanes()}) {
    const MirrorMap m = mirror_map(frobenius_pair(case_of(d).shape, 12));
    EXPECT_EQ(compose(m.q_of_z, m.z_of_q), RationalSeries::variable(12));
    EXPECT_EQ(compose(m.z_of_q, m.q_of_z), RationalSeries::variable(12));
    EXPECT_EQ(mirror_map(frobenius_pair(case_of(d).shape, 7)).z_of_q, m.z_of_q.truncated(7));
  }
}

TEST(MirrorMap, DegenerateTau) {
  FrobeniusPair p = frobenius_pair(case_of(p3_quartic()).shape, 6);
  p.tau = RationalSeries(6);
  const MirrorMap m = mirror_map(p);
  EXPECT_EQ(m.q_of_z, RationalSeries::variable(6) * Rational(1, 256));
  EXPECT_EQ(m.z_of_q, RationalSeries::variable(6) * Rational(256));
}

TEST(Yukawa, OmegaClosedForm) {
  EXPECT_EQ(yukawa_omega(case_of(p3_quartic()).op, 2, 8), RationalSeries::geometric(256, 8) * Rational(2));
  EXPECT_EQ(yukawa_omega(case_of(p3_eight_hyperplanes()).op, 2, 8), RationalSeries::geometric(1, 8) * Rational(2));
  const ThetaOperator flat({RatVector{0, 0, 0, 0, 1}, RatVector{0, 0, 0, 0, -1}});
  EXPECT_EQ(yukawa_omega(flat, 3, 5), RationalSeries::constant(3, 5));
}

TEST(Yukawa, SolvesOde) {
  const ThetaOperator op = case_of(p3_quartic()).op;
  const RationalSeries y = yukawa_omega(op, 2, 10);
  EXPECT_EQ(theta(y), yukawa_ode_rhs(op).expand(10) * y);
  const RationalSeries w = holo_solution(build_gkz(p3_quartic()), 10);
  EXPECT_EQ(yukawa_z(op, 2, 10) * w * w, y);
  EXPECT_EQ(yukawa_z(op, 2, 10)[0], 2);
}

TEST(Yukawa, ClassicalNormalization) {
  EXPECT_EQ(classical_normalization(2, 1), 2);
  EXPECT_EQ(classical_normalization(1, 1), 1);
  EXPECT_THROW(classical_normalization(0, 1), ValidationError);
}

TEST(AModel, Quartic) {
  const Case c = case_of(p3_quartic());
  const RationalSeries k = a_model_correlation(c.op, frobenius_pair(c.shape, 4), 2, 3);
  EXPECT_EQ(k, series({"2", "29504", "1030708800", "38440454795264"}, 3));
}

TEST(AModel, EightHyperplanes) {
  const Case c = case_of(p3_eight_hyperplanes());
  const RationalSeries k = a_model_correlation(c.op, frobenius_pair(c.shape, 6), 2, 5);
  EXPECT_EQ(k, series({"2", "64", "9792", "1404928", "205641280", "30593496064"}, 5));
}

TEST(AModel, IntegralAndStable) {
  const Case c = case_of(p3_quartic());
  const RationalSeries k = a_model_correlation(c.op, frobenius_pair(c.shape, 9), 2, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    EXPECT_TRUE(is_integral(k[n]));
    EXPECT_GE(k[n], 0);
  }
  EXPECT_EQ(a_model_correlation(c.op, frobenius_pair(c.shape, 5), 2, 4), k.truncated(4));
  EXPECT_THROW(a_model_correlation(c.op, frobenius_pair(c.shape, 4), 2, 4), ValidationError);
}

TEST(AModel, QuinticRegression) {
  const OneParameterShape s{{5}, {Rational(1)}, {1, 1, 1, 1, 1}};
  const ThetaOperator op = reduce_left_theta(theta_conjugate(s));
  EXPECT_EQ(display(op), "θ⁴ + 3125z(θ+4/5)(θ+3/5)(θ+2/5)(θ+1/5)");
  const RationalSeries k = a_model_correlation(op, frobenius_pair(s, 4), 5, 3);
  EXPECT_EQ(negate_variable(k), series({"5", "2875", "4876875", "8564575000"}, 3));
}
