#include <gtest/gtest.h>

#include <algorithm>

#include "fracmirror/nef_partition.hpp"
#include "test_support.hpp"

using namespace fracmirror;
using namespace fracmirror::testing;

namespace {

// Lattice points of { m : <m,rho> >= -1 on `part`, >= 0 elsewhere } by scanning a box.
LatticePolytope halfspace_oracle(const std::vector<Point>& rays, const std::vector<std::size_t>& part, long radius) {
  std::vector<Point> inside;
  const std::size_t n = rays.front().size();
  Point cur(n, Integer(-radius));
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < rays.size() && ok; ++r) {
      const bool mine = std::find(part.begin(), part.end(), r) != part.end();
      ok = dot(cur, rays[r]) >= (mine ? -1 : 0);
    }
    if (ok) inside.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == radius) cur[i++] = -radius;
    if (i == n) break;
    cur[i] += 1;
  }
  return convex_hull(inside, n);
}

bool check_passed(const std::vector<Diagnostic>& diags, const std::string& name) {
  for (const auto& d : diags)
    if (d.check == name) return d.passed;
  ADD_FAILURE() << "no check named " << name;
  return false;
}

LatticePolytope hexagon_dual() {
  return polar_dual(hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}}));
}

}  // namespace

TEST(PolytopeOfPart, TrivialPartitionIsDelta) {
  EXPECT_EQ(polytope_of_part(p3_anticanonical(), {{0, 1, 2, 3}}, 0), p3_anticanonical());
  EXPECT_EQ(polytope_of_part(p2_anticanonical(), {{0, 1, 2}}, 0), hull({{2, -1}, {-1, 2}, {-1, -1}}));
}

TEST(PolytopeOfPart, EightHyperplanePartsAreUnitSimplices) {
  const NefPartitionData d = p3_eight_hyperplanes();
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(normalized_volume(d.parts_delta[i]), 1);
    EXPECT_EQ(d.parts_delta[i], halfspace_oracle(d.rays, d.ray_parts[i], 4));
  }
}

TEST(PolytopeOfPart, EmptyPartRejected) {
  EXPECT_THROW(polytope_of_part(p2_anticanonical(), {{}, {0, 1, 2}}, 0), ValidationError);
}

TEST(DualNef, ProjectivePlane) {
  const NefPartitionData d = p2_k3();
  EXPECT_EQ(d.nabla, hull({{1, 0}, {0, 1}, {-1, -1}}));
  EXPECT_EQ(d.nabla_dual, p2_anticanonical());
}

TEST(DualNef, ProjectiveSpace) {
  const NefPartitionData d = p3_quartic();
  EXPECT_EQ(d.nabla, hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}));
  ASSERT_EQ(d.nabla_parts.size(), 1u);
  EXPECT_EQ(d.nabla_parts[0], d.nabla);
}

TEST(DualNef, EightHyperplaneNablaIsSumOfSegments) {
  const NefPartitionData d = p3_eight_hyperplanes();
  LatticePolytope sum = d.nabla_parts[0];
  for (std::size_t k = 1; k < 4; ++k) sum = minkowski_sum(sum, d.nabla_parts[k]);
  EXPECT_EQ(sum, d.nabla);
  EXPECT_TRUE(is_reflexive(d.nabla));
  EXPECT_EQ(dual_partition(d).delta, d.nabla);
}

TEST(DualNef, RoundTripSwapsParts) {
  for (const auto& d : {p2_k3(), p2_six_lines(), p3_quartic(), p3_eight_hyperplanes()}) {
    const NefPartitionData dual = dual_partition(d);
    EXPECT_EQ(dual.parts_delta, d.nabla_parts);
    EXPECT_EQ(dual.nabla_parts, d.parts_delta);
    const NefPartitionData back = dual_partition(dual);
    EXPECT_EQ(back.delta, d.delta);
    EXPECT_EQ(back.ray_parts, d.ray_parts);
  }
}

TEST(DualNef, MinkowskiSumOfPartsIsDelta) {
  for (const auto& d : {p2_six_lines(), p3_eight_hyperplanes()}) {
    LatticePolytope sum = d.parts_delta[0];
    for (std::size_t i = 1; i < d.num_parts(); ++i) sum = minkowski_sum(sum, d.parts_delta[i]);
    EXPECT_EQ(sum, d.delta);
  }
}

TEST(Validate, ExampleAllPass) {
  const auto diags = validate(p2_anticanonical(), {{0, 1, 2}});
  EXPECT_FALSE(diags.empty());
  for (const auto& d : diags) EXPECT_TRUE(d.passed) << d.check << ": " << d.detail;
}

TEST(Validate, DuplicatedRay) {
  const auto diags = validate(p2_anticanonical(), {{0, 1}, {1, 2}});
  EXPECT_FALSE(check_passed(diags, "is a partition"));
  EXPECT_THROW(make_nef_partition(p2_anticanonical(), {{0, 1}, {1, 2}}), ValidationError);
}

TEST(Validate, NonReflexiveDelta) {
  const LatticePolytope big = hull({{2, 0}, {0, 2}, {-2, -2}});
  const auto diags = validate(big, {{0, 1, 2}});
  EXPECT_FALSE(check_passed(diags, "delta reflexive"));
  EXPECT_EQ(diags.front().detail, "delta not reflexive");
  EXPECT_THROW(make_nef_partition(big, {{0, 1, 2}}), ValidationError);
}

TEST(Validate, ExceptionalCurveAloneIsNotNef) {
  // Rays of dP6 in lex order; index 5 is (1,1), a (-1)-curve.
  const LatticePolytope delta = hexagon_dual();
  const PartIndices parts{{5}, {0, 1, 2, 3, 4}};
  const auto diags = validate(delta, parts);
  EXPECT_TRUE(check_passed(diags, "is a partition"));
  EXPECT_TRUE(std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return !d.passed; }));
  EXPECT_THROW(make_nef_partition(delta, parts), AssertionFailure);
}

TEST(Validate, HexagonNefPartition) {
  // Consecutive rays: {(0,1),(1,0),(1,1)} and {(-1,-1),(-1,0),(0,-1)}.
  const NefPartitionData d = make_nef_partition(hexagon_dual(), {{3, 4, 5}, {0, 1, 2}});
  EXPECT_THROW(make_nef_partition(hexagon_dual(), {{0, 3, 4}, {1, 2, 5}}), AssertionFailure);
  EXPECT_EQ(d.num_parts(), 2u);
  EXPECT_TRUE(is_reflexive(d.nabla));
}
