#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fracmirror/lattice.hpp"
#include "test_support.hpp"

using namespace fracmirror;
using namespace fracmirror::testing;

namespace {

LatticePolytope p2_delta() { return hull({{2, -1}, {-1, 2}, {-1, -1}}); }
LatticePolytope p2_nabla() { return hull({{1, 0}, {0, 1}, {-1, -1}}); }
LatticePolytope p3_delta() { return hull({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}, {-1, -1, -1}}); }
LatticePolytope p3_nabla() { return hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}); }

Point negated(const Point& p) {
  Point q = p;
  for (auto& x : q) x = -x;
  return q;
}

}  // namespace

TEST(ConvexHull, TriangleFacets) {
  const LatticePolytope t = p2_nabla();
  EXPECT_EQ(t.affine_dim(), 2u);
  EXPECT_EQ(t.vertices(), pts({{-1, -1}, {0, 1}, {1, 0}}));
  std::vector<Facet> expected{{pt({-1, -1}), 1}, {pt({-1, 2}), 1}, {pt({2, -1}), 1}};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(t.facets(), expected);
}

TEST(ConvexHull, SinglePoint) {
  const LatticePolytope p = hull({{0, 0, 0}});
  EXPECT_EQ(p.affine_dim(), 0u);
  EXPECT_TRUE(p.facets().empty());
  EXPECT_EQ(p.equations().size(), 3u);
}

TEST(ConvexHull, UnitSquare) {
  const LatticePolytope sq = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(sq.facets().size(), 4u);
  EXPECT_EQ(sq.vertices().size(), 4u);
}

TEST(ConvexHull, DropsInteriorAndEdgePoints) {
  const LatticePolytope sq = hull({{0, 0}, {2, 0}, {1, 0}, {1, 1}, {0, 2}, {2, 2}, {1, 2}});
  EXPECT_EQ(sq.vertices(), pts({{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
}

TEST(ConvexHull, OrderIndependent) {
  auto a = pts({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}, {-1, -1, -1}, {0, 0, 0}, {1, 1, -1}});
  auto b = a;
  std::reverse(b.begin(), b.end());
  const LatticePolytope pa = convex_hull(a, 3), pb = convex_hull(b, 3);
  EXPECT_EQ(pa.vertices(), pb.vertices());
  EXPECT_EQ(pa.facets(), pb.facets());
}

TEST(ConvexHull, EmptyInputRejected) {
  std::vector<Point> none;
  EXPECT_THROW(convex_hull(none, 2), ValidationError);
}

TEST(ConvexHull, LowerDimensionalInSpan) {
  // A triangle sitting in the plane x0 = 1 of Z^3.
  const LatticePolytope t = hull({{1, 1, 0}, {1, 0, 1}, {1, -1, -1}});
  EXPECT_EQ(t.affine_dim(), 2u);
  EXPECT_EQ(t.equations().size(), 1u);
  EXPECT_EQ(t.facets().size(), 3u);
  EXPECT_TRUE(t.contains(pt({1, 0, 0})));
  EXPECT_FALSE(t.contains(pt({0, 0, 0})));
  EXPECT_TRUE(t.relative_interior_contains(pt({1, 0, 0})));
}

TEST(PolarDual, ProjectivePlane) { EXPECT_EQ(polar_dual(p2_delta()), p2_nabla()); }

TEST(PolarDual, ProjectiveSpace) {
  EXPECT_EQ(polar_dual(p3_delta()), p3_nabla());
  // this vertex list has the origin outside
  EXPECT_THROW(polar_dual(hull({{-3, 1, 1}, {1, -3, 1}, {1, 1, -3}, {-1, -1, -1}})), ValidationError);
  // Its sign-consistent reading is -Delta, whose dual is -nabla.
  const LatticePolytope minus = hull({{-3, 1, 1}, {1, -3, 1}, {1, 1, -3}, {1, 1, 1}});
  std::vector<Point> flipped;
  const LatticePolytope nabla = p3_nabla();
  for (const auto& v : nabla.vertices()) flipped.push_back(negated(v));
  EXPECT_EQ(polar_dual(minus), convex_hull(flipped, 3));
}

TEST(PolarDual, Involution) {
  EXPECT_EQ(polar_dual(polar_dual(p3_delta())), p3_delta());
  EXPECT_EQ(polar_dual(polar_dual(p2_nabla())), p2_nabla());
}

TEST(PolarDual, RejectsOriginOutside) {
  EXPECT_THROW(polar_dual(hull({{1, 1}, {2, 1}, {1, 2}})), ValidationError);
  EXPECT_THROW(polar_dual(hull({{2, 0}, {0, 2}, {-2, -2}})), ValidationError);
}

TEST(Reflexive, Examples) {
  EXPECT_TRUE(is_reflexive(hull({{2, 0, 0, -1}, {0, 2, 0, -1}, {0, 0, 2, -1}, {0, 0, 0, 1}, {-2, -2, -2, -1}})));
  EXPECT_FALSE(is_reflexive(hull({{6, 5}, {5, 6}, {4, 4}})));
  EXPECT_FALSE(is_reflexive(hull({{2, 0}, {0, 2}, {-2, -2}})));
  EXPECT_FALSE(is_reflexive(hull({{0, 0, 0}, {1, 0, 0}})));
}

TEST(LatticePoints, QuarticPolytope) {
  const auto points = lattice_points(p3_delta());
  EXPECT_EQ(points.size(), 35u);
  EXPECT_EQ(std::count_if(points.begin(), points.end(), [](const LatticePoint& p) { return p.interior; }), 1);
  std::vector<Point> plain;
  for (const auto& p : points) plain.push_back(p.point);
  EXPECT_EQ(plain, box_points(p3_delta()));
}

TEST(LatticePoints, SimplexDual) {
  const auto points = lattice_points(p3_nabla());
  ASSERT_EQ(points.size(), 5u);
  for (const auto& p : points) EXPECT_EQ(p.interior, p.point == pt({0, 0, 0}));
}

TEST(LatticePoints, PointPolytope) {
  const auto points = lattice_points(hull({{0, 0}}));
  ASSERT_EQ(points.size(), 1u);
  EXPECT_TRUE(points.front().interior);
}

TEST(LatticePoints, LowerDimensionalMatchesBox) {
  const LatticePolytope c = cayley_polytope({p2_delta(), p2_nabla()});
  std::vector<Point> plain;
  for (const auto& p : lattice_points(c)) plain.push_back(p.point);
  EXPECT_EQ(plain, box_points(c));
}

TEST(Volume, Examples) {
  EXPECT_EQ(normalized_volume(p3_delta()), 64);
  EXPECT_EQ(normalized_volume(p3_delta(), VolumeMethod::kEhrhart), 64);
  EXPECT_EQ(normalized_volume(p2_delta()), 9);
  EXPECT_EQ(normalized_volume(hull({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})), 1);
  EXPECT_EQ(normalized_volume(hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}})), 2);
}

TEST(Volume, DeterminantRequiresSimplex) {
  EXPECT_THROW(normalized_volume(hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), VolumeMethod::kDeterminant),
               ValidationError);
}

TEST(Minkowski, Identity) {
  const LatticePolytope zero = hull({{0, 0, 0}});
  EXPECT_EQ(minkowski_sum(p3_delta(), zero), p3_delta());
}

TEST(Minkowski, SegmentsMakeSquare) {
  EXPECT_EQ(minkowski_sum(hull({{0, 0}, {1, 0}}), hull({{0, 0}, {0, 1}})), hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

TEST(Cayley, SingleFactor) {
  const LatticePolytope c = cayley_polytope({p3_delta()});
  EXPECT_EQ(c.ambient_dim(), 4u);
  EXPECT_EQ(c.affine_dim(), 3u);
  EXPECT_EQ(normalized_volume(c), normalized_volume(p3_delta()));
}

TEST(Cayley, FourUnitSimplices) {
  const LatticePolytope s = hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const LatticePolytope c = cayley_polytope({s, s, s, s});
  EXPECT_EQ(c.ambient_dim(), 7u);
  EXPECT_EQ(c.vertices().size(), 16u);
  EXPECT_EQ(c.affine_dim(), 6u);
}

TEST(Pyramid, MirrorPlaneLambda) {
  EXPECT_EQ(normalized_volume(pyramid_over(cayley_polytope({p2_nabla()}))), 3);
  EXPECT_EQ(normalized_volume(pyramid_over(cayley_polytope({p3_delta()}))), 64);
}

TEST(Pyramid, OverPoint) {
  const LatticePolytope seg = pyramid_over(hull({{1, 0}}));
  EXPECT_EQ(seg.affine_dim(), 1u);
  EXPECT_EQ(normalized_volume(seg), 1);
}

TEST(Pyramid, DegenerateRejected) { EXPECT_THROW(pyramid_over(p2_nabla()), ValidationError); }

TEST(Smith, TransitionRays) {
  const IntegerMatrix m = IntegerMatrix::from_columns(
      pts({{1, 1, -1, 1}, {-1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, -1}, {3, -5, -3, 1}}));
  const LatticeRelations rel = smith_relations(m);
  EXPECT_EQ(rel.index, 8);
  ASSERT_EQ(rel.kernel.size(), 1u);
  Point k = rel.kernel.front();
  if (k[0] < 0) k = negated(k);
  EXPECT_EQ(k, pt({1, 1, 1, 4, 1}));
}

TEST(Smith, Identity) {
  const LatticeRelations rel = smith_relations(IntegerMatrix::identity(4));
  EXPECT_EQ(rel.index, 1);
  EXPECT_TRUE(rel.kernel.empty());
}

TEST(Smith, GkzMatrixKernel) {
  const IntegerMatrix a = IntegerMatrix::from_rows(
      pts({{1, 1, 1, 1, 1}, {0, 1, 0, 0, -1}, {0, 0, 1, 0, -1}, {0, 0, 0, 1, -1}}));
  const LatticeRelations rel = smith_relations(a);
  ASSERT_EQ(rel.kernel.size(), 1u);
  Point k = rel.kernel.front();
  if (k[0] > 0) k = negated(k);
  EXPECT_EQ(k, pt({-4, 1, 1, 1, 1}));
  EXPECT_EQ(rel.index, 1);
}

TEST(Smith, FactorizationHolds) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    IntegerMatrix m(3 + trial % 3, 4 + trial % 2);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.u * m * s.v, s.d);
    EXPECT_EQ(s.u * s.u_inverse, IntegerMatrix::identity(m.rows()));
    EXPECT_EQ(abs(s.u.determinant()), 1);
    EXPECT_EQ(abs(s.v.determinant()), 1);
    for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i)
      EXPECT_TRUE(mpz_divisible_p(s.divisors[i + 1].get_mpz_t(), s.divisors[i].get_mpz_t()));
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j) EXPECT_EQ(s.d(i, j), 0);
  }
}

TEST(Transform, RaysToNus) {
  const IntegerMatrix u = IntegerMatrix::from_rows(pts({{1, 1, 0, 0}, {-1, 0, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, -1}}));
  const auto rho = pts({{1, 1, -1, 1}, {-1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, -1}, {3, -5, -3, 1}});
  EXPECT_EQ(lattice_transform(u, rho),
            pts({{2, 0, 0, -1}, {0, 2, 0, -1}, {0, 0, 2, -1}, {0, 0, 0, 1}, {-2, -2, -2, -1}}));
  EXPECT_EQ(lattice_transform(IntegerMatrix::identity(4), rho), rho);
  IntegerMatrix d = IntegerMatrix::identity(4);
  d(0, 0) = 2;
  EXPECT_THROW(lattice_transform(d, rho), ValidationError);
}

TEST(Halfspaces, UnitSimplexFromInequalities) {
  // m1 >= -1, m2 >= 0, m3 >= 0, -m1-m2-m3 >= 0
  std::vector<Facet> hs{{pt({1, 0, 0}), 1}, {pt({0, 1, 0}), 0}, {pt({0, 0, 1}), 0}, {pt({-1, -1, -1}), 0}};
  const LatticePolytope p = polytope_from_halfspaces(hs, 3);
  EXPECT_EQ(p.vertices(), pts({{-1, 0, 0}, {-1, 0, 1}, {-1, 1, 0}, {0, 0, 0}}));
  EXPECT_EQ(normalized_volume(p), 1);
}

TEST(Halfspaces, UnboundedRejected) {
  std::vector<Facet> hs{{pt({1, 0}), 0}, {pt({0, 1}), 0}};
  EXPECT_THROW(halfspace_vertices(hs, 2), ValidationError);
}

// ---- property checks -------------------------------------------------------

TEST(Properties, EhrhartPolynomialPredictsDilates) {
  for (const auto& p : {p2_delta(), p3_nabla(), hull({{0, 0}, {3, 0}, {1, 2}, {0, 1}}),
                        cayley_polytope({p2_nabla(), p2_nabla()})}) {
    const RatVector c = ehrhart_polynomial(p);
    const std::size_t d = p.affine_dim();
    for (unsigned long k = d + 1; k <= d + 2; ++k) {
      Rational value = 0, power = 1;
      for (const auto& coeff : c) {
        value += coeff * power;
        power *= static_cast<long>(k);
      }
      EXPECT_EQ(value, Rational(count_lattice_points(p, k)));
    }
  }
}

TEST(Properties, VolumeIsUnimodularInvariant) {
  std::mt19937 rng(11);
  for (const auto& p : {p3_delta(), p3_nabla(), minkowski_sum(p3_nabla(), hull({{0, 0, 0}, {1, 1, 0}}))}) {
    const Integer v = normalized_volume(p);
    for (int trial = 0; trial < 3; ++trial) {
      const IntegerMatrix u = random_unimodular(3, rng);
      EXPECT_EQ(normalized_volume(lattice_transform(u, p)), v);
    }
  }
}

TEST(Properties, CayleyOfOneKeepsVolume) {
  for (const auto& p : {p2_delta(), p3_nabla(), hull({{0, 0}, {2, 0}, {0, 1}, {2, 1}})})
    EXPECT_EQ(normalized_volume(cayley_polytope({p})), normalized_volume(p));
}
