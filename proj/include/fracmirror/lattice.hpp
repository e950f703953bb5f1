#pragma once

// Exact lattice/polytope kernel: integer matrices and Smith form, convex hulls
// by double description, polar duals, lattice points and Ehrhart volumes.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracmirror/arith.hpp"

namespace fracmirror {

using Point = IntVector;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows);
  static IntegerMatrix from_columns(const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntegerMatrix transpose() const;
  IntegerMatrix operator*(const IntegerMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntegerMatrix& other) const = default;

  /// Fraction-free (Bareiss) determinant; requires a square matrix.
  Integer determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// D = U * M * V with U, V unimodular and D diagonal, d_i | d_{i+1}.
/// `u_inverse` is U^{-1}, tracked alongside U.
struct SmithForm {
  IntegerMatrix d;
  IntegerMatrix u;
  IntegerMatrix u_inverse;
  IntegerMatrix v;
  std::size_t rank = 0;
  std::vector<Integer> divisors;  // the nonzero diagonal entries
};

SmithForm smith_normal_form(const IntegerMatrix& m);

struct LatticeRelations {
  std::vector<IntVector> kernel;  // saturated basis of ker(M) in Z^cols
  Integer index;                  // [saturation(col span) : col span]
  SmithForm smith;
};

LatticeRelations smith_relations(const IntegerMatrix& m);

/// <normal, x> >= -offset. For equations, equality holds.
struct Facet {
  IntVector normal;
  Integer offset;

  Integer evaluate(const IntVector& x) const { return dot(normal, x) + offset; }
  bool operator==(const Facet&) const = default;
  std::weak_ordering operator<=>(const Facet&) const = default;
};

/// Affine lattice frame of a point set: y = U_r (x - origin) are coordinates
/// in a basis of the saturated lattice of the affine span.
struct AffineFrame {
  Point origin;
  std::size_t dim = 0;      // affine dimension
  IntegerMatrix u;          // ambient x ambient, unimodular
  IntegerMatrix u_inverse;

  IntVector to_local(const Point& x) const;
  Point to_ambient(const IntVector& y) const;
};

AffineFrame affine_frame(std::span<const Point> points);

class LatticePolytope {
 public:
  LatticePolytope() = default;

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == ambient_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Affine hull equations; empty for full-dimensional polytopes.
  const std::vector<Facet>& equations() const { return equations_; }

  bool contains(const Point& x) const;
  /// Contained and on no facet (relative interior).
  bool relative_interior_contains(const Point& x) const;

  bool operator==(const LatticePolytope& other) const {
    return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_;
  }

 private:
  friend LatticePolytope convex_hull(std::span<const Point> points, std::size_t dim);

  std::size_t ambient_dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> equations_;
};

/// Exact double-description hull; output independent of input order.
LatticePolytope convex_hull(std::span<const Point> points, std::size_t dim);
inline LatticePolytope convex_hull(const std::vector<Point>& points, std::size_t dim) {
  return convex_hull(std::span<const Point>(points), dim);
}

/// P^v = { y : <x, y> >= -1 for all x in P }. Throws if 0 is not interior or
/// if the dual has non-integral vertices.
LatticePolytope polar_dual(const LatticePolytope& p);

bool is_reflexive(const LatticePolytope& p);

/// Vertices of { x : <a_i, x> >= -b_i }, which must be bounded and nonempty.
std::vector<RatVector> halfspace_vertices(const std::vector<Facet>& halfspaces,
                                          std::size_t dim);
/// Same, but requires integral vertices.
LatticePolytope polytope_from_halfspaces(const std::vector<Facet>& halfspaces,
                                         std::size_t dim);

struct LatticePoint {
  Point point;
  bool interior = false;
  bool operator==(const LatticePoint&) const = default;
};

/// All lattice points, lexicographically sorted, tagged interior/boundary
/// relative to the affine span.
std::vector<LatticePoint> lattice_points(const LatticePolytope& p);
/// Number of lattice points of the dilate kP.
Integer count_lattice_points(const LatticePolytope& p, unsigned long k = 1);

enum class VolumeMethod { kAuto, kEhrhart, kDeterminant };

/// affine_dim! times the Euclidean volume in the lattice of the affine span.
Integer normalized_volume(const LatticePolytope& p, VolumeMethod method = VolumeMethod::kAuto);

/// Ehrhart polynomial coefficients c_0..c_d (d = affine_dim), exact.
RatVector ehrhart_polynomial(const LatticePolytope& p);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope cayley_polytope(const std::vector<LatticePolytope>& polytopes);
LatticePolytope pyramid_over(const LatticePolytope& p);
LatticePolytope translate(const LatticePolytope& p, const IntVector& shift);
LatticePolytope scale(const LatticePolytope& p, const Integer& factor);

/// Applies a unimodular matrix to points; throws "not a lattice isomorphism".
std::vector<Point> lattice_transform(const IntegerMatrix& u, const std::vector<Point>& points);
LatticePolytope lattice_transform(const IntegerMatrix& u, const LatticePolytope& p);

/// Rank of a set of rational-coordinate vectors.
std::size_t vector_rank(const std::vector<IntVector>& vectors);
std::size_t affine_rank(std::span<const Point> points);

}  // namespace fracmirror
