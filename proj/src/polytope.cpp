#include <algorithm>
#include <iterator>
#include <set>

#include "fracmirror/lattice.hpp"

namespace fracmirror {

namespace {

void primitivize(Facet& f) {
  Integer g = gcd_of(f.normal);
  if (g == 0) throw AssertionFailure("zero facet normal");
  if (g == 1) return;
  for (auto& a : f.normal) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  if (!mpz_divisible_p(f.offset.get_mpz_t(), g.get_mpz_t()))
    throw AssertionFailure("facet offset not divisible by normal content");
  mpz_divexact(f.offset.get_mpz_t(), f.offset.get_mpz_t(), g.get_mpz_t());
}

// Primitive hyperplane through k affinely independent points of Z^k.
Facet hyperplane_through(const std::vector<const IntVector*>& pts, std::size_t k) {
  IntegerMatrix diffs(k - 1, k);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) diffs(i - 1, j) = (*pts[i])[j] - (*pts[0])[j];
  const LatticeRelations rel = smith_relations(diffs);
  if (rel.kernel.size() != 1) throw AssertionFailure("hyperplane points are dependent");
  Facet f{rel.kernel.front(), 0};
  f.offset = -dot(f.normal, *pts[0]);
  return f;
}

struct DdFacet {
  Facet facet;
  std::vector<std::size_t> incident;  // sorted point indices on the facet
};

struct LocalHull {
  std::vector<Facet> facets;
  std::vector<std::size_t> vertices;
};

// Double description in local coordinates; points span Z^k affinely.
LocalHull local_hull(const std::vector<IntVector>& pts, std::size_t k) {
  LocalHull out;
  if (k == 0) {
    out.vertices = {0};
    return out;
  }
  if (k == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    out.facets.push_back({{Integer(1)}, -pts[lo][0]});
    out.facets.push_back({{Integer(-1)}, pts[hi][0]});
    out.vertices = {lo, hi};
    return out;
  }

  // Greedy initial simplex.
  std::vector<std::size_t> simplex{0};
  {
    std::vector<IntVector> dirs;
    for (std::size_t i = 1; i < pts.size() && simplex.size() < k + 1; ++i) {
      IntVector d(k);
      for (std::size_t j = 0; j < k; ++j) d[j] = pts[i][j] - pts[0][j];
      dirs.push_back(d);
      if (vector_rank(dirs) == dirs.size()) {
        simplex.push_back(i);
      } else {
        dirs.pop_back();
      }
    }
  }
  if (simplex.size() != k + 1) throw AssertionFailure("points do not span the local lattice");

  std::vector<DdFacet> facets;
  for (std::size_t omit = 0; omit <= k; ++omit) {
    std::vector<const IntVector*> on;
    std::vector<std::size_t> inc;
    for (std::size_t s = 0; s <= k; ++s)
      if (s != omit) {
        on.push_back(&pts[simplex[s]]);
        inc.push_back(simplex[s]);
      }
    Facet f = hyperplane_through(on, k);
    if (f.evaluate(pts[simplex[omit]]) < 0) {
      for (auto& a : f.normal) a = -a;
      f.offset = -f.offset;
    }
    std::sort(inc.begin(), inc.end());
    facets.push_back({std::move(f), std::move(inc)});
  }

  std::vector<bool> in_simplex(pts.size(), false);
  for (auto s : simplex) in_simplex[s] = true;

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (in_simplex[p]) continue;
    std::vector<Integer> values(facets.size());
    bool outside = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      values[f] = facets[f].facet.evaluate(pts[p]);
      if (values[f] < 0) outside = true;
    }
    if (!outside) continue;

    std::vector<DdFacet> next;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (values[f] < 0) continue;
      for (std::size_t g = 0; g < facets.size(); ++g) {
        if (values[g] >= 0) continue;
        // f is kept (value > 0 means strictly beneath p), g is visible.
        if (values[f] == 0) continue;
        std::vector<std::size_t> ridge;
        std::set_intersection(facets[f].incident.begin(), facets[f].incident.end(),
                              facets[g].incident.begin(), facets[g].incident.end(),
                              std::back_inserter(ridge));
        if (ridge.size() + 1 < k) continue;
        std::vector<Point> ridge_pts;
        for (auto i : ridge) ridge_pts.push_back(pts[i]);
        if (affine_rank(ridge_pts) != k - 2) continue;
        Facet h;
        h.normal.resize(k);
        for (std::size_t j = 0; j < k; ++j)
          h.normal[j] = values[f] * facets[g].facet.normal[j] - values[g] * facets[f].facet.normal[j];
        h.offset = values[f] * facets[g].facet.offset - values[g] * facets[f].facet.offset;
        primitivize(h);
        ridge.push_back(p);
        std::sort(ridge.begin(), ridge.end());
        next.push_back({std::move(h), std::move(ridge)});
      }
    }
    std::vector<DdFacet> kept;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (values[f] < 0) continue;
      if (values[f] == 0) {
        auto& inc = facets[f].incident;
        inc.insert(std::upper_bound(inc.begin(), inc.end(), p), p);
      }
      kept.push_back(std::move(facets[f]));
    }
    for (auto& n : next) kept.push_back(std::move(n));
    facets = std::move(kept);
  }

  std::set<std::size_t> candidates;
  for (const auto& f : facets) candidates.insert(f.incident.begin(), f.incident.end());
  for (auto c : candidates) {
    std::vector<IntVector> normals;
    for (const auto& f : facets)
      if (std::binary_search(f.incident.begin(), f.incident.end(), c)) normals.push_back(f.facet.normal);
    if (vector_rank(normals) == k) out.vertices.push_back(c);
  }
  for (auto& f : facets) out.facets.push_back(std::move(f.facet));
  return out;
}

}  // namespace

bool LatticePolytope::contains(const Point& x) const {
  if (x.size() != ambient_dim_) return false;
  for (const auto& e : equations_)
    if (e.evaluate(x) != 0) return false;
  if (affine_dim_ == 0) return x == vertices_.front();
  for (const auto& f : facets_)
    if (f.evaluate(x) < 0) return false;
  return true;
}

bool LatticePolytope::relative_interior_contains(const Point& x) const {
  if (!contains(x)) return false;
  for (const auto& f : facets_)
    if (f.evaluate(x) == 0) return false;
  return true;
}

LatticePolytope convex_hull(std::span<const Point> points, std::size_t dim) {
  if (points.empty()) throw ValidationError("no points");
  for (const auto& p : points)
    if (p.size() != dim) throw ValidationError("point dimension mismatch");

  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const AffineFrame frame = affine_frame(sorted);
  std::vector<IntVector> local;
  local.reserve(sorted.size());
  for (const auto& p : sorted) local.push_back(frame.to_local(p));

  LocalHull hull = local_hull(local, frame.dim);

  LatticePolytope poly;
  poly.ambient_dim_ = dim;
  poly.affine_dim_ = frame.dim;
  for (auto v : hull.vertices) poly.vertices_.push_back(sorted[v]);
  std::sort(poly.vertices_.begin(), poly.vertices_.end());

  // Local facet a.y + b >= 0 with y = U_r (x - o) lifts to (U_r^T a).x + b - (U_r^T a).o.
  for (const auto& lf : hull.facets) {
    Facet f;
    f.normal.assign(dim, Integer(0));
    for (std::size_t r = 0; r < frame.dim; ++r)
      for (std::size_t j = 0; j < dim; ++j) f.normal[j] += lf.normal[r] * frame.u(r, j);
    f.offset = lf.offset - dot(f.normal, frame.origin);
    primitivize(f);
    poly.facets_.push_back(std::move(f));
  }
  std::sort(poly.facets_.begin(), poly.facets_.end());
  for (std::size_t r = frame.dim; r < dim; ++r) {
    Facet e{frame.u.row(r), 0};
    e.offset = -dot(e.normal, frame.origin);
    poly.equations_.push_back(std::move(e));
  }
  return poly;
}

LatticePolytope polar_dual(const LatticePolytope& p) {
  if (!p.full_dimensional()) throw ValidationError("polar dual requires a full-dimensional polytope");
  std::vector<Point> verts;
  for (const auto& f : p.facets()) {
    if (f.offset <= 0) throw ValidationError("origin is not an interior point");
    // Normals are primitive, so normal/offset is integral iff offset == 1.
    if (f.offset != 1) throw ValidationError("not reflexive: polar dual has non-integral vertices");
    verts.push_back(f.normal);
  }
  return convex_hull(verts, p.ambient_dim());
}

bool is_reflexive(const LatticePolytope& p) {
  if (!p.full_dimensional() || p.facets().empty()) return false;
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Facet& f) { return f.offset == 1; });
}

std::vector<RatVector> halfspace_vertices(const std::vector<Facet>& halfspaces, std::size_t dim) {
  // Bounded iff the normals positively span: 0 interior to their hull.
  {
    std::vector<Point> normals;
    for (const auto& h : halfspaces) normals.push_back(h.normal);
    if (normals.empty()) throw ValidationError("no halfspaces");
    const LatticePolytope cone_check = convex_hull(normals, dim);
    if (!cone_check.relative_interior_contains(IntVector(dim, Integer(0))) ||
        !cone_check.full_dimensional())
      throw ValidationError("halfspace system is unbounded");
  }

  std::vector<RatVector> out;
  const std::size_t m = halfspaces.size();
  std::vector<std::size_t> idx(dim);
  for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
  if (m < dim) throw ValidationError("too few halfspaces");
  while (true) {
    // Solve the dim x dim system for the chosen subset.
    std::vector<RatVector> a(dim, RatVector(dim + 1));
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) a[r][c] = halfspaces[idx[r]].normal[c];
      a[r][dim] = -halfspaces[idx[r]].offset;
    }
    bool singular = false;
    for (std::size_t c = 0; c < dim && !singular; ++c) {
      std::size_t piv = c;
      while (piv < dim && a[piv][c] == 0) ++piv;
      if (piv == dim) {
        singular = true;
        break;
      }
      std::swap(a[c], a[piv]);
      for (std::size_t r = 0; r < dim; ++r) {
        if (r == c || a[r][c] == 0) continue;
        Rational f = a[r][c] / a[c][c];
        for (std::size_t j = c; j <= dim; ++j) a[r][j] -= f * a[c][j];
      }
    }
    if (!singular) {
      RatVector x(dim);
      for (std::size_t r = 0; r < dim; ++r) x[r] = a[r][dim] / a[r][r];
      bool feasible = true;
      for (const auto& h : halfspaces) {
        Rational s = h.offset;
        for (std::size_t j = 0; j < dim; ++j) s += h.normal[j] * x[j];
        if (s < 0) {
          feasible = false;
          break;
        }
      }
      if (feasible && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    // Next combination.
    std::size_t i = dim;
    while (i > 0 && idx[i - 1] == m - dim + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < dim; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (out.empty()) throw ValidationError("halfspace system is empty");
  std::sort(out.begin(), out.end());
  return out;
}

LatticePolytope polytope_from_halfspaces(const std::vector<Facet>& halfspaces, std::size_t dim) {
  std::vector<Point> pts;
  for (const auto& v : halfspace_vertices(halfspaces, dim)) {
    Point p(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!is_integral(v[j])) throw ValidationError("halfspace polytope has non-integral vertices");
      p[j] = v[j].get_num();
    }
    pts.push_back(std::move(p));
  }
  return convex_hull(pts, dim);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw ValidationError("Minkowski sum dimension mismatch");
  std::vector<Point> sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  return convex_hull(sums, p.ambient_dim());
}

LatticePolytope cayley_polytope(const std::vector<LatticePolytope>& polytopes) {
  if (polytopes.empty()) throw ValidationError("Cayley polytope of no polytopes");
  const std::size_t r = polytopes.size();
  const std::size_t n = polytopes.front().ambient_dim();
  std::vector<Point> pts;
  for (std::size_t s = 0; s < r; ++s) {
    if (polytopes[s].ambient_dim() != n) throw ValidationError("Cayley factors differ in dimension");
    for (const auto& v : polytopes[s].vertices()) {
      Point p(r + n, Integer(0));
      p[s] = 1;
      std::copy(v.begin(), v.end(), p.begin() + static_cast<std::ptrdiff_t>(r));
      pts.push_back(std::move(p));
    }
  }
  return convex_hull(pts, r + n);
}

LatticePolytope pyramid_over(const LatticePolytope& p) {
  if (vector_rank(p.vertices()) != p.affine_dim() + 1)
    throw ValidationError("degenerate pyramid: origin lies in the affine span of the base");
  std::vector<Point> pts = p.vertices();
  pts.emplace_back(p.ambient_dim(), Integer(0));
  return convex_hull(pts, p.ambient_dim());
}

LatticePolytope translate(const LatticePolytope& p, const IntVector& shift) {
  std::vector<Point> pts = p.vertices();
  for (auto& v : pts)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
  return convex_hull(pts, p.ambient_dim());
}

LatticePolytope scale(const LatticePolytope& p, const Integer& factor) {
  std::vector<Point> pts = p.vertices();
  for (auto& v : pts)
    for (auto& x : v) x *= factor;
  return convex_hull(pts, p.ambient_dim());
}

std::vector<Point> lattice_transform(const IntegerMatrix& u, const std::vector<Point>& points) {
  if (u.rows() != u.cols() || abs(u.determinant()) != 1)
    throw ValidationError("not a lattice isomorphism");
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(u * p);
  return out;
}

LatticePolytope lattice_transform(const IntegerMatrix& u, const LatticePolytope& p) {
  return convex_hull(lattice_transform(u, p.vertices()), p.ambient_dim());
}

}  // namespace fracmirror
