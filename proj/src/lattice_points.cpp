#include <algorithm>
#include <cstdint>
#include <functional>

#include "fracmirror/lattice.hpp"

namespace fracmirror {

namespace {

inline long long floor_div_ll(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long long ceil_div_ll(long long a, long long b) { return -floor_div_ll(-a, b); }
inline Integer floor_div_any(const Integer& a, const Integer& b) { return floor_div(a, b); }
inline Integer ceil_div_any(const Integer& a, const Integer& b) { return ceil_div(a, b); }
inline long long floor_div_any(long long a, long long b) { return floor_div_ll(a, b); }
inline long long ceil_div_any(long long a, long long b) { return ceil_div_ll(a, b); }

template <typename T>
T convert(const Integer& z);
template <>
Integer convert<Integer>(const Integer& z) { return z; }
template <>
long long convert<long long>(const Integer& z) { return z.get_si(); }

// Facets of the projections of a full-dimensional polytope onto its leading
// coordinates. Level j constrains (y_0..y_j).
struct ProjectionTower {
  std::size_t dim = 0;
  std::vector<std::vector<Facet>> levels;
  std::vector<Facet> own;  // facets of the polytope itself (== last level)
  Integer max_coeff = 0;
  Integer max_offset = 0;
  Integer max_coord = 0;
};

ProjectionTower build_tower(const std::vector<IntVector>& local_vertices, std::size_t k) {
  ProjectionTower t;
  t.dim = k;
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<Point> proj;
    proj.reserve(local_vertices.size());
    for (const auto& v : local_vertices) proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j));
    LatticePolytope pj = convex_hull(proj, j);
    t.levels.push_back(pj.facets());
  }
  t.own = t.levels.back();
  for (const auto& lvl : t.levels)
    for (const auto& f : lvl) {
      for (const auto& a : f.normal) t.max_coeff = std::max(t.max_coeff, Integer(abs(a)));
      t.max_offset = std::max(t.max_offset, Integer(abs(f.offset)));
    }
  for (const auto& v : local_vertices)
    for (const auto& x : v) t.max_coord = std::max(t.max_coord, Integer(abs(x)));
  return t;
}

template <typename T>
class Enumerator {
 public:
  Enumerator(const ProjectionTower& tower, unsigned long k) : k_(tower.dim) {
    for (const auto& lvl : tower.levels) {
      std::vector<std::pair<std::vector<T>, T>> rows;
      for (const auto& f : lvl) {
        std::vector<T> a;
        for (const auto& x : f.normal) a.push_back(convert<T>(x));
        rows.emplace_back(std::move(a), convert<T>(f.offset) * T(static_cast<long>(k)));
      }
      levels_.push_back(std::move(rows));
    }
    prefix_.assign(k_, T(0));
  }

  // Calls visit(prefix) for every lattice point; returns the count.
  Integer run(const std::function<void(const std::vector<T>&)>* visit) {
    count_ = 0;
    visit_ = visit;
    recurse(0);
    return count_;
  }

 private:
  bool bounds(std::size_t j, T& lo, T& hi) const {
    bool has_lo = false, has_hi = false;
    for (const auto& [a, b] : levels_[j]) {
      T s = b;
      for (std::size_t i = 0; i < j; ++i) s += a[i] * prefix_[i];
      const T& aj = a[j];
      if (aj > 0) {
        T bound = ceil_div_any(T(-s), aj);
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else if (aj < 0) {
        T bound = floor_div_any(s, T(-aj));
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      } else if (s < 0) {
        return false;
      }
    }
    if (!has_lo || !has_hi) throw AssertionFailure("unbounded projection during enumeration");
    return lo <= hi;
  }

  void recurse(std::size_t j) {
    T lo{}, hi{};
    if (!bounds(j, lo, hi)) return;
    if (j + 1 == k_ && visit_ == nullptr) {
      count_ += Integer(to_integer(T(hi - lo))) + 1;
      return;
    }
    for (T y = lo; y <= hi; y += 1) {
      prefix_[j] = y;
      if (j + 1 == k_) {
        count_ += 1;
        (*visit_)(prefix_);
      } else {
        recurse(j + 1);
      }
    }
  }

  static Integer to_integer(const Integer& z) { return z; }
  static Integer to_integer(long long z) { return Integer(static_cast<long>(z)); }

  std::size_t k_;
  std::vector<std::vector<std::pair<std::vector<T>, T>>> levels_;
  std::vector<T> prefix_;
  Integer count_ = 0;
  const std::function<void(const std::vector<T>&)>* visit_ = nullptr;
};

bool fits_machine_words(const ProjectionTower& t, unsigned long k) {
  const Integer limit = Integer(1) << 24;
  return t.max_coeff < limit && t.max_offset * k < limit && t.max_coord * k < limit && t.dim <= 32;
}

struct LocalData {
  AffineFrame frame;
  std::vector<IntVector> vertices;
};

LocalData local_data(const LatticePolytope& p) {
  LocalData d;
  d.frame = affine_frame(p.vertices());
  for (const auto& v : p.vertices()) d.vertices.push_back(d.frame.to_local(v));
  return d;
}

Integer count_local(const ProjectionTower& tower, unsigned long k) {
  if (fits_machine_words(tower, k)) {
    Enumerator<long long> e(tower, k);
    return e.run(nullptr);
  }
  Enumerator<Integer> e(tower, k);
  return e.run(nullptr);
}

}  // namespace

Integer count_lattice_points(const LatticePolytope& p, unsigned long k) {
  if (k == 0 || p.affine_dim() == 0) return 1;
  const LocalData d = local_data(p);
  return count_local(build_tower(d.vertices, d.frame.dim), k);
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& p) {
  std::vector<LatticePoint> out;
  if (p.affine_dim() == 0) {
    out.push_back({p.vertices().front(), true});
    return out;
  }
  const LocalData d = local_data(p);
  const ProjectionTower tower = build_tower(d.vertices, d.frame.dim);

  auto record = [&](const IntVector& y) {
    bool interior = true;
    for (const auto& f : tower.own)
      if (f.evaluate(y) == 0) {
        interior = false;
        break;
      }
    out.push_back({d.frame.to_ambient(y), interior});
  };

  if (fits_machine_words(tower, 1)) {
    std::function<void(const std::vector<long long>&)> visit = [&](const std::vector<long long>& y) {
      IntVector z;
      z.reserve(y.size());
      for (auto v : y) z.emplace_back(static_cast<long>(v));
      record(z);
    };
    Enumerator<long long>(tower, 1).run(&visit);
  } else {
    std::function<void(const std::vector<Integer>&)> visit = [&](const std::vector<Integer>& y) { record(y); };
    Enumerator<Integer>(tower, 1).run(&visit);
  }
  std::sort(out.begin(), out.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.point < b.point; });
  return out;
}

namespace {

Integer simplex_volume(const LocalData& d) {
  const std::size_t k = d.frame.dim;
  IntegerMatrix edges(k, k);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 0; j < k; ++j) edges(i - 1, j) = d.vertices[i][j] - d.vertices[0][j];
  return abs(edges.determinant());
}

std::vector<Integer> ehrhart_values(const LatticePolytope& p, std::size_t upto) {
  const LocalData d = local_data(p);
  const ProjectionTower tower = build_tower(d.vertices, d.frame.dim);
  std::vector<Integer> values{Integer(1)};
  for (unsigned long t = 1; t <= upto; ++t) values.push_back(count_local(tower, t));
  return values;
}

}  // namespace

Integer normalized_volume(const LatticePolytope& p, VolumeMethod method) {
  const std::size_t k = p.affine_dim();
  if (k == 0) return 1;
  const bool simplex = p.vertices().size() == k + 1;
  if (method == VolumeMethod::kDeterminant || (method == VolumeMethod::kAuto && simplex)) {
    if (!simplex) throw ValidationError("determinant volume requires a simplex");
    return simplex_volume(local_data(p));
  }
  // k-th forward difference of the Ehrhart values = k! * leading coefficient.
  const std::vector<Integer> values = ehrhart_values(p, k);
  Integer vol = 0;
  for (std::size_t t = 0; t <= k; ++t) {
    Integer term = binomial(k, t) * values[t];
    if ((k - t) % 2 == 0) {
      vol += term;
    } else {
      vol -= term;
    }
  }
  return vol;
}

RatVector ehrhart_polynomial(const LatticePolytope& p) {
  const std::size_t k = p.affine_dim();
  std::vector<Integer> values = k == 0 ? std::vector<Integer>{Integer(1)} : ehrhart_values(p, k);
  // Newton form: L(t) = sum_j diff_j * C(t, j).
  std::vector<Integer> diffs;
  std::vector<Integer> work = values;
  for (std::size_t j = 0; j <= k; ++j) {
    diffs.push_back(work.front());
    for (std::size_t i = 0; i + 1 < work.size(); ++i) work[i] = work[i + 1] - work[i];
    work.pop_back();
  }
  RatVector coeffs(k + 1, Rational(0));
  RatVector basis{Rational(1)};  // coefficients of C(t, j)
  for (std::size_t j = 0; j <= k; ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += Rational(diffs[j]) * basis[i];
    // C(t, j+1) = C(t, j) * (t - j) / (j + 1)
    RatVector next(basis.size() + 1, Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * static_cast<long>(j);
    }
    for (auto& c : next) c /= static_cast<long>(j + 1);
    basis = std::move(next);
  }
  return coeffs;
}

}  // namespace fracmirror
