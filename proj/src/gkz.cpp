#include "fracmirror/gkz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fracmirror {

Rational rising_factorial(const Rational& x, unsigned long m) {
  Rational p = 1;
  for (unsigned long i = 0; i < m; ++i) p *= x + static_cast<long>(i);
  return p;
}

Rational falling_factorial(const Rational& x, unsigned long m) {
  Rational p = 1;
  for (unsigned long i = 0; i < m; ++i) p *= x - static_cast<long>(i);
  return p;
}

std::vector<std::size_t> GkzData::display_row_order() const {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < r; ++i) order.push_back(n + i);
  for (std::size_t i = 0; i < n; ++i) order.push_back(i);
  return order;
}

IntegerMatrix GkzData::display_matrix() const {
  std::vector<IntVector> rows;
  for (auto i : display_row_order()) rows.push_back(a.row(i));
  return IntegerMatrix::from_rows(rows);
}

RatVector GkzData::display_beta() const {
  RatVector out;
  for (auto i : display_row_order()) out.push_back(beta[i]);
  return out;
}

GkzData build_gkz(const NefPartitionData& data, GkzSide side) {
  const auto& parts = side == GkzSide::kNabla ? data.nabla_parts : data.parts_delta;
  GkzData g;
  g.n = data.dim();
  g.r = parts.size();
  std::vector<IntVector> columns;
  for (std::size_t i = 0; i < g.r; ++i) {
    IntVector head(g.n + g.r, Integer(0));
    head[g.n + i] = 1;
    columns.push_back(head);
    g.column_labels.emplace_back(i, 0);
    g.alpha.emplace_back(-1, 2);

    std::vector<Point> points;
    for (const auto& p : lattice_points(parts[i]))
      if (std::any_of(p.point.begin(), p.point.end(), [](const Integer& x) { return x != 0; }))
        points.push_back(p.point);
    std::sort(points.rbegin(), points.rend());
    for (std::size_t j = 0; j < points.size(); ++j) {
      IntVector col = head;
      std::copy(points[j].begin(), points[j].end(), col.begin());
      columns.push_back(col);
      g.column_labels.emplace_back(i, j + 1);
      g.alpha.emplace_back(0);
    }
  }
  g.a = IntegerMatrix::from_columns(columns);
  g.beta.assign(g.n, Rational(0));
  g.beta.resize(g.n + g.r, Rational(-1, 2));
  g.kernel = smith_relations(g.a).kernel;

  // A·α = β by construction; verify anyway.
  for (std::size_t row = 0; row < g.a.rows(); ++row) {
    Rational s = 0;
    for (std::size_t c = 0; c < g.a.cols(); ++c) s += Rational(g.a(row, c)) * g.alpha[c];
    if (s != g.beta[row]) throw AssertionFailure("A·α ≠ β");
  }
  return g;
}

Integer gkz_volume(const GkzData& gkz) {
  std::vector<Point> cols;
  for (std::size_t c = 0; c < gkz.a.cols(); ++c) cols.push_back(gkz.a.column(c));
  return normalized_volume(convex_hull(cols, gkz.a.rows()));
}

IntVector principal_kernel_vector(const GkzData& gkz) {
  if (gkz.kernel.size() != 1) throw ValidationError("multiparameter moduli unsupported");
  IntVector ell = gkz.kernel.front();
  bool has_neg = false, has_pos = false;
  for (std::size_t c = 0; c < ell.size(); ++c)
    if (gkz.column_labels[c].second == 0) {
      has_neg = has_neg || ell[c] < 0;
      has_pos = has_pos || ell[c] > 0;
    }
  if (has_neg && has_pos) throw ValidationError("kernel generator has mixed signs on ν_{i,0}");
  if (has_pos)
    for (auto& x : ell) x = -x;
  return ell;
}

OneParameterShape OneParameterShape::from_gkz(const GkzData& gkz, const IntVector& ell) {
  OneParameterShape s;
  s.k.assign(gkz.r, 0);
  s.a.assign(gkz.r, Rational(0));
  for (std::size_t c = 0; c < ell.size(); ++c) {
    const auto [i, j] = gkz.column_labels[c];
    if (j == 0) {
      if (ell[c] >= 0) throw ValidationError("unsupported shape: ℓ_{i,0} must be negative");
      s.k[i] = -ell[c].get_si();
      s.a[i] = -gkz.alpha[c];
    } else {
      if (ell[c] <= 0) throw ValidationError("unsupported shape: ℓ_{i,j} must be positive for j ≥ 1");
      if (gkz.alpha[c] != 0) throw ValidationError("unsupported shape: α_{i,j} must vanish for j ≥ 1");
      s.l.push_back(ell[c].get_si());
    }
  }
  return s;
}

long OneParameterShape::total_k() const { return std::accumulate(k.begin(), k.end(), 0L); }

RationalSeries holo_solution(const OneParameterShape& shape, std::size_t order) {
  for (const auto& a : shape.a)
    if (a <= 0) throw ValidationError("unsupported shape: -α_{i,0} must be positive");
  RationalSeries s(order);
  const bool odd = shape.total_k() % 2 != 0;
  for (std::size_t n = 0; n <= order; ++n) {
    Rational c = 1;
    for (std::size_t i = 0; i < shape.k.size(); ++i)
      c *= rising_factorial(shape.a[i], static_cast<unsigned long>(shape.k[i]) * n);
    for (long l : shape.l) c /= Rational(factorial(static_cast<unsigned long>(l) * n));
    if (odd && n % 2 == 1) c = -c;
    s[n] = c;
  }
  return s;
}

RationalSeries holo_solution(const GkzData& gkz, std::size_t order) {
  return holo_solution(OneParameterShape::from_gkz(gkz, principal_kernel_vector(gkz)), order);
}

bool box_annihilation_check(const IntVector& ell, const RatVector& alpha, const RationalSeries& series) {
  // c_n [α+nℓ]_{ℓ+} = c_{n-1} [α+(n-1)ℓ]_{ℓ-} with falling factorials.
  for (std::size_t n = 1; n <= series.order(); ++n) {
    Rational lhs = series[n], rhs = series[n - 1];
    for (std::size_t c = 0; c < ell.size(); ++c) {
      const long l = ell[c].get_si();
      if (l > 0) {
        lhs *= falling_factorial(alpha[c] + Rational(l * static_cast<long>(n)), static_cast<unsigned long>(l));
      } else if (l < 0) {
        rhs *= falling_factorial(alpha[c] + Rational(l * static_cast<long>(n - 1)), static_cast<unsigned long>(-l));
      }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<GkzTerm> enumerate_terms(const GkzData& gkz, long cutoff) {
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < gkz.column_labels.size(); ++c)
    if (gkz.column_labels[c].second != 0) free_cols.push_back(c);

  std::vector<GkzTerm> out;
  IntVector ell(gkz.a.cols(), Integer(0));
  std::function<void(std::size_t)> walk = [&](std::size_t idx) {
    if (idx == free_cols.size()) {
      // ℓ_{i,0} from the Kronecker rows, then the lattice rows must vanish.
      IntVector full = ell;
      for (std::size_t c = 0; c < full.size(); ++c)
        if (gkz.column_labels[c].second == 0) full[c] = 0;
      for (auto c : free_cols) {
        const auto i = gkz.column_labels[c].first;
        for (std::size_t h = 0; h < full.size(); ++h)
          if (gkz.column_labels[h] == std::pair<std::size_t, std::size_t>{i, 0}) full[h] -= ell[c];
      }
      const IntVector image = gkz.a * full;
      if (std::any_of(image.begin(), image.end(), [](const Integer& x) { return x != 0; })) return;
      Rational coeff = 1;
      long sum0 = 0;
      for (std::size_t c = 0; c < full.size(); ++c) {
        const long l = full[c].get_si();
        if (gkz.column_labels[c].second == 0) {
          coeff *= rising_factorial(-gkz.alpha[c], static_cast<unsigned long>(-l));
          sum0 += l;
        } else {
          coeff /= Rational(factorial(static_cast<unsigned long>(l)));
        }
      }
      if (sum0 % 2 != 0) coeff = -coeff;
      out.push_back({full, coeff});
      return;
    }
    for (long v = 0; v <= cutoff; ++v) {
      ell[free_cols[idx]] = v;
      walk(idx + 1);
    }
    ell[free_cols[idx]] = 0;
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const GkzTerm& x, const GkzTerm& y) { return x.ell < y.ell; });
  return out;
}

}  // namespace fracmirror
