#include <algorithm>
#include <cstdlib>

#include "fracmirror/lattice.hpp"

namespace fracmirror {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ValidationError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<IntVector>& columns) {
  return from_rows(columns).transpose();
}

IntVector IntegerMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntegerMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw ValidationError("matrix shape mismatch");
  IntegerMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

IntVector IntegerMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw ValidationError("matrix/vector shape mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw ValidationError("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

namespace {

// Row/column operations applied to D while keeping U, U^{-1}, V in sync.
struct SmithState {
  IntegerMatrix d, u, u_inv, v;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    d.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
    u_inv.add_col_multiple(src, dst, -f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    d.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t i) {
    d.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  SmithState s{m, IntegerMatrix::identity(r), IntegerMatrix::identity(r), IntegerMatrix::identity(c)};

  std::size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (s.d(i, j) == 0) continue;
        if (!found || abs(s.d(i, j)) < abs(s.d(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (s.d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.d(i, t).get_mpz_t(), s.d(t, t).get_mpz_t());
        s.add_row(i, t, -q);
        if (s.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (s.d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.d(t, j).get_mpz_t(), s.d(t, t).get_mpz_t());
        s.add_col(j, t, -q);
        if (s.d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (s.d(i, t) != 0 && abs(s.d(i, t)) < abs(s.d(bi, bj))) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < c; ++j)
          if (s.d(t, j) != 0 && abs(s.d(t, j)) < abs(s.d(bi, bj))) { bi = t; bj = j; }
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j) {
          if (!mpz_divisible_p(s.d(i, j).get_mpz_t(), s.d(t, t).get_mpz_t())) {
            s.add_row(t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (s.d(t, t) < 0) s.negate_row(t);
  }

  SmithForm out{std::move(s.d), std::move(s.u), std::move(s.u_inv), std::move(s.v), t, {}};
  for (std::size_t i = 0; i < t; ++i) out.divisors.push_back(out.d(i, i));
  return out;
}

LatticeRelations smith_relations(const IntegerMatrix& m) {
  LatticeRelations rel;
  rel.smith = smith_normal_form(m);
  for (std::size_t j = rel.smith.rank; j < m.cols(); ++j) rel.kernel.push_back(rel.smith.v.column(j));
  rel.index = 1;
  for (const auto& d : rel.smith.divisors) rel.index *= d;
  return rel;
}

std::size_t vector_rank(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<RatVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.emplace_back(v.begin(), v.end());
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t affine_rank(std::span<const Point> points) {
  if (points.empty()) return 0;
  std::vector<IntVector> diffs;
  diffs.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return vector_rank(diffs);
}

IntVector AffineFrame::to_local(const Point& x) const {
  IntVector diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - origin[i];
  IntVector full = u * diff;
  full.resize(dim);
  return full;
}

Point AffineFrame::to_ambient(const IntVector& y) const {
  IntVector padded(origin.size(), Integer(0));
  std::copy(y.begin(), y.end(), padded.begin());
  Point x = u_inverse * padded;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += origin[i];
  return x;
}

AffineFrame affine_frame(std::span<const Point> points) {
  if (points.empty()) throw ValidationError("no points");
  const std::size_t n = points.front().size();
  AffineFrame frame;
  frame.origin = points.front();
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = points[i][j] - frame.origin[j];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) {
    frame.dim = 0;
    frame.u = IntegerMatrix::identity(n);
    frame.u_inverse = frame.u;
    return frame;
  }
  const SmithForm sf = smith_normal_form(IntegerMatrix::from_columns(diffs));
  frame.dim = sf.rank;
  if (sf.rank == n) {
    // Full-dimensional: keep the ambient coordinates.
    frame.u = IntegerMatrix::identity(n);
    frame.u_inverse = frame.u;
  } else {
    frame.u = sf.u;
    frame.u_inverse = sf.u_inverse;
  }
  return frame;
}

}  // namespace fracmirror
