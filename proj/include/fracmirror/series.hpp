#pragma once

// Exact truncated power series in z, their log z (Λ) extensions and
// coefficients in a nilpotent ring Q[ε]/(ε^m).

#include <cstddef>
#include <vector>

#include "fracmirror/arith.hpp"

namespace fracmirror {

/// c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).
class RationalSeries {
 public:
  RationalSeries() = default;
  explicit RationalSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}
  RationalSeries(RatVector coeffs, std::size_t order);

  static RationalSeries constant(const Rational& c, std::size_t order);
  /// The series z.
  static RationalSeries variable(std::size_t order);
  /// 1 / (1 - a z).
  static RationalSeries geometric(const Rational& a, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const RatVector& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  Rational& operator[](std::size_t n) { return coeffs_[n]; }
  /// Zero beyond the truncation instead of out of range.
  Rational at(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }

  RationalSeries truncated(std::size_t order) const;
  bool is_zero() const;
  /// Lowest index with a nonzero coefficient, or order()+1.
  std::size_t valuation() const;

  RationalSeries& operator+=(const RationalSeries& other);
  RationalSeries& operator-=(const RationalSeries& other);
  RationalSeries& operator*=(const Rational& c);
  RationalSeries operator-() const;
  bool operator==(const RationalSeries& other) const = default;

 private:
  RatVector coeffs_{Rational(0)};
};

RationalSeries operator+(RationalSeries a, const RationalSeries& b);
RationalSeries operator-(RationalSeries a, const RationalSeries& b);
RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator*(RationalSeries a, const Rational& c);
RationalSeries operator*(const Rational& c, RationalSeries a);
/// Requires b(0) != 0.
RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);

RationalSeries exp_series(const RationalSeries& s);
RationalSeries log_series(const RationalSeries& s);
/// f(g(z)) for g(0) = 0.
RationalSeries compose(const RationalSeries& f, const RationalSeries& g);
/// Compositional inverse of q = z u(z), u(0) != 0.
RationalSeries reversion(const RationalSeries& q);
/// θ = z d/dz.
RationalSeries theta(const RationalSeries& s);
/// Multiplies by z^k, dropping what falls past the truncation.
RationalSeries shift(const RationalSeries& s, std::size_t k);

/// Σ_k Λ^k S_k with Λ = log z.
class LogSeries {
 public:
  LogSeries() = default;
  LogSeries(std::vector<RationalSeries> parts);
  LogSeries(const RationalSeries& s) : parts_{s} {}

  std::size_t order() const;
  std::size_t log_degree() const { return parts_.size() - 1; }
  const std::vector<RationalSeries>& parts() const { return parts_; }
  /// Coefficient of Λ^k (zero series beyond the stored degree).
  RationalSeries part(std::size_t k) const;
  bool is_zero() const;

  LogSeries& operator+=(const LogSeries& other);
  LogSeries& operator-=(const LogSeries& other);
  LogSeries operator-() const;
  bool operator==(const LogSeries& other) const;

 private:
  std::vector<RationalSeries> parts_{RationalSeries(0)};
};

LogSeries operator+(LogSeries a, const LogSeries& b);
LogSeries operator-(LogSeries a, const LogSeries& b);
LogSeries operator*(const LogSeries& a, const LogSeries& b);
LogSeries operator*(const Rational& c, const LogSeries& a);
/// Leibniz with θΛ = 1.
LogSeries theta(const LogSeries& s);
/// The series Λ itself (log z) at truncation `order`.
LogSeries log_variable(std::size_t order);

/// Truncated polynomial a_0 + a_1 ε + ... + a_{m-1} ε^{m-1} in Q[ε]/(ε^m).
class EpsPolynomial {
 public:
  explicit EpsPolynomial(std::size_t m = 1, const Rational& c = 0);
  explicit EpsPolynomial(RatVector coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t nilpotency() const { return coeffs_.size(); }
  const RatVector& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  /// c + d ε.
  static EpsPolynomial linear(std::size_t m, const Rational& c, const Rational& d);

  EpsPolynomial& operator+=(const EpsPolynomial& o);
  EpsPolynomial& operator-=(const EpsPolynomial& o);
  EpsPolynomial& operator*=(const EpsPolynomial& o);
  bool operator==(const EpsPolynomial& o) const = default;

 private:
  RatVector coeffs_;
};

EpsPolynomial operator+(EpsPolynomial a, const EpsPolynomial& b);
EpsPolynomial operator-(EpsPolynomial a, const EpsPolynomial& b);
EpsPolynomial operator*(EpsPolynomial a, const EpsPolynomial& b);
/// Requires a nonzero constant term.
EpsPolynomial inverse(const EpsPolynomial& a);

/// Σ_k ε^k L_k with L_k log-extended series, ε^m = 0.
class NilpotentSeries {
 public:
  NilpotentSeries() = default;
  NilpotentSeries(std::vector<LogSeries> slices);
  /// Coefficients c_n(ε), n = 0..N, with no Λ.
  static NilpotentSeries from_coefficients(const std::vector<EpsPolynomial>& coeffs);
  /// exp(λ ε Λ) truncated at ε^m and z^N.
  static NilpotentSeries exp_eps_log(const Rational& lambda, std::size_t m, std::size_t order);
  static NilpotentSeries embed(const LogSeries& s, std::size_t m);

  std::size_t nilpotency() const { return slices_.size(); }
  std::size_t order() const;
  const std::vector<LogSeries>& slices() const { return slices_; }
  const LogSeries& slice(std::size_t k) const { return slices_.at(k); }
  /// z^n coefficient of the Λ^0 part as a polynomial in ε.
  EpsPolynomial coefficient(std::size_t n) const;
  bool is_zero() const;

  NilpotentSeries& operator+=(const NilpotentSeries& o);
  NilpotentSeries& operator-=(const NilpotentSeries& o);
  bool operator==(const NilpotentSeries& o) const;

 private:
  std::vector<LogSeries> slices_{LogSeries()};
};

NilpotentSeries operator+(NilpotentSeries a, const NilpotentSeries& b);
NilpotentSeries operator-(NilpotentSeries a, const NilpotentSeries& b);
NilpotentSeries operator*(const NilpotentSeries& a, const NilpotentSeries& b);
NilpotentSeries operator*(const Rational& c, const NilpotentSeries& a);
NilpotentSeries theta(const NilpotentSeries& s);

}  // namespace fracmirror
