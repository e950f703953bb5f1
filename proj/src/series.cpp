#include "fracmirror/series.hpp"

#include <algorithm>

namespace fracmirror {

// ---- RationalSeries ---------------------------------------------------------

RationalSeries::RationalSeries(RatVector coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, Rational(0));
}

RationalSeries RationalSeries::constant(const Rational& c, std::size_t order) {
  RationalSeries s(order);
  s[0] = c;
  return s;
}

RationalSeries RationalSeries::variable(std::size_t order) {
  RationalSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

RationalSeries RationalSeries::geometric(const Rational& a, std::size_t order) {
  RationalSeries s(order);
  Rational p = 1;
  for (std::size_t n = 0; n <= order; ++n, p *= a) s[n] = p;
  return s;
}

RationalSeries RationalSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw ValidationError("cannot extend a truncated series");
  return RationalSeries(RatVector(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)), order);
}

bool RationalSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::size_t RationalSeries::valuation() const {
  std::size_t n = 0;
  while (n < coeffs_.size() && coeffs_[n] == 0) ++n;
  return n;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RationalSeries RationalSeries::operator-() const {
  RationalSeries s = *this;
  for (auto& x : s.coeffs_) x = -x;
  return s;
}

RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
RationalSeries operator*(RationalSeries a, const Rational& c) { return a *= c; }
RationalSeries operator*(const Rational& c, RationalSeries a) { return a *= c; }

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  RationalSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
  if (b[0] == 0) throw ValidationError("series division by a non-unit");
  const std::size_t order = std::min(a.order(), b.order());
  RationalSeries out(order);
  const Rational inv = 1 / b[0];
  for (std::size_t n = 0; n <= order; ++n) {
    Rational s = a[n];
    for (std::size_t k = 1; k <= n; ++k) s -= b[k] * out[n - k];
    out[n] = s * inv;
  }
  return out;
}

RationalSeries exp_series(const RationalSeries& s) {
  if (s[0] != 0) throw ValidationError("exp of a series with nonzero constant term");
  RationalSeries e(s.order());
  e[0] = 1;
  for (std::size_t n = 1; n <= s.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<long>(k)) * s[k] * e[n - k];
    e[n] = acc / static_cast<long>(n);
  }
  return e;
}

RationalSeries log_series(const RationalSeries& s) {
  if (s[0] != 1) throw ValidationError("log of a series with constant term other than 1");
  RationalSeries l(s.order());
  for (std::size_t n = 1; n <= s.order(); ++n) {
    Rational acc = Rational(static_cast<long>(n)) * s[n];
    for (std::size_t k = 1; k < n; ++k) acc -= Rational(static_cast<long>(k)) * l[k] * s[n - k];
    l[n] = acc / static_cast<long>(n);
  }
  return l;
}

RationalSeries compose(const RationalSeries& f, const RationalSeries& g) {
  if (g[0] != 0) throw ValidationError("composition needs an inner series without constant term");
  const std::size_t order = std::min(f.order(), g.order());
  RationalSeries acc = RationalSeries::constant(f[order], order);
  for (std::size_t k = order; k-- > 0;) {
    acc = acc * g.truncated(order);
    acc[0] += f[k];
  }
  return acc;
}

RationalSeries reversion(const RationalSeries& q) {
  if (q[0] != 0) throw ValidationError("reversion needs a series without constant term");
  if (q.order() < 1 || q[1] == 0) throw ValidationError("reversion needs a nonzero linear coefficient");
  const std::size_t order = q.order();
  RationalSeries b(order);
  b[1] = 1 / q[1];
  // pow[j][k] = [t^k] b^j, filled lazily: it only needs b_1..b_{k-j+1}.
  std::vector<RatVector> pow(order + 1, RatVector(order + 1, Rational(0)));
  pow[1][1] = b[1];
  for (std::size_t k = 2; k <= order; ++k) {
    for (std::size_t j = k; j >= 2; --j) {
      Rational s = 0;
      for (std::size_t i = 1; i + (j - 1) <= k; ++i) s += b[i] * pow[j - 1][k - i];
      pow[j][k] = s;
    }
    Rational rest = 0;
    for (std::size_t j = 2; j <= k; ++j) rest += q[j] * pow[j][k];
    b[k] = -rest / q[1];
    pow[1][k] = b[k];
  }
  return b;
}

RationalSeries theta(const RationalSeries& s) {
  RationalSeries out = s;
  for (std::size_t n = 0; n <= out.order(); ++n) out[n] *= static_cast<long>(n);
  return out;
}

RationalSeries shift(const RationalSeries& s, std::size_t k) {
  RationalSeries out(s.order());
  for (std::size_t n = k; n <= s.order(); ++n) out[n] = s[n - k];
  return out;
}

// ---- LogSeries ----------------------------------------------------------------

LogSeries::LogSeries(std::vector<RationalSeries> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("log series needs at least one part");
  const std::size_t order = this->order();
  for (auto& p : parts_) p = p.truncated(order);
}

std::size_t LogSeries::order() const {
  std::size_t order = parts_.front().order();
  for (const auto& p : parts_) order = std::min(order, p.order());
  return order;
}

RationalSeries LogSeries::part(std::size_t k) const {
  return k < parts_.size() ? parts_[k] : RationalSeries(order());
}

bool LogSeries::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const RationalSeries& p) { return p.is_zero(); });
}

LogSeries& LogSeries::operator+=(const LogSeries& other) {
  const std::size_t order = std::min(this->order(), other.order());
  const std::size_t deg = std::max(parts_.size(), other.parts_.size());
  std::vector<RationalSeries> out;
  for (std::size_t k = 0; k < deg; ++k) out.push_back(part(k).truncated(order) + other.part(k).truncated(order));
  parts_ = std::move(out);
  return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& other) { return *this += -other; }

LogSeries LogSeries::operator-() const {
  LogSeries s = *this;
  for (auto& p : s.parts_) p = -p;
  return s;
}

bool LogSeries::operator==(const LogSeries& other) const {
  const std::size_t deg = std::max(parts_.size(), other.parts_.size());
  if (order() != other.order()) return false;
  for (std::size_t k = 0; k < deg; ++k)
    if (part(k) != other.part(k)) return false;
  return true;
}

LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<RationalSeries> out(a.parts().size() + b.parts().size() - 1, RationalSeries(order));
  for (std::size_t i = 0; i < a.parts().size(); ++i)
    for (std::size_t j = 0; j < b.parts().size(); ++j) out[i + j] += a.parts()[i] * b.parts()[j];
  return LogSeries(std::move(out));
}

LogSeries operator*(const Rational& c, const LogSeries& a) {
  std::vector<RationalSeries> out = a.parts();
  for (auto& p : out) p *= c;
  return LogSeries(std::move(out));
}

LogSeries theta(const LogSeries& s) {
  const auto& parts = s.parts();
  std::vector<RationalSeries> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    RationalSeries t = theta(parts[k]);
    if (k + 1 < parts.size()) t += Rational(static_cast<long>(k + 1)) * parts[k + 1];
    out.push_back(std::move(t));
  }
  return LogSeries(std::move(out));
}

LogSeries log_variable(std::size_t order) {
  return LogSeries({RationalSeries(order), RationalSeries::constant(1, order)});
}

// ---- EpsPolynomial ------------------------------------------------------------

EpsPolynomial::EpsPolynomial(std::size_t m, const Rational& c) : coeffs_(m, Rational(0)) {
  if (m == 0) throw ValidationError("nilpotency order must be positive");
  coeffs_[0] = c;
}

EpsPolynomial EpsPolynomial::linear(std::size_t m, const Rational& c, const Rational& d) {
  EpsPolynomial p(m, c);
  if (m > 1) p[1] = d;
  return p;
}

EpsPolynomial& EpsPolynomial::operator+=(const EpsPolynomial& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

EpsPolynomial& EpsPolynomial::operator-=(const EpsPolynomial& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

EpsPolynomial& EpsPolynomial::operator*=(const EpsPolynomial& o) {
  const std::size_t m = std::min(coeffs_.size(), o.coeffs_.size());
  RatVector out(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < m; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

EpsPolynomial operator+(EpsPolynomial a, const EpsPolynomial& b) { return a += b; }
EpsPolynomial operator-(EpsPolynomial a, const EpsPolynomial& b) { return a -= b; }
EpsPolynomial operator*(EpsPolynomial a, const EpsPolynomial& b) { return a *= b; }

EpsPolynomial inverse(const EpsPolynomial& a) {
  if (a[0] == 0) throw ValidationError("inverse of a nilpotent element");
  const std::size_t m = a.nilpotency();
  EpsPolynomial out(m, 1 / a[0]);
  for (std::size_t k = 1; k < m; ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += a[i] * out[k - i];
    out[k] = -s / a[0];
  }
  return out;
}

// ---- NilpotentSeries ------------------------------------------------------------

NilpotentSeries::NilpotentSeries(std::vector<LogSeries> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) throw ValidationError("nilpotent series needs at least one slice");
}

NilpotentSeries NilpotentSeries::from_coefficients(const std::vector<EpsPolynomial>& coeffs) {
  if (coeffs.empty()) throw ValidationError("no coefficients");
  std::size_t m = coeffs.front().nilpotency();
  for (const auto& c : coeffs) m = std::min(m, c.nilpotency());
  const std::size_t order = coeffs.size() - 1;
  std::vector<LogSeries> slices;
  for (std::size_t k = 0; k < m; ++k) {
    RationalSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s[n] = coeffs[n][k];
    slices.emplace_back(s);
  }
  return NilpotentSeries(std::move(slices));
}

NilpotentSeries NilpotentSeries::exp_eps_log(const Rational& lambda, std::size_t m, std::size_t order) {
  // ε^k slice is (λΛ)^k / k!.
  std::vector<LogSeries> slices;
  Rational c = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<RationalSeries> parts(k + 1, RationalSeries(order));
    parts[k] = RationalSeries::constant(c, order);
    slices.emplace_back(std::move(parts));
    c = c * lambda / static_cast<long>(k + 1);
  }
  return NilpotentSeries(std::move(slices));
}

NilpotentSeries NilpotentSeries::embed(const LogSeries& s, std::size_t m) {
  std::vector<LogSeries> slices(m, LogSeries(RationalSeries(s.order())));
  slices[0] = s;
  return NilpotentSeries(std::move(slices));
}

std::size_t NilpotentSeries::order() const {
  std::size_t order = slices_.front().order();
  for (const auto& s : slices_) order = std::min(order, s.order());
  return order;
}

EpsPolynomial NilpotentSeries::coefficient(std::size_t n) const {
  EpsPolynomial p(nilpotency());
  for (std::size_t k = 0; k < nilpotency(); ++k) p[k] = slices_[k].part(0).at(n);
  return p;
}

bool NilpotentSeries::is_zero() const {
  return std::all_of(slices_.begin(), slices_.end(), [](const LogSeries& s) { return s.is_zero(); });
}

NilpotentSeries& NilpotentSeries::operator+=(const NilpotentSeries& o) {
  slices_.resize(std::min(slices_.size(), o.slices_.size()));
  for (std::size_t k = 0; k < slices_.size(); ++k) slices_[k] += o.slices_[k];
  return *this;
}

NilpotentSeries& NilpotentSeries::operator-=(const NilpotentSeries& o) {
  slices_.resize(std::min(slices_.size(), o.slices_.size()));
  for (std::size_t k = 0; k < slices_.size(); ++k) slices_[k] -= o.slices_[k];
  return *this;
}

bool NilpotentSeries::operator==(const NilpotentSeries& o) const {
  if (slices_.size() != o.slices_.size()) return false;
  for (std::size_t k = 0; k < slices_.size(); ++k)
    if (!(slices_[k] == o.slices_[k])) return false;
  return true;
}

NilpotentSeries operator+(NilpotentSeries a, const NilpotentSeries& b) { return a += b; }
NilpotentSeries operator-(NilpotentSeries a, const NilpotentSeries& b) { return a -= b; }

NilpotentSeries operator*(const NilpotentSeries& a, const NilpotentSeries& b) {
  const std::size_t m = std::min(a.nilpotency(), b.nilpotency());
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<LogSeries> out(m, LogSeries(RationalSeries(order)));
  for (std::size_t i = 0; i < m; ++i) {
    if (a.slice(i).is_zero()) continue;
    for (std::size_t j = 0; i + j < m; ++j) out[i + j] += a.slice(i) * b.slice(j);
  }
  return NilpotentSeries(std::move(out));
}

NilpotentSeries operator*(const Rational& c, const NilpotentSeries& a) {
  std::vector<LogSeries> out;
  for (const auto& s : a.slices()) out.push_back(c * s);
  return NilpotentSeries(std::move(out));
}

NilpotentSeries theta(const NilpotentSeries& s) {
  std::vector<LogSeries> out;
  for (const auto& slice : s.slices()) out.push_back(theta(slice));
  return NilpotentSeries(std::move(out));
}

}  // namespace fracmirror
