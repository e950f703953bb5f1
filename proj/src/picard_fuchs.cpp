#include "fracmirror/picard_fuchs.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace fracmirror {

namespace {

void trim(RatVector& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(Rational(0));
}

bool is_zero_poly(const RatVector& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

RatVector multiply(const RatVector& a, const RatVector& b) {
  RatVector out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Applies p(θ) to a plain series.
RationalSeries apply_theta_poly(const RatVector& p, const RationalSeries& s) {
  RationalSeries out(s.order());
  for (std::size_t n = 0; n <= s.order(); ++n) out[n] = evaluate(p, Rational(static_cast<long>(n))) * s[n];
  return out;
}

LogSeries apply_theta_poly(const RatVector& p, const LogSeries& s) {
  LogSeries out(RationalSeries(s.order()));
  LogSeries power = s;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] != 0) out += p[j] * power;
    if (j + 1 < p.size()) power = theta(power);
  }
  return out;
}

LogSeries shift(const LogSeries& s, std::size_t k) {
  std::vector<RationalSeries> parts;
  for (const auto& part : s.parts()) parts.push_back(fracmirror::shift(part, k));
  return LogSeries(parts);
}

const char* superscript(char d) {
  static const char* table[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  return table[d - '0'];
}

std::string power_suffix(std::size_t k) {
  if (k <= 1) return "";
  std::string out;
  for (char c : std::to_string(k)) out += superscript(c);
  return out;
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

struct Factored {
  Rational lead;
  std::map<Rational, std::size_t> roots;
};

// Splits p into rational linear factors, or nullopt if it does not split.
std::optional<Factored> factor_rational(RatVector p) {
  trim(p);
  Factored f;
  f.lead = p.back();
  if (f.lead == 0) return std::nullopt;
  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    ++f.roots[Rational(0)];
  }
  while (p.size() > 1) {
    Integer den = 1;
    for (const auto& c : p) den = lcm(den, Integer(c.get_den()));
    IntVector ip;
    for (const auto& c : p) ip.push_back(Integer(c * Rational(den)));
    const Integer a0 = ip.front(), ad = ip.back();
    if (abs(a0) > Integer(1000000000000L) || abs(ad) > Integer(1000000000000L)) return std::nullopt;
    std::optional<Rational> root;
    for (const auto& num : divisors(a0)) {
      for (const auto& d : divisors(ad)) {
        for (int sign : {-1, 1}) {
          Rational r(num * sign, d);
          r.canonicalize();
          if (evaluate(p, r) == 0) {
            root = r;
            break;
          }
        }
        if (root) break;
      }
      if (root) break;
    }
    if (!root) return std::nullopt;
    // synthetic division by (θ - root)
    RatVector q(p.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
      carry = p[i] + carry * *root;
      q[i - 1] = carry;
    }
    p = q;
    ++f.roots[*root];
  }
  return f;
}

std::string format_expanded(const RatVector& p, const std::string& var, bool ascending = false) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t idx = 0; idx < p.size(); ++idx) {
    const std::size_t j = ascending ? idx : p.size() - 1 - idx;
    if (p[j] == 0) continue;
    const Rational c = p[j];
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "−";
    } else {
      out << (c < 0 ? " − " : " + ");
    }
    first = false;
    if (j == 0 || mag != 1) out << to_string(mag);
    if (j > 0) out << var << power_suffix(j);
  }
  if (first) out << "0";
  return out.str();
}

std::string format_factors(const Factored& f) {
  std::ostringstream out;
  auto it = f.roots.find(Rational(0));
  if (it != f.roots.end()) out << "θ" << power_suffix(it->second);
  for (const auto& [root, mult] : f.roots) {
    if (root == 0) continue;
    out << "(θ" << (root < 0 ? "+" : "−") << to_string(abs(root)) << ")" << power_suffix(mult);
  }
  return out.str();
}

}  // namespace

ThetaOperator::ThetaOperator(std::vector<RatVector> theta_polys) : polys_(std::move(theta_polys)) {
  if (polys_.empty()) polys_.push_back(RatVector{Rational(0)});
  for (auto& p : polys_) trim(p);
  while (polys_.size() > 1 && is_zero_poly(polys_.back())) polys_.pop_back();
}

std::size_t ThetaOperator::degree() const {
  std::size_t d = 0;
  for (const auto& p : polys_)
    if (!is_zero_poly(p)) d = std::max(d, p.size() - 1);
  return d;
}

RatVector ThetaOperator::theta_poly(std::size_t i) const {
  return i < polys_.size() ? polys_[i] : RatVector{Rational(0)};
}

RatVector ThetaOperator::z_poly(std::size_t j) const {
  RatVector out;
  for (const auto& p : polys_) out.push_back(j < p.size() ? p[j] : Rational(0));
  trim(out);
  return out;
}

RatVector theta_polynomial(const Rational& lead, const std::vector<Rational>& roots) {
  RatVector p{lead};
  for (const auto& r : roots) p = multiply(p, RatVector{-r, Rational(1)});
  return p;
}

Rational evaluate(const RatVector& poly, const Rational& x) {
  Rational v = 0;
  for (std::size_t j = poly.size(); j-- > 0;) v = v * x + poly[j];
  return v;
}

ThetaOperator theta_conjugate(const OneParameterShape& shape) {
  // Positive entries l with α = 0: Π_{m<l} (lθ - m).
  Rational lead_top = 1;
  std::vector<Rational> top_roots;
  for (long l : shape.l)
    for (long m = 0; m < l; ++m) {
      lead_top *= Rational(l);
      top_roots.push_back(Rational(m) / Rational(l));
    }
  // Negative entries -k with α = -a: Π_{m<k} (-kθ - a - m).
  Rational lead_z = 1;
  std::vector<Rational> z_roots;
  for (std::size_t i = 0; i < shape.k.size(); ++i)
    for (long m = 0; m < shape.k[i]; ++m) {
      lead_z *= Rational(-shape.k[i]);
      z_roots.push_back(-(shape.a[i] + Rational(m)) / Rational(shape.k[i]));
    }
  if (top_roots.empty()) throw ValidationError("unsupported shape: no positive entries");
  RatVector p0 = theta_polynomial(Rational(1), top_roots);
  RatVector p1 = theta_polynomial(-lead_z / lead_top, z_roots);
  return ThetaOperator({p0, p1});
}

std::optional<ThetaOperator> strip_left_theta(const ThetaOperator& op) {
  // θ z^i q(θ) = z^i (θ+i) q(θ), so each p_i must vanish at θ = -i.
  if (op.degree() == 0) return std::nullopt;
  std::vector<RatVector> quotients;
  for (std::size_t i = 0; i <= op.z_degree(); ++i) {
    RatVector p = op.theta_poly(i);
    const Rational root(-static_cast<long>(i));
    if (evaluate(p, root) != 0) return std::nullopt;
    if (p.size() == 1) {
      quotients.push_back(RatVector{Rational(0)});
      continue;
    }
    RatVector q(p.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t j = p.size(); j-- > 1;) {
      carry = p[j] + carry * root;
      q[j - 1] = carry;
    }
    quotients.push_back(q);
  }
  return ThetaOperator(quotients);
}

ThetaOperator reduce_left_theta(ThetaOperator op) {
  while (auto q = strip_left_theta(op)) op = *q;
  return op;
}

RationalSeries apply(const ThetaOperator& op, const RationalSeries& s) {
  RationalSeries out(s.order());
  for (std::size_t i = 0; i <= op.z_degree(); ++i) out += shift(apply_theta_poly(op.theta_poly(i), s), i);
  return out;
}

LogSeries apply(const ThetaOperator& op, const LogSeries& s) {
  LogSeries out(RationalSeries(s.order()));
  for (std::size_t i = 0; i <= op.z_degree(); ++i) out += shift(apply_theta_poly(op.theta_poly(i), s), i);
  return out;
}

NilpotentSeries apply(const ThetaOperator& op, const NilpotentSeries& s) {
  std::vector<LogSeries> slices;
  for (const auto& slice : s.slices()) slices.push_back(apply(op, slice));
  return NilpotentSeries(slices);
}

RationalSeries power_series_solution(const ThetaOperator& op, std::size_t order) {
  const RatVector p0 = op.indicial();
  if (evaluate(p0, Rational(0)) != 0) throw ValidationError("indicial polynomial does not vanish at 0");
  RationalSeries c(order);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    const Rational lead = evaluate(p0, Rational(static_cast<long>(n)));
    if (lead == 0) throw ValidationError("indicial polynomial has a positive integer root");
    Rational s = 0;
    for (std::size_t i = 1; i <= std::min(n, op.z_degree()); ++i)
      s += evaluate(op.theta_poly(i), Rational(static_cast<long>(n - i))) * c[n - i];
    c[n] = -s / lead;
  }
  return c;
}

std::string display(const ThetaOperator& op) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i <= op.z_degree(); ++i) {
    const RatVector p = op.theta_poly(i);
    if (is_zero_poly(p)) continue;
    const std::string z = i == 0 ? "" : "z" + power_suffix(i);
    const auto f = factor_rational(p);
    Rational lead = f ? f->lead : Rational(1);
    if (first) {
      if (lead < 0) out << "−";
    } else {
      out << (lead < 0 ? " − " : " + ");
    }
    first = false;
    if (f) {
      const std::string factors = format_factors(*f);
      if (abs(lead) != 1 || (factors.empty() && z.empty())) out << to_string(abs(lead));
      out << z << factors;
    } else {
      out << z << "(" << format_expanded(p, "θ") << ")";
    }
  }
  if (first) out << "0";
  return out.str();
}

RationalSeries RationalFunction::expand(std::size_t order) const {
  return RationalSeries(num, order).truncated(order) / RationalSeries(den, order).truncated(order);
}

std::string RationalFunction::display() const {
  const std::string n = format_expanded(num, "z", true);
  if (den.size() == 1 && den[0] == 1) return n;
  const bool wrap = std::count_if(num.begin(), num.end(), [](const Rational& c) { return c != 0; }) > 1;
  return (wrap ? "(" + n + ")" : n) + "/(" + format_expanded(den, "z", true) + ")";
}

RationalFunction yukawa_ode_rhs(const ThetaOperator& op) {
  if (op.degree() != 4) throw ValidationError("Yukawa ODE defined for threefold operators");
  RatVector p4 = op.z_poly(4), p3 = op.z_poly(3);
  if (p4[0] == 0) throw ValidationError("leading θ⁴ coefficient vanishes at z = 0");
  const Rational scale = p4[0];
  RationalFunction g;
  g.den = p4;
  for (auto& c : g.den) c /= scale;
  g.num = p3;
  for (auto& c : g.num) c /= -2 * scale;
  trim(g.num);
  trim(g.den);
  return g;
}

}  // namespace fracmirror
