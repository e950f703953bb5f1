#include "fracmirror/topology.hpp"

#include <algorithm>

namespace fracmirror {

namespace {

Integer sign_power(std::size_t e) { return e % 2 == 0 ? Integer(1) : Integer(-1); }

Integer lambda_volume(const std::vector<LatticePolytope>& parts) {
  return normalized_volume(pyramid_over(cayley_polytope(parts)));
}

}  // namespace

Integer euler_mpcp(const LatticePolytope& delta) {
  if (!is_reflexive(delta)) throw ValidationError("delta not reflexive");
  return normalized_volume(polar_dual(delta));
}

Integer dk_intersection_euler(const std::vector<LatticePolytope>& part_polytopes, std::size_t n) {
  const std::size_t r = part_polytopes.size();
  if (r == 0 || r >= 8 * sizeof(unsigned long)) throw ValidationError("unsupported number of divisors");
  Integer total = 0;
  for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
    std::vector<LatticePolytope> chosen;
    for (std::size_t s = 0; s < r; ++s)
      if (mask & (1UL << s)) chosen.push_back(part_polytopes[s]);
    // -(-1)^{n+|I|-1} = (-1)^{n+|I|}
    total += sign_power(n + chosen.size()) * lambda_volume(chosen);
  }
  return total;
}

CoverTopology euler_double_cover(const NefPartitionData& data) {
  CoverTopology t;
  t.n = data.dim();
  t.chi_X = euler_mpcp(data.delta);
  t.chi_X_dual = euler_mpcp(data.nabla);
  t.vol_Lambda = lambda_volume(data.parts_delta);
  if (t.vol_Lambda != t.chi_X_dual)
    throw AssertionFailure("vol(Λ) ≠ χ(X∨): " + to_string(t.vol_Lambda) + " vs " + to_string(t.chi_X_dual));
  t.vol_Lambda_dual = lambda_volume(data.nabla_parts);
  if (t.vol_Lambda_dual != t.chi_X)
    throw AssertionFailure("vol(Λ∨) ≠ χ(X): " + to_string(t.vol_Lambda_dual) + " vs " + to_string(t.chi_X));
  t.chi_Y = t.chi_X + sign_power(t.n) * t.chi_X_dual;
  t.chi_Y_dual = t.chi_X_dual + sign_power(t.n) * t.chi_X;
  if (t.chi_Y != sign_power(t.n) * t.chi_Y_dual) throw AssertionFailure("χ(Y) ≠ (−1)ⁿ χ(Y∨)");
  return t;
}

SncResult euler_snc_union_oracle(const std::vector<std::string>& divisors,
                                 const std::map<Stratum, Integer>& strata, const Integer& chi_X) {
  const std::size_t k = divisors.size();
  if (k >= 8 * sizeof(unsigned long)) throw ValidationError("too many divisors");
  Integer chi = 0;
  std::vector<std::string> missing;
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    Stratum s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1UL << i)) s.push_back(divisors[i]);
    std::sort(s.begin(), s.end());
    const auto it = strata.find(s);
    if (it == strata.end()) {
      std::string name;
      for (const auto& d : s) name += (name.empty() ? "" : "∩") + d;
      missing.push_back(name);
      continue;
    }
    chi += sign_power(s.size() - 1) * it->second;
  }
  if (!missing.empty()) {
    std::string msg = "missing strata:";
    for (const auto& m : missing) msg += " " + m;
    throw ValidationError(msg);
  }
  return {chi, 2 * chi_X - chi};
}

Integer HodgeTable::at(int p, int q) const {
  const auto it = h.find({p, q});
  if (it == h.end()) throw ValidationError("Hodge number not available");
  return it->second;
}

Integer toric_h11(const LatticePolytope& delta) {
  const auto points = lattice_points(polar_dual(delta));
  const auto boundary = std::count_if(points.begin(), points.end(), [](const LatticePoint& p) { return !p.interior; });
  return Integer(static_cast<long>(boundary)) - static_cast<long>(delta.ambient_dim());
}

HodgeTable hodge_numbers(const NefPartitionData& data, const Integer& chi_Y) {
  HodgeTable t;
  t.n = data.dim();
  const int n = static_cast<int>(t.n);
  const Integer h11 = toric_h11(data.delta);
  // Off-middle entries come from the smooth toric base.
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (p + q == n) continue;
      if (p != q) {
        t.h[{p, q}] = 0;
      } else if (p == 0 || p == n) {
        t.h[{p, q}] = 1;
      } else if (p == 1 || p == n - 1) {
        t.h[{p, q}] = h11;
      }
    }
  if (n == 3) {
    t.h[{3, 0}] = t.h[{0, 3}] = 1;
    if (chi_Y % 2 != 0) throw AssertionFailure("odd Euler characteristic for a threefold");
    const Integer h21 = h11 - chi_Y / 2;
    t.h[{2, 1}] = t.h[{1, 2}] = h21;
  } else if (n == 2) {
    t.h[{2, 0}] = t.h[{0, 2}] = 1;
    t.h[{1, 1}] = chi_Y - 4;
  } else if (n == 1) {
    t.h[{1, 0}] = t.h[{0, 1}] = 1;
  } else {
    t.middle_determined = false;
    t.note = "middle Hodge numbers not determined";
  }
  return t;
}

}  // namespace fracmirror
