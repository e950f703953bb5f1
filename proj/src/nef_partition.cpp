#include "fracmirror/nef_partition.hpp"

#include <algorithm>

namespace fracmirror {

namespace {

LatticePolytope part_polytope(const std::vector<Point>& rays, const std::vector<std::size_t>& part,
                              std::size_t dim) {
  if (part.empty()) throw ValidationError("empty part in nef-partition");
  std::vector<Facet> halfspaces;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    const bool inside = std::find(part.begin(), part.end(), r) != part.end();
    halfspaces.push_back({rays[r], Integer(inside ? 1 : 0)});
  }
  return polytope_from_halfspaces(halfspaces, dim);
}

LatticePolytope hull_of_union(const std::vector<LatticePolytope>& polytopes, std::size_t dim) {
  std::vector<Point> all;
  for (const auto& p : polytopes) all.insert(all.end(), p.vertices().begin(), p.vertices().end());
  return convex_hull(all, dim);
}

LatticePolytope minkowski_all(const std::vector<LatticePolytope>& polytopes) {
  LatticePolytope sum = polytopes.front();
  for (std::size_t i = 1; i < polytopes.size(); ++i) sum = minkowski_sum(sum, polytopes[i]);
  return sum;
}

std::string partition_problem(const PartIndices& parts, std::size_t num_rays) {
  std::vector<int> seen(num_rays, 0);
  for (const auto& part : parts)
    for (auto r : part) {
      if (r >= num_rays) return "ray index " + std::to_string(r) + " out of range";
      if (++seen[r] > 1) return "ray " + std::to_string(r) + " appears twice";
    }
  for (std::size_t r = 0; r < num_rays; ++r)
    if (seen[r] == 0) return "ray " + std::to_string(r) + " is not covered";
  return {};
}

}  // namespace

std::vector<Point> NefPartitionData::part_rays(std::size_t i) const {
  std::vector<Point> out;
  for (auto r : ray_parts.at(i)) out.push_back(rays[r]);
  return out;
}

LatticePolytope polytope_of_part(const LatticePolytope& delta, const PartIndices& ray_parts, std::size_t i) {
  if (i >= ray_parts.size()) throw ValidationError("part index out of range");
  const LatticePolytope dual = polar_dual(delta);
  return part_polytope(dual.vertices(), ray_parts[i], delta.ambient_dim());
}

DualNef dual_nef_partition(const NefPartitionData& data) {
  const std::size_t n = data.dim();
  DualNef out;
  for (std::size_t k = 0; k < data.num_parts(); ++k) {
    std::vector<Point> gens = data.part_rays(k);
    gens.emplace_back(n, Integer(0));
    out.nabla_parts.push_back(convex_hull(gens, n));
  }
  out.nabla = minkowski_all(out.nabla_parts);
  out.nabla_dual = hull_of_union(data.parts_delta, n);
  if (!is_reflexive(out.nabla)) throw AssertionFailure("nabla is not reflexive");
  if (polar_dual(out.nabla) != out.nabla_dual)
    throw AssertionFailure("polar dual of nabla differs from Conv(Delta_i)");
  return out;
}

std::vector<Diagnostic> validate(const LatticePolytope& delta, const PartIndices& ray_parts) {
  std::vector<Diagnostic> out;
  auto record = [&](const std::string& check, bool ok, std::string detail = {}) {
    out.push_back({check, ok, std::move(detail)});
    return ok;
  };
  auto skip_rest = [&](std::initializer_list<const char*> names) {
    for (const char* name : names) record(name, false, "skipped");
  };

  const bool reflexive = is_reflexive(delta);
  record("delta reflexive", reflexive, reflexive ? "" : "delta not reflexive");
  if (!reflexive) {
    skip_rest({"is a partition", "parts nonempty", "parts integral", "Minkowski sum equals delta",
               "nabla reflexive", "polar dual of nabla"});
    return out;
  }
  const std::size_t n = delta.ambient_dim();
  const std::vector<Point> rays = polar_dual(delta).vertices();

  const std::string problem = partition_problem(ray_parts, rays.size());
  record("is a partition", problem.empty(), problem.empty() ? "" : "not a partition: " + problem);
  const bool nonempty =
      !ray_parts.empty() && std::none_of(ray_parts.begin(), ray_parts.end(), [](const auto& p) { return p.empty(); });
  record("parts nonempty", nonempty, nonempty ? "" : "empty part");
  if (!problem.empty() || !nonempty) {
    skip_rest({"parts integral", "Minkowski sum equals delta", "nabla reflexive", "polar dual of nabla"});
    return out;
  }

  std::vector<LatticePolytope> parts;
  try {
    for (const auto& part : ray_parts) parts.push_back(part_polytope(rays, part, n));
    record("parts integral", true);
  } catch (const Error& e) {
    record("parts integral", false, e.what());
    skip_rest({"Minkowski sum equals delta", "nabla reflexive", "polar dual of nabla"});
    return out;
  }
  record("Minkowski sum equals delta", minkowski_all(parts) == delta);

  std::vector<LatticePolytope> nabla_parts;
  for (const auto& part : ray_parts) {
    std::vector<Point> gens{Point(n, Integer(0))};
    for (auto r : part) gens.push_back(rays[r]);
    nabla_parts.push_back(convex_hull(gens, n));
  }
  const LatticePolytope nabla = minkowski_all(nabla_parts);
  const bool nabla_ok = is_reflexive(nabla);
  record("nabla reflexive", nabla_ok);
  if (nabla_ok) {
    record("polar dual of nabla", polar_dual(nabla) == hull_of_union(parts, n));
  } else {
    record("polar dual of nabla", false, "skipped");
  }
  return out;
}

NefPartitionData make_nef_partition(const LatticePolytope& delta, const PartIndices& ray_parts) {
  if (!is_reflexive(delta)) throw ValidationError("delta not reflexive");
  NefPartitionData data;
  data.delta = delta;
  data.rays = polar_dual(delta).vertices();
  const std::string problem = partition_problem(ray_parts, data.rays.size());
  if (!problem.empty()) throw ValidationError("not a partition: " + problem);
  data.ray_parts = ray_parts;
  const std::size_t n = delta.ambient_dim();
  for (const auto& part : ray_parts) {
    try {
      data.parts_delta.push_back(part_polytope(data.rays, part, n));
    } catch (const ValidationError& e) {
      if (part.empty()) throw;
      throw AssertionFailure(std::string("not nef: ") + e.what());
    }
  }
  if (minkowski_all(data.parts_delta) != delta)
    throw AssertionFailure("Minkowski sum of Delta_i differs from delta");
  DualNef dual = dual_nef_partition(data);
  data.nabla_parts = std::move(dual.nabla_parts);
  data.nabla = std::move(dual.nabla);
  data.nabla_dual = std::move(dual.nabla_dual);
  return data;
}

NefPartitionData dual_partition(const NefPartitionData& data) {
  const std::vector<Point>& verts = data.nabla_dual.vertices();
  PartIndices parts(data.num_parts());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    std::size_t owner = data.num_parts();
    for (std::size_t i = 0; i < data.num_parts(); ++i) {
      if (!data.parts_delta[i].contains(verts[v])) continue;
      if (owner != data.num_parts()) throw AssertionFailure("vertex of nabla^v lies in two parts");
      owner = i;
    }
    if (owner == data.num_parts()) throw AssertionFailure("vertex of nabla^v lies in no part");
    parts[owner].push_back(v);
  }
  return make_nef_partition(data.nabla, parts);
}

}  // namespace fracmirror
