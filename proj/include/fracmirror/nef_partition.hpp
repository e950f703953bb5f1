#pragma once

// Nef-partitions of reflexive polytopes and their Batyrev-Borisov duals.

#include <string>
#include <vector>

#include "fracmirror/lattice.hpp"

namespace fracmirror {

using PartIndices = std::vector<std::vector<std::size_t>>;

struct NefPartitionData {
  LatticePolytope delta;
  std::vector<Point> rays;  // lex-sorted vertices of polar_dual(delta)
  PartIndices ray_parts;    // indices into `rays`
  std::vector<LatticePolytope> parts_delta;
  std::vector<LatticePolytope> nabla_parts;
  LatticePolytope nabla;
  LatticePolytope nabla_dual;

  std::size_t dim() const { return delta.ambient_dim(); }
  std::size_t num_parts() const { return ray_parts.size(); }
  std::vector<Point> part_rays(std::size_t i) const;
};

struct DualNef {
  std::vector<LatticePolytope> nabla_parts;
  LatticePolytope nabla;
  LatticePolytope nabla_dual;
};

struct Diagnostic {
  std::string check;
  bool passed = false;
  std::string detail;
};

/// Delta_i = { m : <m,rho> >= -1 on I_i, >= 0 off I_i }.
LatticePolytope polytope_of_part(const LatticePolytope& delta, const PartIndices& ray_parts,
                                 std::size_t i);

/// nabla_k = Conv(0, I_k), nabla = sum, nabla^v = Conv(Delta_i). Asserts nabla is
/// reflexive with polar dual Conv(Delta_i).
DualNef dual_nef_partition(const NefPartitionData& data);

/// Every invariant of a nef-partition, one entry per check, never throws.
std::vector<Diagnostic> validate(const LatticePolytope& delta, const PartIndices& ray_parts);

/// Builds the full data; ValidationError for malformed input, AssertionFailure
/// when the partition is not nef.
NefPartitionData make_nef_partition(const LatticePolytope& delta, const PartIndices& ray_parts);

/// The dual partition: delta' = nabla, parts by which Delta_i holds each vertex
/// of nabla^v. Part order is preserved, so applying it twice is the identity.
NefPartitionData dual_partition(const NefPartitionData& data);

}  // namespace fracmirror
