#pragma once

// Input loading and JSON report assembly for the fracmirror command line.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracmirror/nef_partition.hpp"
#include "fracmirror/series.hpp"
#include "fracmirror/topology.hpp"

namespace fracmirror::cli {

using Json = nlohmann::ordered_json;

struct StrataInput {
  Integer chi_X;
  std::vector<std::string> divisors;
  std::map<Stratum, Integer> table;
};

struct IFunctionWeights {
  std::vector<long> numerator;
  std::vector<long> denominator;
};

struct GeometryInput {
  std::string name;
  LatticePolytope delta;
  PartIndices parts;
  long cover_degree = 2;
  long base_triple_intersection = 1;
  std::optional<StrataInput> strata;
  std::optional<IFunctionWeights> ifunction;
};

struct TransitionInput {
  std::string name;
  std::vector<Point> rho;
  IntegerMatrix basis_change;
  std::vector<Point> nu, delta1, nabla1, delta2, nabla2;
};

struct Input {
  std::optional<GeometryInput> geometry;
  std::optional<TransitionInput> transition;
};

/// Reads and parses a file; ValidationError for I/O and schema problems,
/// with line and column for malformed JSON.
Json read_json_file(const std::string& path);
Input parse_input(const Json& j);
Input load_input(const std::string& path);

/// Cap on N from FRACMIRROR_MAX_N, default 64.
std::size_t max_truncation();

struct Options {
  std::size_t order = 10;
  std::optional<Rational> normalization;
};

Json dual_nef_report(const GeometryInput& in);
Json euler_report(const GeometryInput& in);
Json hodge_report(const GeometryInput& in);
Json gkz_report(const GeometryInput& in, const Options& opt);
Json pf_report(const GeometryInput& in, const Options& opt);
Json mirror_map_report(const GeometryInput& in, const Options& opt);
Json yukawa_report(const GeometryInput& in, const Options& opt);
Json ifunction_report(const GeometryInput& in, const Options& opt);
Json bseries_report(const GeometryInput& in, const Options& opt);
Json transition_report(const TransitionInput& in);
/// Every applicable section; inapplicable ones carry {"skipped": reason}.
Json all_report(const Input& in, const Options& opt);

/// Runs `command` on a parsed input.
Json run_command(const std::string& command, const Input& in, const Options& opt);

/// Plain-text rendering: one "path: value" line per leaf.
std::string render_table(const Json& j);

/// "c0 + c1 z + ... + O(z^{N+1})".
std::string format_series(const RationalSeries& s, const std::string& var);
Json series_json(const RationalSeries& s, const std::string& var);

}  // namespace fracmirror::cli
