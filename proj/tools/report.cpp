#include "report.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fracmirror/cohom_series.hpp"
#include "fracmirror/gkz.hpp"
#include "fracmirror/mirror.hpp"
#include "fracmirror/picard_fuchs.hpp"

namespace fracmirror::cli {

namespace {

const char* superscript_digit(char d) {
  static const char* table[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  return table[d - '0'];
}

std::string superscript(std::size_t k) {
  std::string out;
  for (char c : std::to_string(k)) out += superscript_digit(c);
  return out;
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(integer_json(x));
  return a;
}

Json points_json(const std::vector<Point>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(point_json(p));
  return a;
}

Json rationals_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json log_series_json(const LogSeries& s, const std::string& var) {
  Json a = Json::array();
  for (std::size_t k = 0; k <= s.log_degree(); ++k) a.push_back(series_json(s.part(k), var));
  return a;
}

Json eps_json(const EpsPolynomial& p) { return rationals_json(p.coeffs()); }

// Schema helpers.
const Json& require(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError("input is missing \"" + key + "\"");
  return j.at(key);
}

long as_long(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ValidationError(what + " must be an integer");
  return j.get<long>();
}

Point as_point(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array of integers");
  Point p;
  for (const auto& x : j) p.emplace_back(as_long(x, what));
  return p;
}

std::vector<Point> as_points(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ValidationError(what + " must be a nonempty array of points");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(as_point(p, what));
  const std::size_t dim = out.front().size();
  for (const auto& p : out)
    if (p.size() != dim) throw ValidationError(what + " has points of different dimensions");
  return out;
}

std::vector<long> as_longs(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array of integers");
  std::vector<long> out;
  for (const auto& x : j) out.push_back(as_long(x, what));
  return out;
}

struct OneParameter {
  GkzData gkz;
  IntVector ell;
  OneParameterShape shape;
  ThetaOperator op;
};

OneParameter one_parameter(const NefPartitionData& data) {
  OneParameter p{build_gkz(data), {}, {}, {}};
  p.ell = principal_kernel_vector(p.gkz);
  p.shape = OneParameterShape::from_gkz(p.gkz, p.ell);
  p.op = theta_conjugate(p.shape);
  return p;
}

Json hodge_json(const HodgeTable& t) {
  Json j;
  j["dimension"] = t.n;
  Json h;
  for (const auto& [pq, v] : t.h) h["h" + std::to_string(pq.first) + std::to_string(pq.second)] = integer_json(v);
  j["h"] = h;
  j["middle_determined"] = t.middle_determined;
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

Json theta_operator_json(const ThetaOperator& op) {
  Json j;
  j["display"] = display(op);
  j["degree"] = op.degree();
  Json polys = Json::array();
  for (std::size_t i = 0; i <= op.z_degree(); ++i) polys.push_back(rationals_json(op.theta_poly(i)));
  j["theta_polynomials"] = polys;
  return j;
}

Rational normalization(const GeometryInput& in, const Options& opt) {
  return opt.normalization ? *opt.normalization
                           : classical_normalization(in.cover_degree, in.base_triple_intersection);
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  const auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (flat) {
      out << path << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar(j[i]);
      out << "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << path << ": " << scalar(j) << "\n";
  }
}

}  // namespace

std::string format_series(const RationalSeries& s, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    const Rational& c = s[n];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "−";
    } else {
      out << (c < 0 ? " − " : " + ");
    }
    first = false;
    if (n == 0 || mag != 1) out << to_string(mag);
    if (n > 0) out << var << (n > 1 ? superscript(n) : "");
  }
  if (first) out << "0";
  out << " + O(" << var << superscript(s.order() + 1) << ")";
  return out.str();
}

Json series_json(const RationalSeries& s, const std::string& var) {
  Json j;
  j["coefficients"] = rationals_json(s.coeffs());
  j["display"] = format_series(s, var);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open input file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    std::string what = e.what();
    const auto pos = what.find("parse error");
    throw ValidationError("malformed JSON in " + path + ": " + (pos == std::string::npos ? what : what.substr(pos)));
  }
}

Input parse_input(const Json& j) {
  if (!j.is_object()) throw ValidationError("input must be a JSON object");
  Input in;
  const std::string name = j.value("name", std::string("input"));
  if (j.value("kind", std::string("geometry")) == "transition") {
    TransitionInput t;
    t.name = name;
    t.rho = as_points(require(j, "rho"), "rho");
    t.basis_change = IntegerMatrix::from_rows(as_points(require(j, "basis_change"), "basis_change"));
    t.nu = as_points(require(j, "nu"), "nu");
    t.delta1 = as_points(require(j, "delta1"), "delta1");
    t.nabla1 = as_points(require(j, "nabla1"), "nabla1");
    t.delta2 = as_points(require(j, "delta2"), "delta2");
    t.nabla2 = as_points(require(j, "nabla2"), "nabla2");
    in.transition = t;
    return in;
  }

  GeometryInput g;
  g.name = name;
  const Json& delta = require(j, "delta");
  const long dim = as_long(require(delta, "dim"), "delta.dim");
  const auto vertices = as_points(require(delta, "vertices"), "delta.vertices");
  if (dim <= 0 || vertices.front().size() != static_cast<std::size_t>(dim))
    throw ValidationError("delta.dim does not match the vertex coordinates");
  g.delta = convex_hull(vertices, static_cast<std::size_t>(dim));
  const Json& parts = require(j, "parts");
  if (!parts.is_array()) throw ValidationError("parts must be an array of index arrays");
  for (const auto& part : parts) {
    std::vector<std::size_t> idx;
    for (long v : as_longs(part, "parts")) {
      if (v < 0) throw ValidationError("parts contain a negative index");
      idx.push_back(static_cast<std::size_t>(v));
    }
    g.parts.push_back(idx);
  }
  if (j.contains("normalization")) {
    const Json& n = j.at("normalization");
    g.cover_degree = as_long(require(n, "cover_degree"), "normalization.cover_degree");
    g.base_triple_intersection = as_long(require(n, "base_triple_intersection"), "normalization.base_triple_intersection");
  }
  if (j.contains("strata")) {
    const Json& s = j.at("strata");
    StrataInput st;
    st.chi_X = as_long(require(s, "chi_X"), "strata.chi_X");
    for (const auto& d : require(s, "divisors")) {
      if (!d.is_string()) throw ValidationError("strata.divisors must be strings");
      st.divisors.push_back(d.get<std::string>());
    }
    for (const auto& row : require(s, "table")) {
      Stratum key;
      for (const auto& d : require(row, "stratum")) {
        if (!d.is_string()) throw ValidationError("strata.table stratum entries must be strings");
        key.push_back(d.get<std::string>());
      }
      std::sort(key.begin(), key.end());
      st.table[key] = as_long(require(row, "chi"), "strata.table chi");
    }
    g.strata = st;
  }
  if (j.contains("ifunction")) {
    const Json& w = j.at("ifunction");
    g.ifunction = IFunctionWeights{as_longs(require(w, "numerator"), "ifunction.numerator"),
                                   as_longs(require(w, "denominator"), "ifunction.denominator")};
  }
  in.geometry = g;
  return in;
}

Input load_input(const std::string& path) { return parse_input(read_json_file(path)); }

std::size_t max_truncation() {
  const char* env = std::getenv("FRACMIRROR_MAX_N");
  if (!env || !*env) return 64;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw ValidationError("FRACMIRROR_MAX_N must be a positive integer");
  return static_cast<std::size_t>(v);
}

Json dual_nef_report(const GeometryInput& in) {
  Json j;
  Json diags = Json::array();
  for (const auto& d : validate(in.delta, in.parts))
    diags.push_back({{"check", d.check}, {"passed", d.passed}, {"detail", d.detail}});
  const NefPartitionData data = make_nef_partition(in.delta, in.parts);
  j["rays"] = points_json(data.rays);
  Json parts = Json::array();
  for (const auto& p : data.ray_parts) parts.push_back(p);
  j["parts"] = parts;
  Json dp = Json::array(), np = Json::array();
  for (const auto& p : data.parts_delta) dp.push_back(points_json(p.vertices()));
  for (const auto& p : data.nabla_parts) np.push_back(points_json(p.vertices()));
  j["delta_parts"] = dp;
  j["nabla_parts"] = np;
  j["nabla"] = points_json(data.nabla.vertices());
  j["nabla_dual"] = points_json(data.nabla_dual.vertices());
  const NefPartitionData back = dual_partition(dual_partition(data));
  j["round_trip"] = back.delta == data.delta;
  j["diagnostics"] = diags;
  return j;
}

Json euler_report(const GeometryInput& in) {
  const NefPartitionData data = make_nef_partition(in.delta, in.parts);
  const CoverTopology t = euler_double_cover(data);
  Json j;
  j["n"] = t.n;
  j["chi_X"] = integer_json(t.chi_X);
  j["chi_X_dual"] = integer_json(t.chi_X_dual);
  j["vol_Lambda"] = integer_json(t.vol_Lambda);
  j["vol_Lambda_dual"] = integer_json(t.vol_Lambda_dual);
  j["chi_branch"] = integer_json(t.chi_branch());
  j["chi_Y"] = integer_json(t.chi_Y);
  j["chi_Y_dual"] = integer_json(t.chi_Y_dual);
  j["mirror_relation"] = t.chi_Y == (t.n % 2 == 0 ? t.chi_Y_dual : -t.chi_Y_dual);
  if (in.strata) {
    const SncResult r = euler_snc_union_oracle(in.strata->divisors, in.strata->table, in.strata->chi_X);
    if (r.chi_Y != t.chi_Y)
      throw AssertionFailure("strata table gives χ(Y) = " + to_string(r.chi_Y) + ", volumes give " + to_string(t.chi_Y));
    j["strata_check"] = {{"chi_branch", integer_json(r.chi_branch)}, {"chi_Y", integer_json(r.chi_Y)}, {"agrees", true}};
  }
  return j;
}

Json hodge_report(const GeometryInput& in) {
  const NefPartitionData data = make_nef_partition(in.delta, in.parts);
  const CoverTopology t = euler_double_cover(data);
  Json j;
  j["Y"] = hodge_json(hodge_numbers(data, t.chi_Y));
  j["Y_dual"] = hodge_json(hodge_numbers(dual_partition(data), t.chi_Y_dual));
  return j;
}

Json gkz_report(const GeometryInput& in, const Options& opt) {
  const NefPartitionData data = make_nef_partition(in.delta, in.parts);
  const GkzData g = build_gkz(data);
  Json j;
  Json rows = Json::array();
  const IntegerMatrix a = g.display_matrix();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(point_json(a.row(i)));
  j["A"] = rows;
  j["beta"] = rationals_json(g.display_beta());
  j["alpha"] = rationals_json(g.alpha);
  Json labels = Json::array();
  for (const auto& [i, k] : g.column_labels) labels.push_back("ν" + std::to_string(i + 1) + "," + std::to_string(k));
  j["columns"] = labels;
  j["kernel"] = points_json(g.kernel);
  j["volume"] = integer_json(gkz_volume(g));
  if (g.kernel.size() != 1) {
    j["one_parameter"] = false;
    return j;
  }
  const IntVector ell = principal_kernel_vector(g);
  const auto shape = OneParameterShape::from_gkz(g, ell);
  j["one_parameter"] = true;
  j["ell"] = point_json(ell);
  j["box_check"] = box_annihilation_check(ell, g.alpha, holo_solution(shape, opt.order));
  j["omega0"] = series_json(holo_solution(shape, opt.order), "z");
  return j;
}

Json pf_report(const GeometryInput& in, const Options& opt) {
  const OneParameter p = one_parameter(make_nef_partition(in.delta, in.parts));
  Json j = theta_operator_json(p.op);
  j["annihilates_omega0"] = apply(p.op, holo_solution(p.shape, opt.order)).is_zero();
  if (p.op.degree() == 4) {
    j["yukawa_rhs"] = yukawa_ode_rhs(p.op).display();
  } else {
    j["yukawa_rhs"] = nullptr;
  }
  return j;
}

Json mirror_map_report(const GeometryInput& in, const Options& opt) {
  const OneParameter p = one_parameter(make_nef_partition(in.delta, in.parts));
  const FrobeniusPair pair = frobenius_pair(p.shape, opt.order);
  const MirrorMap m = mirror_map(pair);
  Json j;
  j["scale"] = integer_json(pair.scale);
  j["omega0"] = series_json(pair.omega0, "z");
  j["tau"] = series_json(pair.tau, "z");
  j["q_of_z"] = series_json(m.q_of_z, "z");
  j["z_of_q"] = series_json(m.z_of_q, "q");
  return j;
}

Json yukawa_report(const GeometryInput& in, const Options& opt) {
  const OneParameter p = one_parameter(make_nef_partition(in.delta, in.parts));
  const Rational c = normalization(in, opt);
  const FrobeniusPair pair = frobenius_pair(p.shape, opt.order + 1);
  const YukawaData y = yukawa_data(p.op, pair, c, opt.order);
  Json j;
  j["C"] = to_string(c);
  j["ode_rhs"] = yukawa_ode_rhs(p.op).display();
  j["Y_omega"] = series_json(yukawa_omega(p.op, c, opt.order), "z");
  j["Y_z"] = series_json(y.y_z, "z");
  j["K_q"] = series_json(y.k_q, "q");
  return j;
}

Json ifunction_report(const GeometryInput& in, const Options& opt) {
  if (!in.ifunction) throw ValidationError("input has no ifunction weights");
  const OneParameter p = one_parameter(make_nef_partition(in.delta, in.parts));
  const std::size_t m = p.op.degree() + 1;
  const NilpotentSeries i = i_function_untwisted(in.ifunction->numerator, in.ifunction->denominator, m, opt.order);
  const RationalSeries ba = i_function_mirror_map(i);
  const FrobeniusPair pair = frobenius_pair(p.shape, opt.order);
  const RationalSeries zq = RationalSeries::variable(opt.order) * Rational(pair.scale);
  Json j;
  j["numerator"] = in.ifunction->numerator;
  j["denominator"] = in.ifunction->denominator;
  j["nilpotency"] = m;
  Json coeffs = Json::array();
  for (std::size_t d = 0; d <= opt.order; ++d) coeffs.push_back(eps_json(i.coefficient(d)));
  j["eps_coefficients"] = coeffs;
  j["A"] = series_json(i.slice(0).part(0), "q");
  j["B_over_A"] = series_json(ba, "q");
  j["matches_frobenius_mirror_map"] = compose(pair.tau / pair.omega0, zq) == ba;
  return j;
}

Json bseries_report(const GeometryInput& in, const Options& opt) {
  const OneParameter p = one_parameter(make_nef_partition(in.delta, in.parts));
  const std::size_t d = p.op.degree();
  const CohomRing ring = CohomRing::one_parameter(p.gkz, p.ell, d, 1);
  const NilpotentSeries b = b_series(ring, p.gkz, p.ell, opt.order);
  const FrobeniusResidue r = frobenius_residue(p.op, deformed_solution(p.shape, opt.order, d + 1));
  Json j;
  j["divisors"] = rationals_json(ring.divisors);
  j["nilpotency"] = d;
  Json slices = Json::array();
  for (const auto& s : b.slices()) slices.push_back(log_series_json(s, "z"));
  j["slices"] = slices;
  j["annihilated"] = apply(p.op, b).is_zero();
  j["frobenius_residue_certified"] = r.certified();
  if (!r.certified()) {
    const auto [n, k] = r.offending.front();
    throw AssertionFailure("Frobenius residue nonzero at z^" + std::to_string(n) + " ρ^" + std::to_string(k));
  }
  return j;
}

Json transition_report(const TransitionInput& in) {
  Json j;
  const LatticeRelations rel = smith_relations(IntegerMatrix::from_columns(in.rho));
  j["index"] = integer_json(rel.index);
  j["relations"] = points_json(rel.kernel);
  j["transform_matches_nu"] = lattice_transform(in.basis_change, in.rho) == in.nu;
  const std::size_t dim = in.nu.front().size();
  const LatticePolytope nabla2 = convex_hull(in.nabla2, dim);
  const LatticePolytope nabla1 = convex_hull(in.nabla1, dim);
  j["nabla2_is_hull_of_nu"] = convex_hull(in.nu, dim) == nabla2;
  j["nabla2_reflexive"] = is_reflexive(nabla2);
  j["polar_nabla2_is_delta2"] = is_reflexive(nabla2) && polar_dual(nabla2) == convex_hull(in.delta2, dim);
  j["nabla1_reflexive"] = is_reflexive(nabla1);
  j["polar_nabla1_is_delta1"] = is_reflexive(nabla1) && polar_dual(nabla1) == convex_hull(in.delta1, dim);
  return j;
}

Json all_report(const Input& in, const Options& opt) {
  if (in.transition) {
    Json j;
    j["input"] = in.transition->name;
    j["transition"] = transition_report(*in.transition);
    return j;
  }
  const GeometryInput& g = *in.geometry;
  Json j;
  j["input"] = g.name;
  j["N"] = opt.order;
  j["dual_nef"] = dual_nef_report(g);
  j["euler"] = euler_report(g);
  j["hodge"] = hodge_report(g);
  j["gkz"] = gkz_report(g, opt);
  if (!j["gkz"]["one_parameter"].get<bool>()) return j;
  j["pf"] = pf_report(g, opt);
  j["mirror_map"] = mirror_map_report(g, opt);
  if (j["pf"]["degree"].get<std::size_t>() == 4) {
    j["yukawa"] = yukawa_report(g, opt);
  } else {
    j["yukawa"] = {{"skipped", "Yukawa ODE defined for threefold operators"}};
  }
  if (g.ifunction) {
    j["ifunction"] = ifunction_report(g, opt);
  } else {
    j["ifunction"] = {{"skipped", "input has no ifunction weights"}};
  }
  return j;
}

Json run_command(const std::string& command, const Input& in, const Options& opt) {
  if (command == "all") return all_report(in, opt);
  if (command == "transition") {
    if (!in.transition) throw ValidationError("transition needs a transition input file");
    return transition_report(*in.transition);
  }
  if (!in.geometry) throw ValidationError(command + " needs a geometry input file");
  const GeometryInput& g = *in.geometry;
  if (command == "dual-nef") return dual_nef_report(g);
  if (command == "euler") return euler_report(g);
  if (command == "hodge") return hodge_report(g);
  if (command == "gkz") return gkz_report(g, opt);
  if (command == "pf") return pf_report(g, opt);
  if (command == "mirror-map") return mirror_map_report(g, opt);
  if (command == "yukawa") return yukawa_report(g, opt);
  if (command == "ifunction") return ifunction_report(g, opt);
  if (command == "bseries") return bseries_report(g, opt);
  throw ValidationError("unknown command " + command);
}

std::string render_table(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace fracmirror::cli
