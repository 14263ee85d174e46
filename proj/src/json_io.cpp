#include "tvar/json_io.hpp"

#include <fstream>

namespace tvar {

namespace {

auto at(const Json &j, const std::string &pointer, const char *key) -> const Json & {
  if (!j.is_object()) throw InputError(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(pointer + "/" + key, "missing field");
  return *it;
}

auto int_from_json(const Json &j, const std::string &pointer) -> Int {
  if (j.is_number_integer()) return Int(j.dump());
  if (j.is_string()) {
    Int z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw InputError(pointer, "malformed integer");
}

auto index_from_json(const Json &j, const std::string &pointer) -> std::size_t {
  if (!j.is_number_unsigned()) throw InputError(pointer, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

auto array_at(const Json &j, const std::string &pointer) -> const Json & {
  if (!j.is_array()) throw InputError(pointer, "expected an array");
  return j;
}

auto idx(const std::string &pointer, std::size_t i) -> std::string { return pointer + "/" + std::to_string(i); }

// Re-throws library validation errors against the whole document.
template <class F> auto validated(const std::string &pointer, F &&f) {
  try {
    return f();
  } catch (const InputError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw InputError(pointer, e.what());
  } catch (const std::domain_error &e) {
    throw InputError(pointer, e.what());
  }
}

} // namespace

auto read_json_file(const std::string &path) -> Json {
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw InputError("", path + ": " + e.what());
  }
}

auto to_json(const Rat &r) -> Json { return to_string(r); }

auto to_json(const IntVec &v) -> Json {
  Json out = Json::array();
  for (const auto &z : v) {
    if (z.fits_slong_p())
      out.push_back(z.get_si());
    else
      out.push_back(z.get_str());
  }
  return out;
}

auto to_json(const IntMat &m) -> Json {
  Json out = Json::array();
  for (const auto &v : m) out.push_back(to_json(v));
  return out;
}

auto to_json(const RatVec &v) -> Json {
  Json out = Json::array();
  for (const auto &q : v) out.push_back(to_json(q));
  return out;
}

auto to_json(const RatMat &m) -> Json {
  Json out = Json::array();
  for (const auto &v : m) out.push_back(to_json(v));
  return out;
}

auto to_json(const Cone &c) -> Json { return {{"rays", to_json(c.rays)}, {"facets", to_json(c.facets)}}; }

auto to_json(const Polyhedron &p) -> Json {
  return {{"vertices", to_json(p.vertices)}, {"tailcone", to_json(p.tailcone)}, {"empty", p.empty}};
}

auto to_json(const XPolynomial &f) -> Json {
  Json terms = Json::array();
  for (const auto &[a, c] : f.terms) terms.push_back({{"exp", a}, {"coeff", to_json(c)}});
  return {{"terms", terms}};
}

auto to_json(const PolyhedralDivisor &d) -> Json {
  Json points = Json::array();
  for (const auto &p : d.points) points.push_back({to_json(p.a), to_json(p.b)});
  Json coeffs = Json::array();
  for (const auto &P : d.coefficients) coeffs.push_back({{"empty", P.empty}, {"vertices", to_json(P.vertices)}});
  return {{"rank_N", d.rank_N}, {"tailcone_rays", to_json(d.tailcone.rays)}, {"points", points}, {"coefficients", coeffs}};
}

auto to_json(const Line &line) -> Json {
  Json forms = Json::array();
  for (const auto &[c0, c1] : line.forms) forms.push_back({to_json(c0), to_json(c1)});
  Json boundary = Json::array();
  for (const auto &bp : line.boundary)
    boundary.push_back(
        {{"param", {to_json(bp.param.a), to_json(bp.param.b)}}, {"ord", to_json(bp.ord)}, {"indices", bp.indices}});
  return {{"forms", forms}, {"boundary", boundary}};
}

auto to_json(const SemiCanonicalEmbedding &e) -> Json {
  return {{"rank_N", e.rank_N}, {"m", e.m},          {"n", e.n()},
          {"cone_C", to_json(e.cone_C)}, {"dual_C", to_json(e.dual_C)}, {"hilbert_basis", to_json(e.H)}};
}

namespace {

auto poly_list(const std::vector<XPolynomial> &fs, const std::vector<std::string> &names) -> std::pair<Json, Json> {
  Json polys = Json::array(), text = Json::array();
  for (const auto &f : fs) {
    polys.push_back(to_json(f));
    text.push_back(to_string(f, names));
  }
  return {polys, text};
}

} // namespace

auto to_json(const IdealPresentation &ideal, const std::vector<std::string> &names) -> Json {
  auto [toric, toric_text] = poly_list(ideal.toric_generators, names);
  auto [linear, linear_text] = poly_list(ideal.linear_lift_generators, names);
  Json out = {{"toric_generators", toric},
              {"linear_lift_generators", linear},
              {"text", {{"toric", toric_text}, {"linear", linear_text}}},
              {"degree_bound_used", ideal.degree_bound},
              {"toric_complete", ideal.toric_complete}};
  if (!ideal.warning.empty()) out["warning"] = ideal.warning;
  return out;
}

auto to_json(const TropicalFan &f) -> Json {
  return {{"ambient", f.ambient},
          {"lineality", to_json(f.lineality)},
          {"lineality_dim", f.lineality_dim},
          {"line_rays", to_json(f.line_rays)},
          {"cone_rays", to_json(f.cone_rays)},
          {"maximal_cones", f.cone_rays.size()}};
}

auto to_json(const WellPoisedReport &r, const std::vector<std::string> &names) -> Json {
  Json cones = Json::array();
  for (const auto &c : r.cones) {
    auto [gens, text] = poly_list(c.initial_gens, names);
    Json cone = {{"ray", to_json(c.ray)},
                 {"weight", to_json(c.weight)},
                 {"initial_gens", gens},
                 {"initial_text", text},
                 {"monomial_free", c.monomial_free},
                 {"match", c.match}};
    if (!c.witness.empty()) cone["witness"] = c.witness;
    cones.push_back(std::move(cone));
  }
  return {{"cones", cones}, {"well_poised", r.well_poised}, {"degree_bound", r.degree_bound}};
}

auto to_json(const HomogeneousValuation &v, std::size_t point_index) -> Json {
  return {{"psi", to_json(v.psi)}, {"point_index", point_index}, {"gamma", to_json(v.gamma)}};
}

auto to_json(const KhovanskiiReport &r) -> Json {
  Json out = {{"passed", r.passed}, {"degrees", r.degrees}, {"elements", r.elements}};
  if (r.witness)
    out["witness"] = {{"u", to_json(r.witness->u)},
                      {"exponent", to_json(r.witness->exponent)},
                      {"value", to_json(r.witness->value)},
                      {"reason", r.witness->reason}};
  return out;
}

auto to_json(const NOBody &b) -> Json {
  return {{"point_index", b.point_index},
          {"rho", to_json(b.rho)},
          {"inequalities", to_json(b.inequalities)},
          {"vertices", to_json(b.vertices)},
          {"preimage_inequalities", to_json(b.preimage_inequalities)},
          {"preimage_vertices", to_json(b.preimage_vertices)}};
}

auto to_json(const DegenerationFiber &f) -> Json {
  Json out = {{"label", f.label}};
  out["point_index"] = f.point_index ? Json(*f.point_index) : Json(nullptr);
  out["generators"] = to_json(f.generators);
  Json ideal = Json::array();
  for (const auto &g : f.ideal_generators) ideal.push_back(to_json(g));
  out["ideal_generators"] = ideal;
  out["normal"] = f.normal;
  out["ideal_complete"] = f.ideal_complete;
  out["merged"] = f.merged;
  return out;
}

auto rat_from_json(const Json &j, const std::string &pointer) -> Rat {
  if (j.is_number_integer()) return Rat(Int(j.dump()));
  if (!j.is_string()) throw InputError(pointer, "malformed rational");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument &) {
    throw InputError(pointer, "malformed rational");
  }
}

auto int_vec_from_json(const Json &j, const std::string &pointer) -> IntVec {
  IntVec out;
  std::size_t i = 0;
  for (const auto &x : array_at(j, pointer)) out.push_back(int_from_json(x, idx(pointer, i++)));
  return out;
}

auto int_mat_from_json(const Json &j, const std::string &pointer) -> IntMat {
  IntMat out;
  std::size_t i = 0;
  for (const auto &x : array_at(j, pointer)) {
    out.push_back(int_vec_from_json(x, idx(pointer, i)));
    if (out.back().size() != out.front().size()) throw InputError(idx(pointer, i), "rows have different lengths");
    ++i;
  }
  return out;
}

namespace {

auto rat_vec_from_json(const Json &j, const std::string &pointer) -> RatVec {
  RatVec out;
  std::size_t i = 0;
  for (const auto &x : array_at(j, pointer)) out.push_back(rat_from_json(x, idx(pointer, i++)));
  return out;
}

auto point_from_json(const Json &j, const std::string &pointer) -> ProjPoint {
  if (!j.is_array() || j.size() != 2) throw InputError(pointer, "a point is a pair [a, b]");
  return {rat_from_json(j[0], pointer + "/0"), rat_from_json(j[1], pointer + "/1")};
}

auto divisor_at(const Json &j, const std::string &pointer) -> PolyhedralDivisor {
  const auto &rk = at(j, pointer, "rank_N");
  const std::size_t rank_N = index_from_json(rk, pointer + "/rank_N");
  const IntMat rays = int_mat_from_json(at(j, pointer, "tailcone_rays"), pointer + "/tailcone_rays");
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i].size() != rank_N) throw InputError(idx(pointer + "/tailcone_rays", i), "tailcone ray has wrong length");
  std::vector<ProjPoint> points;
  const auto &pts = array_at(at(j, pointer, "points"), pointer + "/points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    points.push_back(point_from_json(pts[i], idx(pointer + "/points", i)));
    for (std::size_t k = 0; k < i; ++k)
      if (same_point(points[k], points[i])) throw InputError(idx(pointer + "/points", i), "points must be distinct");
  }
  std::vector<std::optional<RatMat>> coeffs;
  const std::string cp = pointer + "/coefficients";
  const auto &cs = array_at(at(j, pointer, "coefficients"), cp);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string ip = idx(cp, i);
    const auto &c = cs[i];
    const auto &empty = at(c, ip, "empty");
    if (!empty.is_boolean()) throw InputError(ip + "/empty", "expected a boolean");
    if (empty.get<bool>()) {
      coeffs.emplace_back(std::nullopt);
      continue;
    }
    RatMat verts;
    const auto &vs = array_at(at(c, ip, "vertices"), ip + "/vertices");
    for (std::size_t k = 0; k < vs.size(); ++k) {
      verts.push_back(rat_vec_from_json(vs[k], idx(ip + "/vertices", k)));
      if (verts.back().size() != rank_N)
        throw InputError(idx(ip + "/vertices", k), "coefficient vertex has wrong length");
    }
    coeffs.emplace_back(std::move(verts));
  }
  if (coeffs.size() != points.size()) throw InputError(cp, "number of points and coefficients differ");
  return validated(pointer, [&] { return PolyhedralDivisor::make(rank_N, rays, points, coeffs); });
}

} // namespace

auto xpolynomial_from_json(const Json &j, const std::string &pointer) -> XPolynomial {
  XPolynomial f;
  const auto &terms = array_at(at(j, pointer, "terms"), pointer + "/terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = idx(pointer + "/terms", i);
    const IntVec e = int_vec_from_json(at(terms[i], tp, "exp"), tp + "/exp");
    if (i == 0) f.nvars = e.size();
    if (e.size() != f.nvars) throw InputError(tp + "/exp", "exponent has wrong length");
    Mono a;
    for (const auto &z : e) {
      if (z < 0 || !z.fits_sint_p()) throw InputError(tp + "/exp", "exponents must be small nonnegative integers");
      a.push_back(static_cast<int>(z.get_si()));
    }
    const Rat c = rat_from_json(at(terms[i], tp, "coeff"), tp + "/coeff");
    if (c != 0) f.terms[a] += c;
    if (f.terms.count(a) && f.terms[a] == 0) f.terms.erase(a);
  }
  return f;
}

auto divisor_from_json(const Json &j) -> PolyhedralDivisor { return divisor_at(j, ""); }

auto line_from_json(const Json &j, const std::string &pointer) -> Line {
  std::vector<std::pair<Rat, Rat>> forms;
  const auto &fs = array_at(at(j, pointer, "forms"), pointer + "/forms");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto p = point_from_json(fs[i], idx(pointer + "/forms", i));
    forms.emplace_back(p.a, p.b);
  }
  return validated(pointer + "/forms", [&] { return Line::from_forms(forms); });
}

auto valuation_from_json(const Json &j, const Line &line) -> HomogeneousValuation {
  const IntMat psi = int_mat_from_json(at(j, "", "psi"), "/psi");
  const IntVec gamma = int_vec_from_json(at(j, "", "gamma"), "/gamma");
  const std::size_t jj = index_from_json(at(j, "", "point_index"), "/point_index");
  if (jj >= line.boundary.size()) throw InputError("/point_index", "point index out of range");
  if (psi.size() != gamma.size()) throw InputError("/psi", "psi must have one row per coordinate of gamma");
  return validated("", [&] { return HomogeneousValuation::at_boundary(line, jj, psi, gamma); });
}

auto polarized_from_json(const Json &j) -> PolarizedInput {
  auto d = divisor_at(j, "");
  const std::size_t t = index_from_json(at(j, "", "grading_index"), "/grading_index");
  return validated("/grading_index", [&] { return PolarizedInput::make(std::move(d), t); });
}

auto custom_from_json(const Json &j) -> CustomInput {
  CustomInput c;
  c.rank_N = index_from_json(at(j, "", "rank_N"), "/rank_N");
  c.line = line_from_json(at(j, "", "line"), "/line");
  c.embedding.columns = int_mat_from_json(at(j, "", "columns"), "/columns");
  for (std::size_t i = 0; i < c.embedding.columns.size(); ++i)
    if (c.embedding.columns[i].size() != c.rank_N + c.line.m())
      throw InputError(idx("/columns", i), "column must have length rank_N + m");
  const auto &gs = array_at(at(j, "", "generators"), "/generators");
  for (std::size_t i = 0; i < gs.size(); ++i) {
    c.embedding.generators.push_back(xpolynomial_from_json(gs[i], idx("/generators", i)));
    if (c.embedding.generators.back().nvars != c.embedding.columns.size())
      throw InputError(idx("/generators", i), "generator has wrong number of variables");
  }
  return c;
}

} // namespace tvar
