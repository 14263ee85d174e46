#include "tvar/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace tvar;

namespace {

struct Options {
  std::string input;
  std::string valuation;
  std::string output;
  int degree_bound = 6;
  bool json = false;
  int index_base = 1;
  std::optional<std::size_t> cone;
  std::vector<std::string> weight;
  std::vector<std::string> grid;
  int dilations = 3;
};

struct Result {
  Json json;
  std::string text;
  int code = 0;
};

auto names_for(std::size_t n, const Options &o) { return default_names(n, o.index_base); }

auto join(const std::vector<std::string> &xs, const char *sep) -> std::string {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

auto vec_text(const IntVec &v) -> std::string {
  std::vector<std::string> xs;
  for (const auto &z : v) xs.push_back(z.get_str());
  return "(" + join(xs, ",") + ")";
}

auto vec_text(const RatVec &v) -> std::string {
  std::vector<std::string> xs;
  for (const auto &q : v) xs.push_back(to_string(q));
  return "(" + join(xs, ",") + ")";
}

auto run_embed(const Options &o) -> Result {
  const auto d = divisor_from_json(read_json_file(o.input));
  const auto e = build_embedding(d);
  Result r{to_json(e), "", 0};
  r.text = "n = " + std::to_string(e.n()) + "\nHilbert basis:";
  for (const auto &h : e.H) r.text += " " + vec_text(h);
  r.text += "\n";
  if (auto w = properness_warning(d)) {
    r.json["warning"] = *w;
    r.text += "warning: " + *w + "\n";
  }
  return r;
}

auto run_ideal(const Options &o) -> Result {
  const auto d = divisor_from_json(read_json_file(o.input));
  const auto e = build_embedding(d);
  const auto line = line_from_divisor(d);
  const auto ideal = ideal_presentation(e, line, d, o.degree_bound);
  const auto names = names_for(e.n(), o);
  Result r{to_json(ideal, names), "", 0};
  for (const auto &f : ideal.all()) r.text += to_string(f, names) + "\n";
  if (!ideal.warning.empty()) r.text += "warning: " + ideal.warning + "\n";
  return r;
}

auto run_trop(const Options &o) -> Result {
  const auto d = divisor_from_json(read_json_file(o.input));
  const auto e = build_embedding(d);
  const auto fan = trop_X(e, line_from_divisor(d));
  Result r{to_json(fan), "", 0};
  r.text = "lineality dimension " + std::to_string(fan.lineality_dim) + "\n";
  for (std::size_t j = 0; j < fan.cone_rays.size(); ++j)
    r.text += "cone " + std::to_string(j) + ": ray " + vec_text(fan.line_rays[j]) + " weight " +
              vec_text(fan.cone_rays[j]) + "\n";
  return r;
}

auto run_initial(const Options &o) -> Result {
  const auto d = divisor_from_json(read_json_file(o.input));
  const auto e = build_embedding(d);
  const auto line = line_from_divisor(d);
  IntVec w;
  if (o.cone) {
    const auto rays = trop_line(line).rays;
    if (*o.cone >= rays.size()) throw InputError("--cone", "cone index out of range");
    IntVec v(e.rank_N, 0);
    v.insert(v.end(), rays[*o.cone].begin(), rays[*o.cone].end());
    w = phi(e, v);
  } else {
    for (std::size_t i = 0; i < o.weight.size(); ++i) {
      Int z;
      if (z.set_str(o.weight[i], 10) != 0) throw InputError("--weight/" + std::to_string(i), "malformed integer");
      w.push_back(z);
    }
    if (w.size() != e.n()) throw InputError("--weight", "weight must have one entry per variable");
  }
  const auto names = names_for(e.n(), o);
  Json gens = Json::array(), text = Json::array();
  bool monomial = false;
  Result r;
  for (const auto &g : ideal_presentation(e, line, d, o.degree_bound).all()) {
    auto in = initial_form(g, w);
    monomial = monomial || in.is_monomial();
    gens.push_back(to_json(in));
    text.push_back(to_string(in, names));
    r.text += to_string(in, names) + "\n";
  }
  r.json = {{"weight", to_json(w)}, {"convention", "min"}, {"initial_gens", gens}, {"text", text},
            {"contains_monomial_generator", monomial}};
  return r;
}

auto run_well_poised(const Options &o) -> Result {
  const Json j = read_json_file(o.input);
  WellPoisedReport rep;
  std::vector<std::string> names;
  if (j.contains("columns")) {
    const auto c = custom_from_json(j);
    names = names_for(c.embedding.columns.size(), o);
    rep = verify_well_poised(c.embedding, c.line, c.rank_N, o.degree_bound);
  } else {
    const auto d = divisor_from_json(j);
    const auto e = build_embedding(d);
    names = names_for(e.n(), o);
    rep = verify_well_poised(e, line_from_divisor(d), d, o.degree_bound);
  }
  Result r{to_json(rep, names), "", rep.well_poised ? 0 : 2};
  for (const auto &c : rep.cones) {
    r.text += "cone " + std::to_string(c.index) + " weight " + vec_text(c.weight) + (c.match ? ": ok" : ": FAIL");
    if (!c.match) r.text += " (" + c.witness + ")";
    r.text += "\n";
  }
  r.text += rep.well_poised ? "well-poised\n" : "not well-poised\n";
  return r;
}

auto parse_grid(const Options &o) -> std::optional<std::array<Int, 4>> {
  if (o.grid.empty()) return std::nullopt;
  std::array<Int, 4> g;
  for (std::size_t i = 0; i < 4; ++i)
    if (g[i].set_str(o.grid[i], 10) != 0) throw InputError("--grid/" + std::to_string(i), "malformed integer");
  return g;
}

auto run_value_semigroup(const Options &o) -> Result {
  const auto d = divisor_from_json(read_json_file(o.input));
  const auto e = build_embedding(d);
  const auto line = line_from_divisor(d);
  if (o.valuation.empty()) throw InputError("--valuation", "a valuation file is required");
  const auto val = valuation_from_json(read_json_file(o.valuation), line);
  const ValueSemigroup s(e, line, d, val);
  const auto kh = khovanskii_check(e, line, d, val, o.degree_bound);

  Json slices = Json::array();
  for (const auto &u : sigma_dual_points(d.tailcone, o.degree_bound)) {
    auto reg = s.region(u);
    if (!reg || reg->empty()) continue;
    slices.push_back({{"u", to_json(u)},
                      {"lo", reg->lo ? to_json(Rat(*reg->lo)) : Json(nullptr)},
                      {"hi", reg->hi ? to_json(Rat(*reg->hi)) : Json(nullptr)}});
  }
  Result r;
  r.json = {{"valuation", to_json(val, s.point_index())},
            {"variable_values", to_json(s.variable_values())},
            {"generators", to_json(s.generators())},
            {"region", {{"point_index", s.point_index()}, {"degree_bound", o.degree_bound}, {"slices", slices}}},
            {"khovanskii", to_json(kh)}};
  r.text = "generator values:";
  for (const auto &g : s.generators()) r.text += " " + vec_text(g);
  r.text += std::string("\nKhovanskii check: ") + (kh.passed ? "passed" : "FAILED") + " (" +
            std::to_string(kh.elements) + " basis elements)\n";
  if (kh.witness) r.text += "witness: " + kh.witness->reason + "\n";
  if (auto g = parse_grid(o)) {
    Json grid = Json::array();
    for (const auto &p : membership_grid(s, (*g)[0], (*g)[1], (*g)[2], (*g)[3])) {
      grid.push_back({{"q", to_json(p.q)}, {"member", p.member}});
      r.text += vec_text(p.q) + (p.member ? " member\n" : " -\n");
    }
    r.json["grid"] = grid;
  }
  r.code = kh.passed ? 0 : 2;
  return r;
}

auto run_nok_body(const Options &o) -> Result {
  const Json j = read_json_file(o.input);
  const auto p = polarized_from_json(j);
  const auto line = line_from_divisor(p.divisor);
  if (o.valuation.empty()) throw InputError("--valuation", "a valuation file is required");
  const Json vj = read_json_file(o.valuation);
  const IntMat psi = int_mat_from_json(vj.at("psi"), "/psi");
  const IntVec gamma = int_vec_from_json(vj.at("gamma"), "/gamma");
  const std::size_t jj = vj.at("point_index").get<std::size_t>();
  const auto body = nok_body(p, line, jj, psi, gamma);
  Result r{to_json(body), "", 0};
  r.text = "vertices:";
  for (const auto &v : body.vertices) r.text += " " + vec_text(v);
  r.text += "\n";
  Json counts = Json::array();
  for (int k = 1; k <= o.dilations; ++k) {
    const auto pts = count_dilation_points(body, k);
    const auto secs = section_count(p, line, k);
    counts.push_back({{"k", k}, {"lattice_points", pts}, {"sections", secs}});
    r.text += "k=" + std::to_string(k) + ": " + std::to_string(pts) + " lattice points, " + std::to_string(secs) +
              " sections\n";
    if (pts != secs) r.code = 2;
  }
  r.json["dilation_counts"] = counts;
  return r;
}

auto run_test_configs(const Options &o, bool bound_given) -> Result {
  const auto p = polarized_from_json(read_json_file(o.input));
  const auto line = line_from_divisor(p.divisor);
  const auto fibers = test_config_fibers(p, line, bound_given ? o.degree_bound : 4);
  Json out = Json::array();
  Result r;
  std::size_t nontrivial = 0;
  for (const auto &f : fibers) {
    out.push_back(to_json(f));
    if (f.label != "trivial") ++nontrivial;
    const auto names = names_for(f.generators.size(), o);
    r.text += f.label + (f.merged.empty() ? "" : " (also " + join(f.merged, ", ") + ")") + ": " +
              std::to_string(f.generators.size()) + " generators, " + (f.normal ? "normal" : "not normal") + "\n";
    for (const auto &g : f.ideal_generators) r.text += "  " + to_string(g, names) + "\n";
  }
  r.json = {{"fibers", out},
            {"nontrivial_classes", nontrivial},
            {"isomorphism", "lattice isomorphism of the generated groups fixing the grading, preserving the generators"}};
  return r;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations for rational complexity-one T-varieties given by polyhedral divisors on P^1.\n"
               "Initial forms use the min convention: In_w keeps the terms of minimal w-weight."};
  app.require_subcommand(1);
  Options o;
  app.add_option("--degree-bound", o.degree_bound, "Degree bound for ideal computations")->check(CLI::Range(2, 64));
  app.add_flag("--json", o.json, "Emit canonical JSON instead of text");
  app.add_option("-o,--output", o.output, "Write output to a file");
  app.add_option("--index-base", o.index_base, "First variable index in printed polynomials")->check(CLI::Range(0, 1));

  auto add = [&](const char *name, const char *help) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Input JSON file")->required()->check(CLI::ExistingFile);
    return sub;
  };
  add("embed", "Semi-canonical embedding: cones C, C dual and the Hilbert basis");
  add("ideal", "Defining ideal: toric binomials and lifted linear forms");
  add("trop", "Tropicalization: lineality space and maximal cones");
  auto *initial = add("initial", "Initial forms of the ideal generators");
  auto *cone_opt = initial->add_option("--cone", o.cone, "Weight of the j-th maximal cone");
  auto *weight_opt = initial->add_option("--weight", o.weight, "Explicit weight vector")->expected(1, -1);
  cone_opt->excludes(weight_opt);
  initial->callback([&] {
    if (cone_opt->count() + weight_opt->count() == 0) throw CLI::RequiredError("--cone or --weight");
  });
  add("well-poised", "Verify well-poisedness for a divisor or a hand-supplied embedding (exit 2 if not)");
  auto *vs = add("value-semigroup", "Value semigroup of a homogeneous valuation and the Khovanskii check");
  vs->add_option("--valuation", o.valuation, "Valuation JSON")->required()->check(CLI::ExistingFile);
  vs->add_option("--grid", o.grid, "Membership box umin umax vmin vmax")->expected(4);
  auto *nok = add("nok-body", "Newton-Okounkov body of a polarized divisor (exit 2 on count mismatch)");
  nok->add_option("--valuation", o.valuation, "Valuation JSON")->required()->check(CLI::ExistingFile);
  nok->add_option("--dilations", o.dilations, "Check lattice points against sections for k = 1..K")
      ->check(CLI::Range(0, 6));
  add("test-configs", "Special fibers of equivariant degenerations, up to isomorphism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const bool bound_given = app.get_option("--degree-bound")->count() > 0;
  Result r;
  try {
    if (cmd == "embed") r = run_embed(o);
    else if (cmd == "ideal") r = run_ideal(o);
    else if (cmd == "trop") r = run_trop(o);
    else if (cmd == "initial") r = run_initial(o);
    else if (cmd == "well-poised") r = run_well_poised(o);
    else if (cmd == "value-semigroup") r = run_value_semigroup(o);
    else if (cmd == "nok-body") r = run_nok_body(o);
    else r = run_test_configs(o, bound_given);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string payload = o.json ? r.json.dump() + "\n" : r.text;
  if (o.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(o.output);
    if (!out) {
      std::cerr << "error: cannot write " << o.output << "\n";
      return 1;
    }
    out << payload;
  }
  return r.code;
}
