#include "tvar/tropkit.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvar {

auto TropicalLine::balanced() const -> bool {
  if (rays.empty()) return true;
  IntVec sum(rays.front().size(), 0);
  for (std::size_t j = 0; j < rays.size(); ++j)
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += weights[j] * rays[j][i];
  return is_zero(sum);
}

auto trop_line(const Line &line) -> TropicalLine {
  TropicalLine t;
  for (const auto &bp : line.boundary) {
    t.rays.push_back(primitive(bp.ord));
    t.weights.push_back(vec_gcd(bp.ord));
    t.coincidence.push_back(bp.indices.size());
  }
  return t;
}

auto phi(const SemiCanonicalEmbedding &e, const IntVec &v) -> IntVec {
  if (v.size() != e.ambient()) throw std::invalid_argument("phi: dimension mismatch");
  IntVec w;
  for (const auto &h : e.H) w.push_back(dot(v, h));
  return w;
}

auto phi(const CustomEmbedding &c, const IntVec &v) -> IntVec {
  IntVec w;
  for (const auto &h : c.columns) w.push_back(dot(v, h));
  return w;
}

auto trop_X(const SemiCanonicalEmbedding &e, const Line &line) -> TropicalFan {
  TropicalFan f;
  f.ambient = e.n();
  for (std::size_t i = 0; i < e.rank_N; ++i) {
    IntVec v(e.ambient(), 0);
    v[i] = 1;
    f.lineality.push_back(phi(e, v));
  }
  f.lineality_dim = rank(f.lineality, e.n());
  f.line_rays = trop_line(line).rays;
  for (const auto &rho : f.line_rays) {
    IntVec v(e.rank_N, 0);
    v.insert(v.end(), rho.begin(), rho.end());
    f.cone_rays.push_back(phi(e, v));
  }
  return f;
}

auto initial_form(const XPolynomial &f, const IntVec &w) -> XPolynomial {
  XPolynomial out;
  out.nvars = f.nvars;
  if (f.terms.empty()) return out;
  std::optional<Int> best;
  for (const auto &[a, c] : f.terms) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * w[i];
    if (!best || s < *best) {
      best = s;
      out.terms.clear();
    }
    if (s == *best) out.terms.emplace(a, c);
  }
  return out;
}

auto line_circuits(const Line &line) -> IntMat {
  const IntMat R = line.relations();
  const std::size_t k = R.size(), n = line.forms.size();
  IntMat out;
  if (k == 0) return out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    RatMat A;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      RatVec row(k);
      for (std::size_t i = 0; i < k; ++i) row[i] = R[i][j];
      A.push_back(std::move(row));
    }
    RatMat lam = rational_kernel(A, k);
    if (lam.size() != 1) continue;
    RatVec x(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) x[j] += lam[0][i] * R[i][j];
    std::size_t support = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (x[j] != 0) support |= std::size_t{1} << j;
    if (support != mask) continue;
    IntVec c = primitive(x);
    auto lead = std::find_if(c.begin(), c.end(), [](const Int &z) { return z != 0; });
    if (*lead < 0)
      for (auto &z : c) z = -z;
    out.push_back(std::move(c));
  }
  return lex_sorted_unique(std::move(out));
}

auto degenerate_line(const Line &line, const IntVec &vz) -> Line {
  const std::size_t n = line.forms.size();
  if (vz.size() + 1 != n) throw std::invalid_argument("degenerate_line: weight has wrong length");
  IntVec wy(n, 0);
  for (std::size_t i = 1; i < n; ++i) wy[i] = vz[i - 1];
  RatMat initial;
  for (const auto &c : line_circuits(line)) {
    std::optional<Int> best;
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] != 0 && (!best || wy[i] < *best)) best = wy[i];
    RatVec in(n, 0);
    std::size_t terms = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] != 0 && wy[i] == *best) {
        in[i] = c[i];
        ++terms;
      }
    if (terms == 1)
      throw std::domain_error("initial ideal of the line contains a monomial: weight is not on the tropical line");
    initial.push_back(std::move(in));
  }
  RatMat K = rational_kernel(initial, n);
  if (K.size() != 2) throw std::domain_error("degenerate_line: initial forms do not cut out a line");
  rref(K, n);
  std::vector<std::pair<Rat, Rat>> forms;
  for (std::size_t i = 0; i < n; ++i) forms.emplace_back(K[0][i], K[1][i]);
  return Line::from_forms(forms);
}

namespace {

auto all_in(const std::vector<XPolynomial> &fs, const MacaulaySpace &space, std::string &witness,
            const std::vector<std::string> &names, const char *label) -> bool {
  for (const auto &f : fs)
    if (!space.contains(f)) {
      witness = std::string(label) + ": " + to_string(f, names);
      return false;
    }
  return true;
}

} // namespace

auto verify_well_poised(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d,
                        int degree_bound) -> WellPoisedReport {
  WellPoisedReport rep;
  rep.degree_bound = degree_bound;
  const auto names = default_names(e.n());
  const auto J = ideal_presentation(e, line, d, degree_bound).all();
  const auto tl = trop_line(line);
  for (std::size_t j = 0; j < tl.rays.size(); ++j) {
    ConeReport cr;
    cr.index = j;
    cr.ray = tl.rays[j];
    IntVec v(e.rank_N, 0);
    v.insert(v.end(), cr.ray.begin(), cr.ray.end());
    cr.weight = phi(e, v);
    for (const auto &g : J) {
      cr.initial_gens.push_back(initial_form(g, cr.weight));
      if (cr.initial_gens.back().is_monomial()) {
        cr.monomial_free = false;
        cr.witness = "monomial initial form " + to_string(cr.initial_gens.back(), names);
      }
    }
    Line Lw = degenerate_line(line, cr.ray);
    cr.degenerate_gens = ideal_presentation(e, Lw, d, degree_bound).all();
    MacaulaySpace S1(cr.initial_gens, e.n(), degree_bound);
    MacaulaySpace S2(cr.degenerate_gens, e.n(), degree_bound);
    std::string w1, w2;
    cr.initial_in_degenerate = all_in(cr.initial_gens, S2, w1, names, "initial generator outside J(L_w)");
    cr.degenerate_in_initial = all_in(cr.degenerate_gens, S1, w2, names, "J(L_w) generator outside initial ideal");
    cr.match = cr.monomial_free && cr.initial_in_degenerate && cr.degenerate_in_initial;
    if (cr.witness.empty()) cr.witness = !w1.empty() ? w1 : w2;
    rep.well_poised = rep.well_poised && cr.match;
    rep.cones.push_back(std::move(cr));
  }
  return rep;
}

auto verify_well_poised(const CustomEmbedding &c, const Line &line, std::size_t rank_N, int degree_bound)
    -> WellPoisedReport {
  WellPoisedReport rep;
  rep.degree_bound = degree_bound;
  const std::size_t n = c.columns.size();
  const auto names = default_names(n);
  const auto tl = trop_line(line);
  for (std::size_t j = 0; j < tl.rays.size(); ++j) {
    ConeReport cr;
    cr.index = j;
    cr.ray = tl.rays[j];
    IntVec v(rank_N, 0);
    v.insert(v.end(), cr.ray.begin(), cr.ray.end());
    cr.weight = phi(c, v);
    for (const auto &g : c.generators) {
      cr.initial_gens.push_back(initial_form(g, cr.weight));
      if (cr.initial_gens.back().is_monomial()) {
        cr.monomial_free = false;
        cr.witness = "monomial initial form " + to_string(cr.initial_gens.back(), names);
      }
    }
    MacaulaySpace S(cr.initial_gens, n, degree_bound);
    for (const auto &g : cr.initial_gens) {
      if (!cr.match || g.terms.size() < 2) continue;
      Mono common = g.terms.begin()->first;
      for (const auto &[a, x] : g.terms)
        for (std::size_t i = 0; i < n; ++i) common[i] = std::min(common[i], a[i]);
      for (std::size_t i = 0; i < n && cr.match; ++i) {
        if (common[i] == 0) continue;
        XPolynomial xi = XPolynomial::variable(n, i);
        XPolynomial h;
        h.nvars = n;
        for (const auto &[a, x] : g.terms) {
          Mono b = a;
          b[i] -= 1;
          h.terms.emplace(std::move(b), x);
        }
        if (!S.contains(xi) && !S.contains(h)) {
          cr.match = false;
          cr.witness = "initial ideal not prime: " + to_string(g, names) + " = " + names[i] + " * (" +
                       to_string(h, names) + ") with neither factor in the ideal, so it cannot equal the prime J(L_w)";
        }
      }
    }
    cr.match = cr.match && cr.monomial_free;
    rep.well_poised = rep.well_poised && cr.match;
    rep.cones.push_back(std::move(cr));
  }
  return rep;
}

auto iterated_initial(const std::vector<XPolynomial> &gens, const IntMat &W) -> IteratedInitial {
  IteratedInitial out;
  out.generators = gens;
  for (std::size_t r = 0; r < W.size(); ++r) {
    for (auto &g : out.generators) {
      g = initial_form(g, W[r]);
      if (g.is_monomial() && !out.monomial) {
        out.monomial = true;
        out.monomial_row = r;
      }
    }
  }
  return out;
}

} // namespace tvar
