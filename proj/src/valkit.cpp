#include "tvar/valkit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tvar {

auto lex_nonnegative(const IntVec &v) -> bool {
  for (const auto &x : v)
    if (x != 0) return x > 0;
  return true;
}

auto lex_less(const IntVec &a, const IntVec &b) -> bool { return a < b; }

auto HomogeneousValuation::rank_M() const -> std::size_t { return psi.empty() ? 0 : psi.front().size(); }

auto HomogeneousValuation::full_rank() const -> bool {
  const std::size_t k = rank_M();
  if (rank(psi, k) != k) return false;
  IntMat aug = psi;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(gamma[i]);
  return rank(aug, k + 1) == k + 1;
}

auto HomogeneousValuation::at_boundary(const Line &line, std::size_t j, IntMat psi, IntVec gamma)
    -> HomogeneousValuation {
  if (j >= line.boundary.size()) throw std::invalid_argument("point index out of range");
  if (psi.size() != gamma.size()) throw std::invalid_argument("psi must have one row per coordinate of gamma");
  for (const auto &row : psi)
    if (row.size() != psi.front().size()) throw std::invalid_argument("psi is not rectangular");
  if (!lex_nonnegative(gamma)) throw std::invalid_argument("gamma must be lexicographically nonnegative");
  return {std::move(psi), line.boundary[j].param, std::move(gamma)};
}

namespace {

using UPoly = std::vector<Rat>; // coefficients in t, lowest first

auto umul(const UPoly &a, const UPoly &b) -> UPoly {
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

auto uord(const UPoly &a) -> std::optional<std::size_t> {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) return i;
  return std::nullopt;
}

// Form c0*s0 + c1*s1 in a local coordinate t centered at Q.
auto local_form(const std::pair<Rat, Rat> &form, const ProjPoint &Q) -> UPoly {
  const ProjPoint q = Q.normalized();
  if (q.b != 0) return {form.first * q.a + form.second, form.first};
  return {form.first, form.second};
}

auto psi_of(const IntMat &psi, const IntVec &u) -> IntVec {
  IntVec out;
  for (const auto &row : psi) out.push_back(dot(row, u));
  return out;
}

} // namespace

auto ord_at(const Line &line, const ProjPoint &Q, const std::map<IntVec, Rat> &f) -> std::optional<Int> {
  if (f.empty()) return std::nullopt;
  const std::size_t m = line.m();
  IntVec low = f.begin()->first;
  for (const auto &[v, c] : f)
    for (std::size_t i = 0; i < m; ++i) low[i] = std::min(low[i], v[i]);
  Int D = 0;
  for (const auto &[v, c] : f) {
    Int s = 0;
    for (std::size_t i = 0; i < m; ++i) s += v[i] - low[i];
    D = std::max(D, s);
  }
  std::vector<UPoly> ell;
  for (const auto &form : line.forms) ell.push_back(local_form(form, Q));
  std::vector<std::vector<UPoly>> powers(m + 1, std::vector<UPoly>{UPoly{1}});
  auto power = [&](std::size_t i, std::size_t e) -> const UPoly & {
    while (powers[i].size() <= e) powers[i].push_back(umul(powers[i].back(), ell[i]));
    return powers[i][e];
  };
  UPoly N{0};
  for (const auto &[v, c] : f) {
    UPoly term{c};
    Int s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto e = static_cast<std::size_t>(Int(v[i] - low[i]).get_ui());
      s += v[i] - low[i];
      term = umul(term, power(i + 1, e));
    }
    term = umul(term, power(0, static_cast<std::size_t>(Int(D - s).get_ui())));
    if (N.size() < term.size()) N.resize(term.size(), 0);
    for (std::size_t k = 0; k < term.size(); ++k) N[k] += term[k];
  }
  auto oN = uord(N);
  if (!oN) return std::nullopt;
  auto o = [&](std::size_t i) { return Int(static_cast<long>(*uord(ell[i]))); };
  Int out = Int(static_cast<long>(*oN)) - D * o(0);
  for (std::size_t i = 0; i < m; ++i) out += low[i] * (o(i + 1) - o(0));
  return out;
}

auto valuation_eval(const HomogeneousValuation &val, const Line &line, const GradedLaurentElement &g) -> IntVec {
  if (g.u.size() != val.rank_M()) throw std::invalid_argument("valuation_eval: degree has wrong length");
  auto ord = ord_at(line, val.point, g.terms);
  if (!ord) throw std::domain_error("valuation of the zero element");
  IntVec out = psi_of(val.psi, g.u);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += *ord * val.gamma[i];
  return out;
}

auto generator_values(const SemiCanonicalEmbedding &e, const Line &line, const HomogeneousValuation &val) -> IntMat {
  IntMat out;
  for (const auto &h : e.H) {
    GradedLaurentElement g;
    g.u.assign(h.begin(), h.begin() + static_cast<long>(e.rank_N));
    g.terms[IntVec(h.begin() + static_cast<long>(e.rank_N), h.end())] = 1;
    out.push_back(valuation_eval(val, line, g));
  }
  return out;
}

auto sigma_degree(const Cone &tailcone) -> IntVec {
  IntVec w(tailcone.dim, 0);
  for (const auto &r : tailcone.rays)
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += r[i];
  if (is_zero(w)) return w;
  return primitive(w);
}

auto sigma_dual_points(const Cone &tailcone, int bound) -> IntMat {
  if (tailcone.is_full_dimensional()) return sigma_dual_points(tailcone, bound, sigma_degree(tailcone));
  return sigma_dual_points(tailcone, bound, IntVec(tailcone.dim, 0));
}

auto sigma_dual_points(const Cone &tailcone, int bound, const IntVec &degree) -> IntMat {
  const std::size_t dim = tailcone.dim;
  const Cone sd = dual_cone(tailcone);
  IntVec lo(dim, -bound), hi(dim, bound);
  const bool graded = !is_zero(degree);
  if (graded) {
    lo.assign(dim, 0);
    hi.assign(dim, 0);
    for (const auto &r : sd.rays) {
      const Int wr = dot(degree, r);
      if (wr <= 0) throw std::invalid_argument("degree is not positive on the dual of the tailcone");
      const Rat scale = Rat(bound) / Rat(wr);
      for (std::size_t i = 0; i < dim; ++i) {
        lo[i] = std::min(lo[i], floor_rat(scale * r[i]));
        hi[i] = std::max(hi[i], ceil_rat(scale * r[i]));
      }
    }
  }
  IntMat out;
  IntVec u(dim);
  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == dim) {
      if (!sd.contains(u)) return;
      if (graded && dot(degree, u) > bound) return;
      out.push_back(u);
      return;
    }
    for (Int x = lo[i]; x <= hi[i]; ++x) {
      u[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

auto lambda_range(const PolyhedralDivisor &d, const Line &line, std::size_t j, const IntVec &u)
    -> std::optional<LambdaRange> {
  if (line.forms.size() != d.coefficients.size())
    throw std::invalid_argument("line and divisor have different numbers of points");
  if (!dual_cone(d.tailcone).contains(u)) return std::nullopt;
  const auto &I = line.boundary.at(j).indices;
  LambdaRange r;
  Int lo = 0, hi = 0;
  bool lo_inf = false, hi_inf = false;
  for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
    auto s = support_value(d.coefficients[i], u);
    const bool in_group = std::find(I.begin(), I.end(), i) != I.end();
    if (s.inf) {
      (in_group ? lo_inf : hi_inf) = true;
      continue;
    }
    (in_group ? lo : hi) += s.floor();
  }
  if (!lo_inf) r.lo = -lo;
  if (!hi_inf) r.hi = hi;
  return r;
}

ValueSemigroup::ValueSemigroup(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d,
                               HomogeneousValuation val)
    : d_(d), line_(line), val_(std::move(val)) {
  auto j = line.boundary_index(val_.point);
  if (!j)
    throw std::invalid_argument("valuation point is not a boundary point of the line; re-embed the line so that it is");
  j_ = *j;
  values_ = generator_values(e, line, val_);
  for (const auto &v : values_)
    if (!is_zero(v)) gens_.push_back(v);
  gens_ = lex_sorted_unique(std::move(gens_));
  try {
    solver_ = std::make_shared<SemigroupSolver>(gens_);
  } catch (const std::invalid_argument &) {
    solver_.reset();
  }
}

auto ValueSemigroup::region(const IntVec &u) const -> std::optional<LambdaRange> {
  return lambda_range(d_, line_, j_, u);
}

auto ValueSemigroup::rho(const IntVec &u, const Int &lambda) const -> IntVec {
  IntVec out = psi_of(val_.psi, u);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += lambda * val_.gamma[i];
  return out;
}

auto ValueSemigroup::contains(const IntVec &q, int search_bound) const -> bool {
  if (q.size() != val_.r()) throw std::invalid_argument("query has wrong length");
  const std::size_t k = val_.rank_M();
  auto accept = [&](const IntVec &u, const Int &lambda) {
    auto r = region(u);
    return r && r->contains(lambda);
  };
  if (val_.full_rank()) {
    RatMat A;
    for (std::size_t i = 0; i < q.size(); ++i) {
      RatVec row = to_rat(val_.psi[i]);
      row.push_back(val_.gamma[i]);
      A.push_back(std::move(row));
    }
    auto x = rational_solve(A, to_rat(q), k + 1);
    if (!x) return false;
    for (const auto &c : *x)
      if (!is_integral(c)) return false;
    IntVec u;
    for (std::size_t i = 0; i < k; ++i) u.push_back((*x)[i].get_num());
    return accept(u, (*x)[k].get_num());
  }
  for (const auto &u : sigma_dual_points(d_.tailcone, search_bound)) {
    IntVec res = psi_of(val_.psi, u);
    for (std::size_t i = 0; i < res.size(); ++i) res[i] = q[i] - res[i];
    if (is_zero(val_.gamma)) {
      auto r = region(u);
      if (is_zero(res) && r && !r->empty()) return true;
      continue;
    }
    std::optional<Rat> lambda;
    bool ok = true;
    for (std::size_t i = 0; i < res.size() && ok; ++i) {
      if (val_.gamma[i] == 0) {
        ok = res[i] == 0;
      } else {
        Rat l = Rat(res[i]) / Rat(val_.gamma[i]);
        if (lambda && *lambda != l) ok = false;
        lambda = l;
      }
    }
    if (ok && lambda && is_integral(*lambda) && accept(u, lambda->get_num())) return true;
  }
  return false;
}

auto ValueSemigroup::generated(const IntVec &q) const -> bool {
  if (!solver_) throw std::domain_error("generator values span a non-pointed cone");
  return solver_->contains(q);
}

auto membership_grid(const ValueSemigroup &s, const Int &umin, const Int &umax, const Int &vmin, const Int &vmax)
    -> std::vector<GridPoint> {
  if (s.valuation().r() != 2) throw std::invalid_argument("grid output needs a rank-2 valuation");
  std::vector<GridPoint> out;
  for (Int a = umin; a <= umax; ++a)
    for (Int b = vmin; b <= vmax; ++b) {
      IntVec q{a, b};
      out.push_back({q, s.contains(q)});
    }
  return out;
}

auto khovanskii_check(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d,
                      const HomogeneousValuation &val, int degree_bound) -> KhovanskiiReport {
  const ValueSemigroup S(e, line, d, val);
  for (const auto &P : d.coefficients)
    if (P.empty) throw std::domain_error("khovanskii_check needs nonempty coefficients");
  const auto &I = line.boundary[S.point_index()].indices;
  const bool pole = std::find(I.begin(), I.end(), 0) != I.end();
  std::size_t k = 0;
  for (std::size_t i = 1; i < line.forms.size() && k == 0; ++i) {
    const bool in_group = std::find(I.begin(), I.end(), i) != I.end();
    if (in_group != pole) k = i;
  }
  if (k == 0) throw std::domain_error("no coordinate of the line is adapted to the point");

  KhovanskiiReport rep;
  const std::size_t m = d.m();
  auto fail = [&](IntVec u, IntVec w, IntVec value, std::string reason) {
    rep.passed = false;
    rep.witness = KhovanskiiWitness{std::move(u), std::move(w), std::move(value), std::move(reason)};
  };
  for (const auto &u : sigma_dual_points(d.tailcone, degree_bound)) {
    ++rep.degrees;
    IntVec floors;
    Int d_u = 0;
    for (const auto &P : d.coefficients) {
      floors.push_back(support_value(P, u).floor());
      d_u += floors.back();
    }
    std::set<IntVec> values;
    for (Int a = 0; a <= d_u; ++a) {
      IntVec w(m);
      for (std::size_t i = 0; i < m; ++i) w[i] = -floors[i + 1];
      w[k - 1] += a;
      IntVec value = valuation_eval(val, line, GradedLaurentElement{u, {{w, Rat(1)}}});
      ++rep.elements;
      if (!S.generated(value)) {
        fail(u, w, value, "value is not generated by the generator values");
        return rep;
      }
      if (!values.insert(value).second) {
        fail(u, w, value, "two basis elements have the same value");
        return rep;
      }
    }
    std::set<IntVec> slice;
    if (auto r = S.region(u); r && !r->empty() && r->lo && r->hi)
      for (Int l = *r->lo; l <= *r->hi; ++l) slice.insert(S.rho(u, l));
    if (slice != values) {
      fail(u, {}, {}, "values of the graded piece differ from the region slice");
      return rep;
    }
  }
  return rep;
}

auto weight_matrix_from_valuation(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d,
                                  const HomogeneousValuation &val, int degree_bound) -> WeightMatrixReport {
  if (!val.full_rank()) throw std::invalid_argument("valuation is not of full rank");
  auto j = line.boundary_index(val.point);
  WeightMatrixReport rep;
  rep.W = transpose(generator_values(e, line, val), val.r());
  const auto J = ideal_presentation(e, line, d, degree_bound).all();
  rep.iterated = iterated_initial(J, rep.W);
  rep.in_trop_r = !rep.iterated.monomial;
  for (std::size_t i = 0; i < val.r(); ++i)
    if (val.gamma[i] != 0) {
      rep.active_row = i;
      break;
    }
  if (!rep.active_row) return rep;
  const IntVec &R = rep.W[*rep.active_row];
  auto v = rational_solve(to_rat(e.H), to_rat(R), e.ambient());
  if (!v) return rep;
  RatVec vz(v->begin() + static_cast<long>(e.rank_N), v->end());
  const auto tl = trop_line(line);
  for (std::size_t c = 0; c < tl.rays.size(); ++c) {
    std::optional<Rat> scale;
    bool ok = true;
    for (std::size_t i = 0; i < vz.size() && ok; ++i) {
      if (tl.rays[c][i] == 0) {
        ok = vz[i] == 0;
      } else {
        Rat s = vz[i] / Rat(tl.rays[c][i]);
        if (scale && *scale != s) ok = false;
        scale = s;
      }
    }
    if (ok && scale && *scale > 0) {
      rep.active_cone = c;
      break;
    }
  }
  if (!rep.active_cone) return rep;
  rep.cone_matches = j && *j == *rep.active_cone;
  IntVec rep_v(e.rank_N, 0);
  rep_v.insert(rep_v.end(), tl.rays[*rep.active_cone].begin(), tl.rays[*rep.active_cone].end());
  const IntVec wc = phi(e, rep_v);
  std::vector<XPolynomial> G1, G2;
  for (const auto &g : J) {
    G1.push_back(initial_form(g, R));
    G2.push_back(initial_form(g, wc));
  }
  MacaulaySpace S1(G1, e.n(), degree_bound), S2(G2, e.n(), degree_bound);
  rep.initial_matches_cone = std::all_of(G1.begin(), G1.end(), [&](const auto &f) { return S2.contains(f); }) &&
                             std::all_of(G2.begin(), G2.end(), [&](const auto &f) { return S1.contains(f); });
  return rep;
}

} // namespace tvar
