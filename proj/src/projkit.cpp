#include "tvar/projkit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tvar {

auto PolarizedInput::make(PolyhedralDivisor d, std::size_t grading_index) -> PolarizedInput {
  if (grading_index >= d.rank_N) throw std::invalid_argument("grading index out of range");
  if (!d.tailcone.is_full_dimensional() || !d.tailcone.is_pointed())
    throw std::invalid_argument("polarized input needs a full-dimensional pointed tailcone");
  for (const auto &f : d.tailcone.proper_facets())
    if (f[grading_index] <= 0) throw std::invalid_argument("grading co-character is not interior to the tailcone");
  return {std::move(d), grading_index};
}

auto PolarizedInput::lift(const IntVec &u, const Int &k) const -> IntVec {
  IntVec out = u;
  out.insert(out.begin() + static_cast<long>(grading_index), k);
  return out;
}

auto PolarizedInput::lift(const RatVec &u, const Rat &k) const -> RatVec {
  RatVec out = u;
  out.insert(out.begin() + static_cast<long>(grading_index), k);
  return out;
}

namespace {

auto drop(const RatVec &v, std::size_t t) -> RatVec {
  RatVec out = v;
  out.erase(out.begin() + static_cast<long>(t));
  return out;
}

// Rows (c, a, s): c + a.u + s * lambda >= 0 from sum_i <v_i, (1, u)> over vertex choices.
auto combo_rows(const PolarizedInput &p, const std::vector<std::size_t> &indices, int lambda_sign) -> IntMat {
  const auto &d = p.divisor;
  RatMat sums{RatVec(d.rank_N, 0)};
  for (auto i : indices) {
    RatMat next;
    for (const auto &s : sums)
      for (const auto &v : d.coefficients[i].vertices) {
        RatVec t = s;
        for (std::size_t k = 0; k < d.rank_N; ++k) t[k] += v[k];
        next.push_back(std::move(t));
      }
    sums = std::move(next);
  }
  IntMat rows;
  for (const auto &s : sums) {
    RatVec row{s[p.grading_index]};
    for (const auto &x : drop(s, p.grading_index)) row.push_back(x);
    row.push_back(lambda_sign);
    rows.push_back(primitive(row));
  }
  return rows;
}

auto satisfies(const IntMat &rows, const RatVec &x, const Rat &scale = 1) -> bool {
  for (const auto &r : rows) {
    Rat s = scale * r[0];
    for (std::size_t i = 0; i < x.size(); ++i) s += r[i + 1] * x[i];
    if (s < 0) return false;
  }
  return true;
}

auto tight(const IntVec &r, const RatVec &x) -> bool {
  Rat s = r[0];
  for (std::size_t i = 0; i < x.size(); ++i) s += r[i + 1] * x[i];
  return s == 0;
}

} // namespace

auto box_inequalities(const PolarizedInput &p) -> IntMat {
  IntMat rows;
  for (const auto &r : p.divisor.tailcone.extreme_rays()) {
    IntVec row{r[p.grading_index]};
    for (std::size_t i = 0; i < r.size(); ++i)
      if (i != p.grading_index) row.push_back(r[i]);
    rows.push_back(std::move(row));
  }
  return lex_sorted_unique(std::move(rows));
}

auto graded_points(const PolarizedInput &p, int bound) -> IntMat {
  IntVec degree(p.divisor.rank_N, 0);
  degree[p.grading_index] = 1;
  return sigma_dual_points(p.divisor.tailcone, bound, degree);
}

auto vertices_from_hrep(const IntMat &rows, std::size_t dim) -> RatMat {
  IntMat normals;
  for (const auto &r : rows) normals.emplace_back(r.begin() + 1, r.end());
  if (!Cone::from_inequalities(dim, normals).rays.empty()) throw std::domain_error("polyhedron is unbounded");
  std::set<RatVec> found;
  std::vector<std::size_t> pick;
  auto rec = [&](auto &&self, std::size_t start) -> void {
    if (pick.size() == dim) {
      RatMat A;
      RatVec b;
      for (auto i : pick) {
        A.push_back(to_rat(normals[i]));
        b.push_back(-Rat(rows[i][0]));
      }
      if (rank(A, dim) != dim) return;
      auto x = rational_solve(A, b, dim);
      if (x && satisfies(rows, *x)) found.insert(*x);
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  if (dim == 0) return {RatVec{}};
  rec(rec, 0);
  return {found.begin(), found.end()};
}

auto nok_body(const PolarizedInput &p, const Line &line, std::size_t j, const IntMat &psi, const IntVec &gamma)
    -> NOBody {
  const auto &d = p.divisor;
  const std::size_t k = p.rank_M();
  if (line.forms.size() != d.coefficients.size())
    throw std::invalid_argument("line and divisor have different numbers of points");
  if (j >= line.boundary.size()) throw std::invalid_argument("point index out of range");
  if (psi.size() != gamma.size()) throw std::invalid_argument("psi must have one row per coordinate of gamma");
  NOBody body;
  body.point_index = j;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (psi[i].size() != k) throw std::invalid_argument("psi has wrong width");
    IntVec row = psi[i];
    row.push_back(gamma[i]);
    body.rho.push_back(std::move(row));
  }
  if (rank(body.rho, k + 1) != k + 1) throw std::invalid_argument("rho is not injective");

  const auto &I = line.boundary[j].indices;
  std::vector<std::size_t> in, out;
  for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
    const bool member = std::find(I.begin(), I.end(), i) != I.end();
    if (d.coefficients[i].empty) throw std::domain_error("empty coefficient: the body is unbounded");
    (member ? in : out).push_back(i);
  }
  IntMat rows;
  for (const auto &r : box_inequalities(p)) {
    IntVec row = r;
    row.push_back(0);
    rows.push_back(std::move(row));
  }
  if (vertices_from_hrep(box_inequalities(p), k).empty()) throw std::domain_error("Box_D is empty");
  for (auto &r : combo_rows(p, in, 1)) rows.push_back(std::move(r));
  for (auto &r : combo_rows(p, out, -1)) rows.push_back(std::move(r));
  rows = lex_sorted_unique(std::move(rows));

  body.preimage_vertices = vertices_from_hrep(rows, k + 1);
  if (body.preimage_vertices.empty()) throw std::domain_error("Newton-Okounkov body is empty");
  RatMat lifted;
  for (const auto &x : body.preimage_vertices) {
    RatVec y{1};
    y.insert(y.end(), x.begin(), x.end());
    lifted.push_back(std::move(y));
  }
  if (rank(lifted, k + 2) == k + 2) {
    IntMat facets;
    for (const auto &r : rows) {
      RatMat on;
      for (std::size_t v = 0; v < lifted.size(); ++v)
        if (tight(r, body.preimage_vertices[v])) on.push_back(lifted[v]);
      if (rank(on, k + 2) == k + 1) facets.push_back(r);
    }
    rows = std::move(facets);
  }
  body.preimage_inequalities = rows;

  for (const auto &x : body.preimage_vertices) {
    RatVec y(body.rho.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = dot(x, body.rho[i]);
    body.vertices.push_back(std::move(y));
  }
  const std::set<RatVec> distinct(body.vertices.begin(), body.vertices.end());
  body.vertices.assign(distinct.begin(), distinct.end());
  if (body.rho.size() == k + 1) {
    const RatMat rt = transpose(to_rat(body.rho), k + 1);
    for (const auto &r : rows) {
      RatVec a(r.begin() + 1, r.end());
      auto y = rational_solve(rt, a, k + 1);
      RatVec row{Rat(r[0])};
      row.insert(row.end(), y->begin(), y->end());
      body.inequalities.push_back(primitive(row));
    }
    body.inequalities = lex_sorted_unique(std::move(body.inequalities));
  }
  return body;
}

auto count_dilation_points(const NOBody &body, int k) -> std::size_t {
  if (body.preimage_vertices.empty()) return 0;
  const std::size_t dim = body.preimage_vertices.front().size();
  IntVec lo(dim), hi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Rat mn = body.preimage_vertices.front()[i], mx = mn;
    for (const auto &v : body.preimage_vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_rat(mn * k);
    hi[i] = floor_rat(mx * k);
  }
  std::size_t count = 0;
  RatVec x(dim);
  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == dim) {
      if (satisfies(body.preimage_inequalities, x, Rat(k))) ++count;
      return;
    }
    for (Int z = lo[i]; z <= hi[i]; ++z) {
      x[i] = z;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

auto section_count(const PolarizedInput &p, const Line &line, int k) -> std::size_t {
  const auto e = build_embedding(p.divisor);
  std::size_t total = 0;
  for (const auto &u : graded_points(p, k)) {
    if (u[p.grading_index] != k) continue;
    auto gp = graded_piece(e, line, p.divisor, u);
    total += gp.dim_AC - gp.dim_IL;
  }
  return total;
}

namespace {

auto lattice_basis(const IntMat &s, std::size_t dim) -> IntMat {
  IntMat basis;
  for (const auto &row : hermite_normal_form(s, dim).H)
    if (!is_zero(row)) basis.push_back(row);
  return basis;
}

// Coordinates of v in the basis rows of E.
auto coords(const IntMat &E, const RatVec &v) -> std::optional<RatVec> {
  if (E.empty()) return is_zero(v) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
  return rational_solve(transpose(to_rat(E), E.front().size()), v, E.size());
}

} // namespace

auto lattice_equivalent(const IntMat &s1, const IntMat &s2, std::size_t grading_index) -> bool {
  if (s1.size() != s2.size()) return false;
  if (s1.empty()) return true;
  auto degrees = [&](const IntMat &s) {
    std::vector<Int> out;
    for (const auto &x : s) out.push_back(x.at(grading_index));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (degrees(s1) != degrees(s2)) return false;
  const std::size_t d1 = s1.front().size(), d2 = s2.front().size();
  const IntMat E1 = lattice_basis(s1, d1), E2 = lattice_basis(s2, d2);
  if (E1.size() != E2.size()) return false;
  const std::size_t k = E1.size();
  if (k == 0) return true;

  std::vector<RatVec> c1;
  for (const auto &x : s1) c1.push_back(*coords(E1, to_rat(x)));
  std::vector<std::size_t> B;
  RatMat CB;
  for (std::size_t i = 0; i < s1.size() && B.size() < k; ++i) {
    RatMat trial = CB;
    trial.push_back(c1[i]);
    if (rank(trial, k) == trial.size()) {
      B.push_back(i);
      CB = std::move(trial);
    }
  }
  const std::set<IntVec> target(s2.begin(), s2.end());
  if (target.size() != s2.size() || std::set<IntVec>(s1.begin(), s1.end()).size() != s1.size()) return false;

  std::vector<std::size_t> assign(k);
  std::vector<bool> used(s2.size(), false);
  auto check = [&]() -> bool {
    // Images of the E1 basis: CB^{-1} * Img.
    RatMat img;
    for (auto a : assign) img.push_back(to_rat(s2[a]));
    RatMat T(k, RatVec(d2, 0));
    const RatMat CBt = transpose(CB, k);
    for (std::size_t col = 0; col < d2; ++col) {
      RatVec rhs(k);
      for (std::size_t r = 0; r < k; ++r) rhs[r] = img[r][col];
      // Solve CB * X[:, col] = rhs.
      auto x = rational_solve(CB, rhs, k);
      for (std::size_t r = 0; r < k; ++r) T[r][col] = (*x)[r];
    }
    (void)CBt;
    RatMat Tc;
    for (const auto &row : T) {
      for (const auto &q : row)
        if (!is_integral(q)) return false;
      auto c = coords(E2, row);
      if (!c) return false;
      for (const auto &q : *c)
        if (!is_integral(q)) return false;
      Tc.push_back(*c);
    }
    const Rat det = determinant(Tc);
    if (det != 1 && det != -1) return false;
    std::set<IntVec> hit;
    for (std::size_t i = 0; i < s1.size(); ++i) {
      IntVec y(d2);
      for (std::size_t col = 0; col < d2; ++col) {
        Rat s = 0;
        for (std::size_t r = 0; r < k; ++r) s += c1[i][r] * T[r][col];
        y[col] = s.get_num();
      }
      if (y[grading_index] != s1[i][grading_index] || !target.count(y)) return false;
      hit.insert(std::move(y));
    }
    return hit.size() == s2.size();
  };
  auto rec = [&](auto &&self, std::size_t pos) -> bool {
    if (pos == k) return check();
    for (std::size_t a = 0; a < s2.size(); ++a) {
      if (used[a] || s2[a][grading_index] != s1[B[pos]][grading_index]) continue;
      used[a] = true;
      assign[pos] = a;
      if (self(self, pos + 1)) return true;
      used[a] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

namespace {

auto fiber_range(const PolarizedInput &p, const Line &line, std::optional<std::size_t> j, const IntVec &u)
    -> LambdaRange {
  if (j) return *lambda_range(p.divisor, line, *j, u);
  LambdaRange r;
  r.lo = Int(0);
  Int hi = 0;
  for (const auto &P : p.divisor.coefficients) {
    auto s = support_value(P, u);
    if (s.inf) return r;
    hi += s.floor();
  }
  r.hi = hi;
  return r;
}

} // namespace

auto fiber_contains(const PolarizedInput &p, const Line &line, std::optional<std::size_t> j, const IntVec &uv)
    -> bool {
  const std::size_t n = p.divisor.rank_N;
  if (uv.size() != n + 1) throw std::invalid_argument("fiber element has wrong length");
  IntVec u(uv.begin(), uv.begin() + static_cast<long>(n));
  if (!dual_cone(p.divisor.tailcone).contains(u)) return false;
  return fiber_range(p, line, j, u).contains(uv[n]);
}

auto fiber_generators(const PolarizedInput &p, const Line &line, std::optional<std::size_t> j, int degree_bound)
    -> IntMat {
  const std::size_t t = p.grading_index;
  IntMat elems;
  for (const auto &u : graded_points(p, degree_bound)) {
    if (u[t] == 0) continue;
    auto r = fiber_range(p, line, j, u);
    if (!r.lo || !r.hi) throw std::domain_error("fiber has infinitely many elements in a degree");
    for (Int v = *r.lo; v <= *r.hi; ++v) {
      IntVec x = u;
      x.push_back(v);
      elems.push_back(std::move(x));
    }
  }
  std::sort(elems.begin(), elems.end(), [&](const IntVec &a, const IntVec &b) {
    if (a[t] != b[t]) return a[t] < b[t];
    return a < b;
  });
  const std::set<IntVec> all(elems.begin(), elems.end());
  IntMat gens;
  for (const auto &s : elems) {
    bool reducible = false;
    for (const auto &a : elems) {
      if (a[t] >= s[t]) break;
      IntVec diff(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) diff[i] = s[i] - a[i];
      if (all.count(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) gens.push_back(s);
  }
  return gens;
}

auto test_config_fibers(const PolarizedInput &p, const Line &line, int degree_bound)
    -> std::vector<DegenerationFiber> {
  const auto &d = p.divisor;
  const auto e = build_embedding(d);
  const std::size_t t = p.grading_index;
  std::vector<DegenerationFiber> out;
  DegenerationFiber trivial;
  trivial.label = "trivial";
  for (const auto &h : e.H)
    if (h[t] <= degree_bound) trivial.generators.push_back(h);
  out.push_back(trivial);
  const bool toric = detect_toric(line);

  std::vector<std::optional<std::size_t>> which;
  for (std::size_t j = 0; j < line.boundary.size(); ++j) which.emplace_back(j);
  which.emplace_back(std::nullopt);
  std::vector<std::size_t> everything(d.coefficients.size());
  for (std::size_t i = 0; i < everything.size(); ++i) everything[i] = i;

  for (const auto &j : which) {
    DegenerationFiber f;
    f.label = j ? "S_" + std::to_string(*j) : "interior-point";
    f.point_index = j;
    f.generators = fiber_generators(p, line, j, degree_bound);
    std::vector<std::vector<std::size_t>> groups;
    if (j) {
      const auto &I = line.boundary[*j].indices;
      std::vector<std::size_t> rest;
      for (auto i : everything)
        if (std::find(I.begin(), I.end(), i) == I.end()) rest.push_back(i);
      groups = {I, rest};
    } else {
      groups = {everything};
    }
    f.normal = check_admissible_groups(d.coefficients, d.tailcone, groups).admissible;

    if (toric && lattice_equivalent(f.generators, out.front().generators, t)) {
      out.front().merged.push_back(f.label);
      continue;
    }
    auto dup = std::find_if(out.begin() + 1, out.end(),
                            [&](const DegenerationFiber &g) { return lattice_equivalent(f.generators, g.generators, t); });
    if (dup != out.end()) {
      dup->merged.push_back(f.label);
      continue;
    }
    auto ti = toric_ideal_generators(f.generators, std::max(2, degree_bound));
    f.ideal_generators = std::move(ti.generators);
    f.ideal_complete = ti.lattice_complete;
    out.push_back(std::move(f));
  }
  return out;
}

} // namespace tvar
