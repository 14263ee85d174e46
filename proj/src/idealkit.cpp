#include "tvar/idealkit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tvar {

// ---------------------------------------------------------------- XPolynomial

namespace {

auto mono_degree(const Mono &a) -> int { return std::accumulate(a.begin(), a.end(), 0); }

// Larger in (total degree, lex) order.
auto mono_greater(const Mono &a, const Mono &b) -> bool {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  return a > b;
}

void add_term(std::map<Mono, Rat> &terms, const Mono &a, const Rat &c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

} // namespace

auto XPolynomial::constant(std::size_t n, const Rat &c) -> XPolynomial {
  XPolynomial p;
  p.nvars = n;
  add_term(p.terms, Mono(n, 0), c);
  return p;
}

auto XPolynomial::variable(std::size_t n, std::size_t k) -> XPolynomial {
  Mono a(n, 0);
  a[k] = 1;
  return monomial(a);
}

auto XPolynomial::monomial(const Mono &a, const Rat &c) -> XPolynomial {
  XPolynomial p;
  p.nvars = a.size();
  add_term(p.terms, a, c);
  return p;
}

auto XPolynomial::total_degree() const -> int {
  int d = 0;
  for (const auto &[a, c] : terms) d = std::max(d, mono_degree(a));
  return d;
}

auto XPolynomial::operator-() const -> XPolynomial { return scaled(-1); }

auto XPolynomial::scaled(const Rat &c) const -> XPolynomial {
  XPolynomial p;
  p.nvars = nvars;
  if (c == 0) return p;
  for (const auto &[a, x] : terms) p.terms.emplace(a, x * c);
  return p;
}

auto XPolynomial::times_monomial(const Mono &m) const -> XPolynomial {
  XPolynomial p;
  p.nvars = nvars;
  for (const auto &[a, x] : terms) {
    Mono b = a;
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += m[i];
    p.terms.emplace(std::move(b), x);
  }
  return p;
}

auto XPolynomial::relabeled(const std::vector<std::size_t> &map, const std::vector<Rat> &scale,
                            std::size_t new_n) const -> XPolynomial {
  XPolynomial p;
  p.nvars = new_n;
  for (const auto &[a, x] : terms) {
    Mono b(new_n, 0);
    Rat c = x;
    for (std::size_t i = 0; i < a.size(); ++i) {
      b[map[i]] += a[i];
      for (int t = 0; t < a[i]; ++t) c *= scale[i];
    }
    add_term(p.terms, b, c);
  }
  return p;
}

auto XPolynomial::monic() const -> XPolynomial {
  if (terms.empty()) return *this;
  auto lead = terms.begin();
  for (auto it = terms.begin(); it != terms.end(); ++it)
    if (mono_greater(it->first, lead->first)) lead = it;
  return scaled(1 / lead->second);
}

auto operator+(const XPolynomial &a, const XPolynomial &b) -> XPolynomial {
  XPolynomial p = a;
  p.nvars = std::max(a.nvars, b.nvars);
  for (const auto &[m, c] : b.terms) add_term(p.terms, m, c);
  return p;
}

auto operator-(const XPolynomial &a, const XPolynomial &b) -> XPolynomial { return a + (-b); }

auto operator*(const XPolynomial &a, const XPolynomial &b) -> XPolynomial {
  XPolynomial p;
  p.nvars = std::max(a.nvars, b.nvars);
  for (const auto &[ma, ca] : a.terms)
    for (const auto &[mb, cb] : b.terms) {
      Mono m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      add_term(p.terms, m, ca * cb);
    }
  return p;
}

auto poly_less(const XPolynomial &a, const XPolynomial &b) -> bool {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.terms < b.terms;
}

auto default_names(std::size_t n, int first_index) -> std::vector<std::string> {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("x" + std::to_string(static_cast<int>(k) + first_index));
  return names;
}

auto to_string(const XPolynomial &f, const std::vector<std::string> &names) -> std::string {
  if (f.terms.empty()) return "0";
  std::vector<std::pair<Mono, Rat>> ts(f.terms.begin(), f.terms.end());
  std::sort(ts.begin(), ts.end(), [](const auto &x, const auto &y) { return mono_greater(x.first, y.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto &[a, c] : ts) {
    Rat mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      factors.push_back(a[i] == 1 ? names[i] : names[i] + "^" + std::to_string(a[i]));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), to_string(Rat(mag)));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    first = false;
  }
  return os.str();
}

auto monomials_up_to(std::size_t n, int d) -> std::vector<Mono> {
  std::vector<Mono> out;
  Mono cur(n, 0);
  auto rec = [&](auto &&self, std::size_t k, int left) -> void {
    if (k + 1 == n) {
      cur[k] = left;
      out.push_back(cur);
      cur[k] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[k] = e;
      self(self, k + 1, left - e);
    }
    cur[k] = 0;
  };
  for (int deg = 0; deg <= d; ++deg) {
    if (n == 0) {
      if (deg == 0) out.push_back(cur);
      continue;
    }
    rec(rec, 0, deg);
  }
  return out;
}

// ------------------------------------------------------------ SemigroupSolver

SemigroupSolver::SemigroupSolver(IntMat H) : H_(std::move(H)) {
  if (H_.empty()) return;
  const std::size_t dim = H_.front().size();
  cone_ = Cone::from_rays(dim, H_);
  if (!cone_.is_pointed()) throw std::invalid_argument("SemigroupSolver: generators span a non-pointed cone");
  omega_ = IntVec(dim, 0);
  for (const auto &f : cone_.proper_facets())
    for (std::size_t i = 0; i < dim; ++i) omega_[i] += f[i];
  for (const auto &h : H_) {
    Int w = dot(omega_, h);
    if (w <= 0) throw std::invalid_argument("SemigroupSolver: zero generator");
    weights_.push_back(w);
  }
}

auto SemigroupSolver::reachable(std::size_t k, const IntVec &rem) const -> bool {
  if (is_zero(rem)) return true;
  if (k == H_.size()) return false;
  if (!cone_.contains(rem)) return false;
  auto key = std::make_pair(k, rem);
  if (auto it = reach_.find(key); it != reach_.end()) return it->second;
  bool ok = false;
  IntVec r = rem;
  Int budget = dot(omega_, rem);
  for (Int used = 0; used <= budget; used += weights_[k]) {
    if (reachable(k + 1, r)) {
      ok = true;
      break;
    }
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= H_[k][i];
  }
  reach_.emplace(std::move(key), ok);
  return ok;
}

auto SemigroupSolver::contains(const IntVec &target) const -> bool {
  if (H_.empty()) return is_zero(target);
  return reachable(0, target);
}

auto SemigroupSolver::solutions(const IntVec &target) const -> std::vector<Mono> {
  std::vector<Mono> out;
  if (H_.empty()) {
    if (is_zero(target)) out.emplace_back();
    return out;
  }
  Mono cur(H_.size(), 0);
  auto rec = [&](auto &&self, std::size_t k, IntVec rem) -> void {
    if (!reachable(k, rem)) return;
    if (k == H_.size()) {
      out.push_back(cur);
      return;
    }
    Int budget = dot(omega_, rem);
    int c = 0;
    for (Int used = 0; used <= budget; used += weights_[k], ++c) {
      cur[k] = c;
      self(self, k + 1, rem);
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= H_[k][i];
    }
    cur[k] = 0;
  };
  rec(rec, 0, target);
  return out;
}

auto SemigroupSolver::min_lift(const IntVec &target) const -> std::optional<Mono> {
  auto sols = solutions(target);
  if (sols.empty()) return std::nullopt;
  return *std::min_element(sols.begin(), sols.end(), [](const Mono &a, const Mono &b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
}

// ------------------------------------------------------------- toric ideal

namespace {

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  auto find(std::size_t x) -> std::size_t {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

// Preferred binomial term: lower degree first, then lex larger.
auto term_before(const Mono &a, const Mono &b) -> bool {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  return a > b;
}

auto binomial(const Mono &a, const Mono &b) -> XPolynomial {
  const Mono &p = term_before(a, b) ? a : b;
  const Mono &q = term_before(a, b) ? b : a;
  XPolynomial f = XPolynomial::monomial(p);
  f.terms.emplace(q, Rat(-1));
  return f;
}

auto image(const IntMat &H, const Mono &a) -> IntVec {
  IntVec out(H.front().size(), 0);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k])
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += a[k] * H[k][i];
  return out;
}

auto divides(const Mono &a, const Mono &c) -> bool {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > c[i]) return false;
  return true;
}

} // namespace

auto toric_ideal_generators(const IntMat &H, int degree_bound) -> ToricIdeal {
  ToricIdeal out;
  if (H.empty()) return out;
  if (degree_bound < 2) throw std::invalid_argument("toric_ideal_generators: degree bound must be at least 2");
  const std::size_t n = H.size();
  SemigroupSolver solver(H);
  std::map<IntVec, std::vector<Mono>> fibers;
  for (auto &a : monomials_up_to(n, degree_bound)) fibers[image(H, a)].push_back(std::move(a));
  std::vector<const IntVec *> order;
  for (const auto &[key, monos] : fibers)
    if (monos.size() >= 2) order.push_back(&key);
  std::sort(order.begin(), order.end(), [&](const IntVec *x, const IntVec *y) {
    Int wx = dot(solver.grading(), *x), wy = dot(solver.grading(), *y);
    if (wx != wy) return wx < wy;
    return *x < *y;
  });
  std::vector<std::pair<Mono, Mono>> kept;
  for (const IntVec *key : order) {
    auto monos = fibers[*key];
    std::sort(monos.begin(), monos.end(), term_before);
    std::map<Mono, std::size_t> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
    UnionFind uf(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
      for (const auto &[a, b] : kept) {
        for (int dir = 0; dir < 2; ++dir) {
          const Mono &from = dir ? b : a;
          const Mono &to = dir ? a : b;
          if (!divides(from, monos[i])) continue;
          Mono c = monos[i];
          for (std::size_t t = 0; t < n; ++t) c[t] += to[t] - from[t];
          if (auto it = idx.find(c); it != idx.end()) uf.unite(i, it->second);
        }
      }
    }
    std::vector<std::size_t> reps;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (seen.insert(uf.find(i)).second) reps.push_back(i);
    for (std::size_t r = 1; r < reps.size(); ++r) kept.emplace_back(monos[reps[0]], monos[reps[r]]);
  }
  IntMat diffs;
  for (const auto &[a, b] : kept) {
    out.generators.push_back(binomial(a, b));
    IntVec d(n);
    for (std::size_t t = 0; t < n; ++t) d[t] = a[t] - b[t];
    diffs.push_back(std::move(d));
  }
  std::sort(out.generators.begin(), out.generators.end(), poly_less);
  const std::size_t dim = H.front().size();
  for (const auto &k : integer_kernel(transpose(H, dim), n)) {
    if (!in_lattice(diffs, k)) {
      out.lattice_complete = false;
      out.warning = "binomials up to degree " + std::to_string(degree_bound) +
                    " do not generate the relation lattice; raise the degree bound";
      break;
    }
  }
  return out;
}

// ----------------------------------------------------- ideal of the embedding

auto polytope_P(const PolyhedralDivisor &d) -> Polyhedron {
  const std::size_t r = d.rank_N, m = d.m(), dim = r + m;
  IntMat rows;
  for (const auto &ray : d.tailcone.rays) {
    IntVec row(dim + 1, 0);
    for (std::size_t k = 0; k < r; ++k) row[1 + k] = ray[k];
    rows.push_back(std::move(row));
  }
  auto scaled_row = [&](const RatVec &w, const Rat &constant, const RatVec &vpart) {
    RatVec row;
    row.push_back(constant);
    row.insert(row.end(), w.begin(), w.end());
    row.insert(row.end(), vpart.begin(), vpart.end());
    return primitive(row);
  };
  for (std::size_t i = 1; i <= m; ++i) {
    if (d.coefficients[i].empty) continue;
    RatVec vpart(m, 0);
    vpart[i - 1] = 1;
    for (const auto &w : d.coefficients[i].vertices) rows.push_back(scaled_row(w, 0, vpart));
  }
  if (!d.coefficients[0].empty) {
    for (const auto &w : d.coefficients[0].vertices) {
      Int l = 1;
      for (const auto &x : w) l = lcm(l, Int(x.get_den()));
      IntVec row(dim + 1, 0);
      row[0] = -l;
      for (std::size_t k = 0; k < r; ++k) row[1 + k] = Rat(w[k] * l).get_num();
      for (std::size_t k = 0; k < m; ++k) row[1 + r + k] = -l;
      rows.push_back(std::move(row));
    }
  }
  return Polyhedron::from_hrep(dim, rows);
}

auto line_linear_generators(const Line &line) -> std::vector<std::map<IntVec, Rat>> {
  const std::size_t m = line.m();
  std::vector<std::map<IntVec, Rat>> out;
  for (const auto &c : line.relations()) {
    std::map<IntVec, Rat> g;
    for (std::size_t i = 0; i <= m; ++i) {
      if (c[i] == 0) continue;
      IntVec v(m, 0);
      if (i > 0) v[i - 1] = 1;
      g.emplace(std::move(v), Rat(c[i]));
    }
    out.push_back(std::move(g));
  }
  return out;
}

auto ideal_generators_IL(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d)
    -> std::vector<GradedLaurentElement> {
  auto G = line_linear_generators(line);
  if (G.empty()) return {};
  const IntMat Pgens = module_generators(polytope_P(d), e.dual_C);
  std::vector<GradedLaurentElement> out;
  for (const auto &p : Pgens) {
    for (const auto &g : G) {
      GradedLaurentElement el;
      el.u.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(e.rank_N));
      for (const auto &[v, c] : g) {
        IntVec w = v;
        for (std::size_t i = 0; i < e.m; ++i) w[i] += p[e.rank_N + i];
        el.terms.emplace(std::move(w), c);
      }
      out.push_back(std::move(el));
    }
  }
  return out;
}

auto as_character_sum(const GradedLaurentElement &g) -> std::map<IntVec, Rat> {
  std::map<IntVec, Rat> out;
  for (const auto &[v, c] : g.terms) {
    IntVec key = g.u;
    key.insert(key.end(), v.begin(), v.end());
    out.emplace(std::move(key), c);
  }
  return out;
}

auto lift_to_polynomial(const GradedLaurentElement &g, const SemiCanonicalEmbedding &e) -> XPolynomial {
  SemigroupSolver solver(e.H);
  XPolynomial f;
  f.nvars = e.n();
  for (const auto &[key, c] : as_character_sum(g)) {
    auto alpha = solver.min_lift(key);
    if (!alpha) throw std::logic_error("lift_to_polynomial: term outside the Hilbert-basis semigroup");
    f = f + XPolynomial::monomial(*alpha, c);
  }
  return f;
}

auto substitute(const XPolynomial &f, const SemiCanonicalEmbedding &e) -> std::map<IntVec, Rat> {
  std::map<IntVec, Rat> out;
  for (const auto &[a, c] : f.terms) {
    IntVec key = e.H.empty() ? IntVec(e.ambient(), 0) : image(e.H, a);
    auto [it, inserted] = out.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

auto IdealPresentation::all() const -> std::vector<XPolynomial> {
  std::vector<XPolynomial> out = toric_generators;
  out.insert(out.end(), linear_lift_generators.begin(), linear_lift_generators.end());
  return out;
}

auto ideal_presentation(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d,
                        int degree_bound) -> IdealPresentation {
  IdealPresentation ip;
  ip.degree_bound = degree_bound;
  auto toric = toric_ideal_generators(e.H, degree_bound);
  ip.toric_generators = std::move(toric.generators);
  ip.toric_complete = toric.lattice_complete;
  ip.warning = toric.warning;
  for (const auto &g : ideal_generators_IL(e, line, d)) ip.linear_lift_generators.push_back(lift_to_polynomial(g, e));
  std::sort(ip.linear_lift_generators.begin(), ip.linear_lift_generators.end(), poly_less);
  return ip;
}

// ---------------------------------------------------------- graded pieces

auto cdual_fiber(const PolyhedralDivisor &d, const IntVec &u) -> IntMat {
  const std::size_t m = d.m();
  if (!dual_cone(d.tailcone).contains(u)) return {};
  std::vector<Int> lower(m);
  for (std::size_t i = 1; i <= m; ++i) {
    auto s = support_value(d.coefficients[i], u);
    if (s.inf) throw std::domain_error("graded piece is infinite-dimensional (empty coefficient)");
    lower[i - 1] = ceil_rat(-s.value);
  }
  auto s0 = support_value(d.coefficients[0], u);
  if (s0.inf) throw std::domain_error("graded piece is infinite-dimensional (empty coefficient)");
  const Int cap = floor_rat(s0.value);
  IntMat out;
  IntVec v(m);
  auto rec = [&](auto &&self, std::size_t i, Int used) -> void {
    if (i == m) {
      out.push_back(v);
      return;
    }
    Int rest = 0;
    for (std::size_t j = i + 1; j < m; ++j) rest += lower[j];
    for (Int x = lower[i]; used + x + rest <= cap; ++x) {
      v[i] = x;
      self(self, i + 1, used + x);
    }
  };
  Int total_lower = 0;
  for (const auto &l : lower) total_lower += l;
  if (total_lower <= cap) rec(rec, 0, Int(0));
  return out;
}

auto graded_piece(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d, const IntVec &u)
    -> GradedPiece {
  GradedPiece gp;
  gp.u = u;
  const std::size_t m = d.m();
  gp.in_sigma_dual = dual_cone(d.tailcone).contains(u);
  if (!gp.in_sigma_dual) return gp;
  for (std::size_t i = 0; i <= m; ++i) {
    gp.support.push_back(support_value(d.coefficients[i], u));
    gp.floors.push_back(gp.support.back().floor());
  }
  gp.g_u = IntVec(m);
  for (std::size_t i = 1; i <= m; ++i) gp.g_u[i - 1] = -gp.floors[i];
  gp.d_u = 0;
  for (const auto &f : gp.floors) gp.d_u += f;

  for (const auto &v : cdual_fiber(d, u)) {
    IntVec uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    if (e.dual_C.contains(uv)) ++gp.dim_AC;
  }

  std::map<IntVec, std::size_t> col;
  std::vector<std::map<std::size_t, Rat>> rows;
  for (const auto &G : ideal_generators_IL(e, line, d)) {
    IntVec cu(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) cu[k] = u[k] - G.u[k];
    for (const auto &cv : cdual_fiber(d, cu)) {
      std::map<std::size_t, Rat> row;
      for (const auto &[v, c] : G.terms) {
        IntVec w = v;
        for (std::size_t i = 0; i < m; ++i) w[i] += cv[i];
        auto it = col.emplace(w, col.size()).first;
        row[it->second] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  RatMat M;
  for (const auto &row : rows) {
    RatVec dense(col.size(), 0);
    for (const auto &[j, c] : row) dense[j] = c;
    M.push_back(std::move(dense));
  }
  gp.dim_IL = rank(M, col.size());
  gp.dim_AL = gp.d_u >= 0 ? static_cast<std::size_t>(gp.d_u.get_ui()) + 1 : 0;
  return gp;
}

// ------------------------------------------------------ Macaulay membership

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rat>>;

auto axpy(const SparseRow &a, const Rat &f, const SparseRow &b) -> SparseRow {
  // a - f * b
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rat c = a[i].second - f * b[j].second;
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

struct Echelon {
  std::map<std::size_t, SparseRow> pivots;

  auto reduce(SparseRow r) const -> SparseRow {
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) break;
      r = axpy(r, r.front().second, it->second);
    }
    return r;
  }

  void insert(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return;
    Rat inv = 1 / r.front().second;
    for (auto &[j, c] : r) c *= inv;
    pivots.emplace(r.front().first, std::move(r));
  }
};

} // namespace

struct MacaulaySpace::Impl {
  std::map<Mono, std::size_t> col;
  std::vector<SparseRow> rows;
  std::vector<std::size_t> parent;
  std::map<std::size_t, std::vector<std::size_t>> block_rows;
  mutable std::map<std::size_t, Echelon> echelons;

  auto find(std::size_t x) const -> std::size_t {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  auto column(const Mono &a) -> std::size_t {
    auto [it, inserted] = col.emplace(a, col.size());
    if (inserted) parent.push_back(it->second);
    return it->second;
  }
};

MacaulaySpace::MacaulaySpace(const std::vector<XPolynomial> &gens, std::size_t nvars, int degree_bound)
    : impl_(std::make_unique<Impl>()) {
  auto &I = *impl_;
  std::map<int, std::vector<Mono>> multipliers;
  for (const auto &g : gens) {
    if (g.is_zero()) continue;
    const int dg = g.total_degree();
    if (dg > degree_bound) continue;
    auto &mults = multipliers[degree_bound - dg];
    if (mults.empty()) mults = monomials_up_to(nvars, degree_bound - dg);
    for (const auto &m : mults) {
      SparseRow row;
      for (const auto &[a, c] : g.terms) {
        Mono b = a;
        for (std::size_t i = 0; i < nvars; ++i) b[i] += m[i];
        row.emplace_back(I.column(b), c);
      }
      std::sort(row.begin(), row.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
      for (std::size_t t = 1; t < row.size(); ++t) {
        std::size_t a = I.find(row[0].first), b = I.find(row[t].first);
        if (a != b) I.parent[a] = b;
      }
      I.rows.push_back(std::move(row));
    }
  }
  for (std::size_t r = 0; r < I.rows.size(); ++r) I.block_rows[I.find(I.rows[r].front().first)].push_back(r);
}

MacaulaySpace::~MacaulaySpace() = default;

auto MacaulaySpace::contains(const XPolynomial &f) const -> bool {
  const auto &I = *impl_;
  std::map<std::size_t, SparseRow> parts;
  for (const auto &[a, c] : f.terms) {
    auto it = I.col.find(a);
    if (it == I.col.end()) return false;
    parts[I.find(it->second)].emplace_back(it->second, c);
  }
  for (auto &[root, part] : parts) {
    auto eit = I.echelons.find(root);
    if (eit == I.echelons.end()) {
      Echelon ech;
      if (auto br = I.block_rows.find(root); br != I.block_rows.end())
        for (auto r : br->second) ech.insert(I.rows[r]);
      eit = I.echelons.emplace(root, std::move(ech)).first;
    }
    std::sort(part.begin(), part.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    if (!eit->second.reduce(part).empty()) return false;
  }
  return true;
}

auto ideal_membership(const XPolynomial &f, const std::vector<XPolynomial> &gens, int degree_bound) -> bool {
  std::size_t n = f.nvars;
  for (const auto &g : gens) n = std::max(n, g.nvars);
  return MacaulaySpace(gens, n, degree_bound).contains(f);
}

} // namespace tvar
