#include "tvar/polycore.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tvar {

auto lex_sorted_unique(IntMat m) -> IntMat {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

namespace {

struct DDRay {
  RatVec x;
  std::vector<char> tight;
};

auto normalized(const RatVec &x) -> RatVec { return to_rat(primitive(x)); }

auto rank_of_rows(const RatMat &rows, const std::vector<char> &mask, std::size_t dim) -> std::size_t {
  RatMat sel;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (mask[i]) sel.push_back(rows[i]);
  return rank(sel, dim);
}

auto project_off(const RatVec &x, const RatMat &K, std::size_t dim) -> RatVec {
  if (K.empty()) return x;
  const std::size_t k = K.size();
  RatMat gram(k, RatVec(k));
  RatVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(K[i], x);
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(K[i], K[j]);
  }
  auto c = rational_solve(gram, rhs, k);
  RatVec out = x;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[j] -= (*c)[i] * K[i][j];
  return out;
}

auto with_pm(const IntMat &rays, const IntMat &lin) -> IntMat {
  IntMat out = rays;
  for (const auto &l : lin) {
    out.push_back(l);
    IntVec neg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    out.push_back(std::move(neg));
  }
  return lex_sorted_unique(std::move(out));
}

auto negated(const IntVec &v) -> IntVec {
  IntVec n(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
  return n;
}

auto unpaired(const IntMat &list) -> IntMat {
  std::set<IntVec> all(list.begin(), list.end());
  IntMat out;
  for (const auto &v : list)
    if (!all.count(negated(v))) out.push_back(v);
  return out;
}

} // namespace

auto cone_generators(std::size_t dim, const IntMat &ineqs) -> ConeGenerators {
  RatMat L;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec e(dim, 0);
    e[i] = 1;
    L.push_back(std::move(e));
  }
  std::vector<DDRay> R;
  RatMat processed;
  for (const auto &arow : ineqs) {
    if (arow.size() != dim) throw std::invalid_argument("cone_generators: inequality of wrong length");
    RatVec a = to_rat(arow);
    std::size_t li = L.size();
    for (std::size_t i = 0; i < L.size(); ++i)
      if (dot(a, L[i]) != 0) {
        li = i;
        break;
      }
    if (li < L.size()) {
      RatVec l = L[li];
      Rat al = dot(a, l);
      if (al < 0) {
        for (auto &x : l) x = -x;
        al = -al;
      }
      L.erase(L.begin() + static_cast<std::ptrdiff_t>(li));
      for (auto &lp : L) {
        Rat f = dot(a, lp) / al;
        if (f != 0)
          for (std::size_t j = 0; j < dim; ++j) lp[j] -= f * l[j];
      }
      for (auto &r : R) {
        Rat f = dot(a, r.x) / al;
        if (f != 0) {
          for (std::size_t j = 0; j < dim; ++j) r.x[j] -= f * l[j];
          r.x = normalized(r.x);
        }
        r.tight.push_back(1);
      }
      DDRay nr{normalized(l), std::vector<char>(processed.size(), 1)};
      nr.tight.push_back(0);
      R.push_back(std::move(nr));
    } else {
      const std::size_t rk = rank(processed, dim);
      std::vector<DDRay> pos, neg, next;
      std::vector<Rat> posv, negv;
      for (auto &r : R) {
        Rat s = dot(a, r.x);
        if (s > 0) {
          posv.push_back(s);
          pos.push_back(r);
        } else if (s < 0) {
          negv.push_back(s);
          neg.push_back(r);
        }
        if (s >= 0) {
          DDRay keep = r;
          keep.tight.push_back(s == 0 ? 1 : 0);
          next.push_back(std::move(keep));
        }
      }
      for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = 0; j < neg.size(); ++j) {
          std::vector<char> common(processed.size());
          for (std::size_t t = 0; t < processed.size(); ++t) common[t] = pos[i].tight[t] && neg[j].tight[t];
          if (rk < 2 || rank_of_rows(processed, common, dim) != rk - 2) continue;
          RatVec x(dim);
          for (std::size_t t = 0; t < dim; ++t) x[t] = posv[i] * neg[j].x[t] - negv[j] * pos[i].x[t];
          common.push_back(1);
          next.push_back({normalized(x), std::move(common)});
        }
      R = std::move(next);
    }
    processed.push_back(std::move(a));
  }

  ConeGenerators out;
  if (ineqs.empty()) {
    out.lineality = identity_int(dim);
  } else {
    out.lineality = integer_kernel(ineqs, dim);
  }
  RatMat K = to_rat(out.lineality);
  for (const auto &r : R) {
    RatVec p = project_off(r.x, K, dim);
    if (is_zero(p)) continue;
    out.rays.push_back(primitive(p));
  }
  out.rays = lex_sorted_unique(std::move(out.rays));
  return out;
}

auto Cone::from_rays(std::size_t dim, const IntMat &gens) -> Cone {
  Cone c;
  c.dim = dim;
  IntMat g;
  for (const auto &v : gens) {
    if (v.size() != dim) throw std::invalid_argument("Cone::from_rays: generator of wrong length");
    if (!is_zero(v)) g.push_back(v);
  }
  auto F = cone_generators(dim, g);
  c.facets = with_pm(F.rays, F.lineality);
  auto G = cone_generators(dim, c.facets);
  c.rays = with_pm(G.rays, G.lineality);
  return c;
}

auto Cone::from_inequalities(std::size_t dim, const IntMat &ineqs) -> Cone {
  Cone c;
  c.dim = dim;
  auto G = cone_generators(dim, ineqs);
  c.rays = with_pm(G.rays, G.lineality);
  auto F = cone_generators(dim, c.rays);
  c.facets = with_pm(F.rays, F.lineality);
  return c;
}

auto Cone::contains(const IntVec &x) const -> bool {
  return std::all_of(facets.begin(), facets.end(), [&](const IntVec &f) { return dot(f, x) >= 0; });
}

auto Cone::contains(const RatVec &x) const -> bool {
  return std::all_of(facets.begin(), facets.end(), [&](const IntVec &f) { return dot(x, f) >= 0; });
}

auto Cone::is_pointed() const -> bool { return dim == 0 || rank(facets, dim) == dim; }

auto Cone::is_full_dimensional() const -> bool { return dim == 0 || rank(rays, dim) == dim; }

auto Cone::extreme_rays() const -> IntMat { return unpaired(rays); }

auto Cone::proper_facets() const -> IntMat { return unpaired(facets); }

auto dual_cone(const Cone &c) -> Cone { return Cone::from_inequalities(c.dim, c.rays); }

auto triangulate(const IntMat &rays, std::size_t dim) -> std::vector<std::vector<std::size_t>> {
  std::vector<std::vector<std::size_t>> out;
  auto rec = [&](auto &&self, const std::vector<std::size_t> &S) -> void {
    IntMat gens;
    for (auto s : S) gens.push_back(rays[s]);
    const std::size_t k = rank(gens, dim);
    if (S.size() == k) {
      out.push_back(S);
      return;
    }
    const std::size_t apex = S.front();
    Cone sub = Cone::from_rays(dim, gens);
    for (const auto &f : sub.proper_facets()) {
      if (dot(f, rays[apex]) <= 0) continue;
      std::vector<std::size_t> face;
      for (auto s : S)
        if (dot(f, rays[s]) == 0) face.push_back(s);
      const std::size_t before = out.size();
      self(self, face);
      for (std::size_t t = before; t < out.size(); ++t) out[t].insert(out[t].begin(), apex);
    }
  };
  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) all[i] = i;
  if (!all.empty()) rec(rec, all);
  return out;
}

auto parallelepiped_points(const IntMat &R, std::size_t dim) -> IntMat {
  const std::size_t k = R.size();
  IntMat K = integer_kernel(R, dim);
  IntMat B = K.empty() ? identity_int(dim) : integer_kernel(K, dim);
  RatMat Bt = transpose(to_rat(B), dim);
  IntMat T;
  for (const auto &r : R) {
    auto t = rational_solve(Bt, to_rat(r), k);
    if (!t) throw std::logic_error("parallelepiped_points: generator outside its lattice span");
    IntVec ti;
    for (const auto &x : *t) {
      if (!is_integral(x)) throw std::logic_error("parallelepiped_points: non-integral coordinates");
      ti.push_back(x.get_num());
    }
    T.push_back(std::move(ti));
  }
  auto hr = hermite_normal_form(T, k);
  std::vector<Int> diag(k);
  for (std::size_t i = 0; i < k; ++i) diag[i] = hr.H[i][i];
  RatMat Rt = transpose(to_rat(R), dim);
  IntMat out;
  IntVec c(k, 0);
  while (true) {
    IntVec y(dim, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] != 0)
        for (std::size_t j = 0; j < dim; ++j) y[j] += c[i] * B[i][j];
    auto lam = rational_solve(Rt, to_rat(y), k);
    RatVec x(dim, 0);
    for (std::size_t i = 0; i < k; ++i) {
      Rat fr = (*lam)[i] - Rat(floor_rat((*lam)[i]));
      if (fr != 0)
        for (std::size_t j = 0; j < dim; ++j) x[j] += fr * R[i][j];
    }
    IntVec xi(dim);
    for (std::size_t j = 0; j < dim; ++j) xi[j] = x[j].get_num();
    out.push_back(std::move(xi));
    std::size_t pos = 0;
    while (pos < k) {
      c[pos] += 1;
      if (c[pos] < diag[pos]) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

auto hilbert_basis(const Cone &c) -> IntMat {
  if (!c.is_pointed()) throw std::invalid_argument("hilbert_basis: cone is not pointed");
  IntMat R = c.extreme_rays();
  if (R.empty()) return {};
  std::set<IntVec> cand(R.begin(), R.end());
  for (const auto &simplex : triangulate(R, c.dim)) {
    IntMat gens;
    for (auto i : simplex) gens.push_back(R[i]);
    for (auto &p : parallelepiped_points(gens, c.dim))
      if (!is_zero(p)) cand.insert(std::move(p));
  }
  IntMat all(cand.begin(), cand.end());
  IntMat basis;
  for (const auto &x : all) {
    bool reducible = false;
    for (const auto &y : all) {
      if (&x == &y) continue;
      IntVec d(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
      if (c.contains(d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

auto ExtRat::floor() const -> Int {
  if (inf) throw std::domain_error("floor of +infinity");
  return floor_rat(value);
}

namespace {

auto homogenization(const RatMat &vertices, const Cone &tail) -> Cone {
  const std::size_t d = tail.dim;
  IntMat gens;
  for (const auto &v : vertices) {
    RatVec h = v;
    h.push_back(1);
    gens.push_back(primitive(h));
  }
  for (const auto &r : tail.rays) {
    IntVec h = r;
    h.push_back(0);
    gens.push_back(std::move(h));
  }
  return Cone::from_rays(d + 1, gens);
}

auto dehomogenize(const Cone &K, std::size_t d, RatMat &vertices, IntMat &hrep) -> void {
  vertices.clear();
  for (const auto &r : K.extreme_rays()) {
    if (r[d] <= 0) continue;
    RatVec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = Rat(r[i], r[d]);
    for (auto &x : v) x.canonicalize();
    vertices.push_back(std::move(v));
  }
  std::sort(vertices.begin(), vertices.end());
  hrep.clear();
  for (const auto &f : K.facets) {
    IntVec a(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(d));
    if (is_zero(a)) continue;
    IntVec row;
    row.push_back(f[d]);
    row.insert(row.end(), a.begin(), a.end());
    hrep.push_back(std::move(row));
  }
  hrep = lex_sorted_unique(std::move(hrep));
}

} // namespace

auto Polyhedron::from_vertices(const RatMat &vertices, const Cone &tailcone) -> Polyhedron {
  if (vertices.empty()) throw std::invalid_argument("Polyhedron::from_vertices: need at least one vertex");
  for (const auto &v : vertices)
    if (v.size() != tailcone.dim) throw std::invalid_argument("Polyhedron::from_vertices: vertex of wrong length");
  Polyhedron p;
  p.dim = tailcone.dim;
  p.tailcone = tailcone;
  Cone K = homogenization(vertices, tailcone);
  dehomogenize(K, p.dim, p.vertices, p.hrep);
  return p;
}

auto Polyhedron::from_hrep(std::size_t dim, const IntMat &rows) -> Polyhedron {
  IntMat hom;
  IntMat rec;
  for (const auto &row : rows) {
    if (row.size() != dim + 1) throw std::invalid_argument("Polyhedron::from_hrep: row of wrong length");
    IntVec h(row.begin() + 1, row.end());
    rec.push_back(h);
    h.push_back(row[0]);
    hom.push_back(std::move(h));
  }
  IntVec t(dim + 1, 0);
  t[dim] = 1;
  hom.push_back(t);
  Polyhedron p;
  p.dim = dim;
  p.tailcone = Cone::from_inequalities(dim, rec);
  Cone K = Cone::from_inequalities(dim + 1, hom);
  IntMat ignored;
  dehomogenize(K, dim, p.vertices, ignored);
  p.empty = p.vertices.empty();
  p.hrep = lex_sorted_unique(rows);
  return p;
}

auto Polyhedron::empty_set(const Cone &tailcone) -> Polyhedron {
  Polyhedron p;
  p.dim = tailcone.dim;
  p.tailcone = tailcone;
  p.empty = true;
  IntVec row(p.dim + 1, 0);
  row[0] = -1;
  p.hrep = {row};
  return p;
}

auto Polyhedron::contains(const RatVec &x) const -> bool {
  if (empty) return false;
  for (const auto &row : hrep) {
    Rat s = row[0];
    for (std::size_t i = 0; i < dim; ++i) s += row[i + 1] * x[i];
    if (s < 0) return false;
  }
  return true;
}

auto support_value(const Polyhedron &p, const RatVec &u) -> ExtRat {
  if (u.size() != p.dim) throw std::invalid_argument("support_value: dimension mismatch");
  if (p.empty) return {Rat(0), true};
  for (const auto &r : p.tailcone.rays)
    if (dot(u, r) < 0) throw std::domain_error("support_value: unbounded below (u pairs negatively with the tailcone)");
  Rat best = dot(p.vertices.front(), u);
  for (const auto &v : p.vertices) best = std::min(best, dot(v, u));
  return {best, false};
}

auto support_value(const Polyhedron &p, const IntVec &u) -> ExtRat { return support_value(p, to_rat(u)); }

auto module_generators(const Polyhedron &P, const Cone &c_dual) -> IntMat {
  if (P.empty) return {};
  if (P.tailcone.rays != c_dual.rays)
    throw std::invalid_argument("module_generators: tailcone of P differs from the given cone");
  Cone K = homogenization(P.vertices, P.tailcone);
  IntMat out;
  for (const auto &h : hilbert_basis(K)) {
    if (h.back() != 1) continue;
    out.emplace_back(h.begin(), h.end() - 1);
  }
  return lex_sorted_unique(std::move(out));
}

} // namespace tvar
