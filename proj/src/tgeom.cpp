#include "tvar/tgeom.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvar {

auto ProjPoint::normalized() const -> ProjPoint {
  if (b != 0) return {a / b, Rat(1)};
  return {Rat(1), Rat(0)};
}

auto same_point(const ProjPoint &p, const ProjPoint &q) -> bool { return p.a * q.b - q.a * p.b == 0; }

auto PolyhedralDivisor::make(std::size_t rank_N, const IntMat &tailcone_rays, const std::vector<ProjPoint> &points,
                             const std::vector<std::optional<RatMat>> &coefficient_vertices) -> PolyhedralDivisor {
  if (points.size() < 2) throw std::invalid_argument("a divisor needs at least two points");
  if (points.size() != coefficient_vertices.size())
    throw std::invalid_argument("number of points and coefficients differ");
  for (const auto &p : points)
    if (p.a == 0 && p.b == 0) throw std::invalid_argument("(0:0) is not a point of P^1");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (same_point(points[i], points[j])) throw std::invalid_argument("points must be distinct");
  for (const auto &r : tailcone_rays)
    if (r.size() != rank_N) throw std::invalid_argument("tailcone ray has wrong length");
  PolyhedralDivisor d;
  d.rank_N = rank_N;
  d.tailcone = Cone::from_rays(rank_N, tailcone_rays);
  for (const auto &p : points) d.points.push_back(p.normalized());
  for (const auto &cv : coefficient_vertices) {
    if (!cv) {
      d.coefficients.push_back(Polyhedron::empty_set(d.tailcone));
      continue;
    }
    if (cv->empty()) throw std::invalid_argument("nonempty coefficient needs at least one vertex");
    for (const auto &v : *cv)
      if (v.size() != rank_N) throw std::invalid_argument("coefficient vertex has wrong length");
    d.coefficients.push_back(Polyhedron::from_vertices(*cv, d.tailcone));
  }
  return d;
}

auto Line::from_forms(const std::vector<std::pair<Rat, Rat>> &forms) -> Line {
  if (forms.size() < 2) throw std::invalid_argument("a line needs at least two forms");
  RatMat F;
  for (const auto &[c0, c1] : forms) {
    if (c0 == 0 && c1 == 0) throw std::invalid_argument("a form vanishes identically: the line misses the torus");
    F.push_back({c0, c1});
  }
  if (rank(F, 2) != 2) throw std::invalid_argument("forms are proportional: the image is a point");
  Line L;
  L.forms = forms;
  const std::size_t m = forms.size() - 1;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    ProjPoint zero = ProjPoint{-forms[i].second, forms[i].first}.normalized();
    auto it = std::find_if(L.boundary.begin(), L.boundary.end(),
                           [&](const BoundaryPoint &bp) { return same_point(bp.param, zero); });
    if (it == L.boundary.end()) {
      L.boundary.push_back({zero, IntVec(m, 0), {i}});
    } else {
      it->indices.push_back(i);
    }
  }
  for (auto &bp : L.boundary) {
    const bool at0 = std::find(bp.indices.begin(), bp.indices.end(), 0) != bp.indices.end();
    for (std::size_t i = 1; i <= m; ++i) {
      const bool ati = std::find(bp.indices.begin(), bp.indices.end(), i) != bp.indices.end();
      bp.ord[i - 1] = Int(ati ? 1 : 0) - Int(at0 ? 1 : 0);
    }
  }
  return L;
}

auto Line::relations() const -> IntMat {
  const std::size_t k = forms.size();
  RatMat Ft(2, RatVec(k));
  for (std::size_t i = 0; i < k; ++i) {
    Ft[0][i] = forms[i].first;
    Ft[1][i] = forms[i].second;
  }
  RatMat K = rational_kernel(Ft, k);
  rref(K, k);
  IntMat out;
  for (const auto &row : K)
    if (!is_zero(row)) out.push_back(primitive(row));
  return out;
}

auto Line::boundary_index(const ProjPoint &q) const -> std::optional<std::size_t> {
  for (std::size_t i = 0; i < boundary.size(); ++i)
    if (same_point(boundary[i].param, q)) return i;
  return std::nullopt;
}

auto line_from_divisor(const PolyhedralDivisor &d) -> Line {
  std::vector<std::pair<Rat, Rat>> forms;
  for (const auto &p : d.points) forms.emplace_back(p.b, -p.a);
  return Line::from_forms(forms);
}

auto build_cone_C(const PolyhedralDivisor &d) -> Cone {
  const std::size_t m = d.m();
  const std::size_t dim = d.rank_N + m;
  IntMat gens;
  for (std::size_t i = 0; i <= m; ++i) {
    const auto &P = d.coefficients[i];
    if (P.empty) continue;
    for (const auto &w : P.vertices) {
      RatVec g(dim, 0);
      for (std::size_t k = 0; k < d.rank_N; ++k) g[k] = w[k];
      for (std::size_t k = 0; k < m; ++k) g[d.rank_N + k] = (i == 0) ? Rat(-1) : Rat(i == k + 1 ? 1 : 0);
      gens.push_back(primitive(g));
    }
  }
  for (const auto &r : d.tailcone.rays) {
    IntVec g(dim, 0);
    for (std::size_t k = 0; k < d.rank_N; ++k) g[k] = r[k];
    gens.push_back(std::move(g));
  }
  Cone C = Cone::from_rays(dim, gens);
  if (!C.is_pointed()) throw std::invalid_argument("cone C is not pointed: invalid divisor data");
  return C;
}

auto build_embedding(const PolyhedralDivisor &d) -> SemiCanonicalEmbedding {
  SemiCanonicalEmbedding e;
  e.rank_N = d.rank_N;
  e.m = d.m();
  e.cone_C = build_cone_C(d);
  e.dual_C = dual_cone(e.cone_C);
  e.H = hilbert_basis(e.dual_C);
  return e;
}

auto check_admissible_groups(const std::vector<Polyhedron> &coefficients, const Cone &sigma,
                             const std::vector<std::vector<std::size_t>> &groups) -> Admissibility {
  Cone sd = dual_cone(sigma);
  if (!sd.is_pointed()) throw std::invalid_argument("check_admissible: tailcone must be full-dimensional");
  const IntMat gens = hilbert_basis(sd);
  for (std::size_t q = 0; q < groups.size(); ++q) {
    const auto &I = groups[q];
    if (I.size() < 2) continue;
    if (std::any_of(I.begin(), I.end(), [&](std::size_t i) { return coefficients[i].empty; })) continue;
    for (const auto &u : gens) {
      int nonint = 0;
      for (auto i : I)
        if (!is_integral(support_value(coefficients[i], u).value)) ++nonint;
      if (nonint > 1) return {false, q, u};
    }
  }
  return {};
}

auto check_admissible(const std::vector<Polyhedron> &coefficients, const Cone &sigma, const Line &line)
    -> Admissibility {
  if (coefficients.size() != line.forms.size())
    throw std::invalid_argument("check_admissible: coefficient count differs from the number of forms");
  std::vector<std::vector<std::size_t>> groups;
  for (const auto &bp : line.boundary) groups.push_back(bp.indices);
  return check_admissible_groups(coefficients, sigma, groups);
}

auto check_admissible(const PolyhedralDivisor &d) -> Admissibility {
  return check_admissible(d.coefficients, d.tailcone, line_from_divisor(d));
}

auto detect_toric(const Line &line) -> bool { return line.boundary.size() == 2; }

auto properness_warning(const PolyhedralDivisor &d) -> std::optional<std::string> {
  RatMat sums{RatVec(d.rank_N, 0)};
  for (const auto &P : d.coefficients) {
    if (P.empty) return std::nullopt;
    RatMat next;
    for (const auto &s : sums)
      for (const auto &v : P.vertices) {
        RatVec t = s;
        for (std::size_t k = 0; k < d.rank_N; ++k) t[k] += v[k];
        next.push_back(std::move(t));
      }
    sums = std::move(next);
  }
  Polyhedron deg = Polyhedron::from_vertices(sums, d.tailcone);
  for (const auto &v : deg.vertices)
    if (!d.tailcone.contains(v)) return "degree of the divisor is not contained in the tailcone";
  if (deg.vertices.size() == 1 && is_zero(deg.vertices.front())) return "degree of the divisor equals the tailcone";
  return std::nullopt;
}

auto satisfies_cdual_inequalities(const PolyhedralDivisor &d, const IntVec &u, const IntVec &v) -> bool {
  if (!dual_cone(d.tailcone).contains(u)) return false;
  Int sum = 0;
  for (std::size_t i = 1; i <= d.m(); ++i) {
    auto s = support_value(d.coefficients[i], u);
    if (!s.inf && Rat(v[i - 1]) < -s.value) return false;
    sum += v[i - 1];
  }
  auto s0 = support_value(d.coefficients[0], u);
  return s0.inf || Rat(sum) <= s0.value;
}

} // namespace tvar
