#include "fixtures.hpp"

#include <doctest.h>

#include <set>

using namespace tvar;

namespace {

auto names4() { return default_names(4); }

} // namespace

TEST_CASE("polynomial arithmetic and printing") {
  const auto x = [](std::size_t k) { return XPolynomial::variable(3, k); };
  const auto f = x(0) * x(0) - x(1) * x(2);
  CHECK(f.total_degree() == 2);
  CHECK(to_string(f, default_names(3)) == "x1^2 - x2*x3");
  CHECK((f - f).is_zero());
  CHECK((f * XPolynomial::constant(3, 0)).is_zero());
  CHECK(XPolynomial::monomial({1, 0, 2}, Rat(-1, 2)).is_monomial());
}

TEST_CASE("toric ideal of the D6 Hilbert basis") {
  const auto e = build_embedding(fx::d6());
  const auto t = toric_ideal_generators(e.H, 6);
  CHECK(t.lattice_complete);
  REQUIRE(t.generators.size() == 1);
  CHECK(to_string(t.generators[0], names4()) == "-x1*x2*x3 + x4^2");
}

TEST_CASE("toric ideal of a free semigroup is zero") {
  const auto t = toric_ideal_generators(identity_int(3), 6);
  CHECK(t.generators.empty());
  CHECK(t.lattice_complete);
}

TEST_CASE("toric ideal of the P(Omega) Hilbert basis: nine quadric binomials") {
  const auto e = build_embedding(fx::pomega());
  const auto t = toric_ideal_generators(e.H, 6);
  CHECK(t.lattice_complete);
  REQUIRE(t.generators.size() == 9);
  for (const auto &g : t.generators) {
    REQUIRE(g.terms.size() == 2);
    IntVec diff(e.ambient(), 0);
    int sign = 1;
    for (const auto &[a, c] : g.terms) {
      CHECK(abs(c) == 1);
      int deg = 0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        deg += a[k];
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] += sign * a[k] * e.H[k][i];
      }
      CHECK(deg == 2);
      sign = -sign;
    }
    CHECK(is_zero(diff));
  }
}

TEST_CASE("polytope P and its module generators for D6") {
  const auto d = fx::d6();
  const auto e = build_embedding(d);
  const Polyhedron P = polytope_P(d);
  const IntMat gens = module_generators(P, e.dual_C);
  CHECK(gens == IntMat{{2, 1, 1}});
  // Every lattice point of P with u <= 8 is (2,1,1) plus a lattice point of C dual.
  int found = 0;
  for (int u = 0; u <= 8; ++u)
    for (int v1 = -10; v1 <= 10; ++v1)
      for (int v2 = -10; v2 <= 10; ++v2) {
        const RatVec q{u, v1, v2};
        const bool in = 2 * v1 >= u && 2 * v2 >= u && 2 * (v1 + v2) <= 3 * u - 2;
        CHECK(P.contains(q) == in);
        if (!in) continue;
        ++found;
        CHECK(e.dual_C.contains(IntVec{u - 2, v1 - 1, v2 - 1}));
      }
  CHECK(found > 0);
}

TEST_CASE("polytope P is empty for contradictory bounds") {
  const auto d = PolyhedralDivisor::make(1, {{1}}, {{0, 1}, {1, 0}}, {RatMat{{0}}, RatMat{{0}}});
  const Polyhedron P = polytope_P(d);
  CHECK((P.empty || P.vertices.empty()));
  CHECK_FALSE(P.contains(RatVec{0, 0}));
}

TEST_CASE("the D6 line ideal generator and its lift") {
  const auto d = fx::d6();
  const auto e = build_embedding(d);
  const Line L = line_from_divisor(d);
  const auto gens = ideal_generators_IL(e, L, d);
  REQUIRE(gens.size() == 1);
  std::set<IntVec> keys;
  for (const auto &[k, c] : as_character_sum(gens[0])) {
    keys.insert(k);
    CHECK(abs(c) == 1);
  }
  CHECK(keys == std::set<IntVec>{{2, 1, 1}, {2, 1, 2}, {2, 2, 1}});
  CHECK(to_string(lift_to_polynomial(gens[0], e), names4()) == "x1 + x2 - x3");
}

TEST_CASE("lifting characters to monomials") {
  const auto e = build_embedding(fx::d6());
  for (std::size_t k = 0; k < e.n(); ++k) {
    GradedLaurentElement g{IntVec{e.H[k][0]}, {{IntVec{e.H[k][1], e.H[k][2]}, 1}}};
    CHECK(lift_to_polynomial(g, e) == XPolynomial::variable(4, k));
  }
  GradedLaurentElement one{IntVec{0}, {{IntVec{0, 0}, 1}}};
  CHECK(lift_to_polynomial(one, e) == XPolynomial::constant(4, 1));
}

TEST_CASE("a trivial line has no linear generators") {
  const auto d = PolyhedralDivisor::make(1, {{1}}, {{0, 1}, {1, 0}}, {RatMat{{Rat(1, 2)}}, RatMat{{0}}});
  const auto e = build_embedding(d);
  CHECK(ideal_generators_IL(e, line_from_divisor(d), d).empty());
}

TEST_CASE("graded pieces of the D6 coordinate ring") {
  const auto d = fx::d6();
  const auto e = build_embedding(d);
  const Line L = line_from_divisor(d);
  auto g2 = graded_piece(e, L, d, IntVec{2});
  CHECK(g2.dim_AC == 3);
  CHECK(g2.dim_IL == 1);
  CHECK(g2.dim_AL == 2);
  auto g0 = graded_piece(e, L, d, IntVec{0});
  CHECK(g0.dim_AC == 1);
  CHECK(g0.dim_IL == 0);
  CHECK(g0.dim_AL == 1);
  auto g1 = graded_piece(e, L, d, IntVec{1});
  CHECK(g1.dim_AC == 0);
  CHECK(g1.dim_IL == 0);
  CHECK(g1.dim_AL == 0);
  CHECK(g1.d_u == -1);
}

TEST_CASE("exactness of the graded pieces") {
  const auto check = [](const PolyhedralDivisor &d, const IntMat &us) {
    const auto e = build_embedding(d);
    const Line L = line_from_divisor(d);
    for (const auto &u : us) {
      auto g = graded_piece(e, L, d, u);
      Int sum = 0;
      for (const auto &f : g.floors) sum += f;
      const Int expected = sum + 1 > 0 ? Int(sum + 1) : Int(0);
      CHECK(Int(g.dim_AL) == expected);
      CHECK(g.dim_AC == g.dim_IL + g.dim_AL);
    }
  };
  IntMat d6_us;
  for (int u = 0; u <= 8; ++u) d6_us.push_back({u});
  check(fx::d6(), d6_us);
  IntMat po_us;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        IntVec u{a, b, c};
        if (dual_cone(fx::pomega().tailcone).contains(u)) po_us.push_back(u);
      }
  CHECK(po_us.size() > 20);
  check(fx::pomega(), po_us);
}

TEST_CASE("bounded-degree ideal membership") {
  const auto x = [](std::size_t k) { return XPolynomial::variable(4, k); };
  const auto lin = x(1) + x(2) + x(3);
  const auto bin = x(0) * x(0) - x(1) * x(2) * x(3);
  CHECK(ideal_membership(lin, {lin}, 2));
  CHECK_FALSE(ideal_membership(x(0), {bin}, 4));
  CHECK(ideal_membership(x(0) * x(0) * lin - x(1) * x(2) * x(3) * lin, {bin}, 5));
}

TEST_CASE("semigroup solver finds minimal lifts") {
  SemigroupSolver s(IntMat{{2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {3, 2, 2}});
  CHECK(s.contains(IntVec{6, 4, 4}));
  CHECK_FALSE(s.contains(IntVec{1, 0, 0}));
  auto lift = s.min_lift(IntVec{6, 4, 4});
  REQUIRE(lift);
  CHECK(*lift == Mono{0, 0, 0, 2});
  CHECK(s.solutions(IntVec{6, 4, 4}).size() == 2);
}
