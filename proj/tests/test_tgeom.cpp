#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace tvar;

TEST_CASE("line of the D6 divisor") {
  const Line L = line_from_divisor(fx::d6());
  using F = std::pair<Rat, Rat>;
  CHECK(L.forms == std::vector<F>{F{1, 0}, F{1, -1}, F{0, -1}});
  CHECK(L.relations() == IntMat{{1, -1, 1}});
  REQUIRE(L.boundary.size() == 3);
  CHECK(L.boundary[0].ord == IntVec{-1, -1});
  CHECK(L.boundary[1].ord == IntVec{1, 0});
  CHECK(L.boundary[2].ord == IntVec{0, 1});
  for (std::size_t j = 0; j < 3; ++j) CHECK(L.boundary[j].indices == std::vector<std::size_t>{j});
}

TEST_CASE("two points give the whole projective line") {
  const auto d = PolyhedralDivisor::make(1, {{1}}, {{0, 1}, {1, 0}}, {RatMat{{0}}, RatMat{{0}}});
  const Line L = line_from_divisor(d);
  CHECK(L.m() == 1);
  CHECK(L.relations().empty());
  CHECK(L.boundary.size() == 2);
}

TEST_CASE("four points give a line in P^3 with four boundary points") {
  const Line L = Line::from_forms({{1, 0}, {1, -1}, {0, -1}, {1, 1}});
  CHECK(rank(to_rat(IntMat{{1, 1, 0, 1}, {0, -1, -1, 1}}), 4) == 2);
  CHECK(L.relations().size() == 2);
  CHECK(L.boundary.size() == 4);
}

TEST_CASE("invalid lines are rejected") {
  CHECK_THROWS_AS(Line::from_forms({{1, 0}, {0, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Line::from_forms({{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("divisor validation") {
  CHECK_THROWS_WITH_AS(PolyhedralDivisor::make(1, {{1}}, {{0, 1}, {1, 1}, {2, 2}},
                                               {RatMat{{0}}, RatMat{{0}}, RatMat{{0}}}),
                       "points must be distinct", std::invalid_argument);
  CHECK_THROWS_AS(PolyhedralDivisor::make(1, {{1}}, {{0, 1}, {1, 0}}, {RatMat{{0}}}), std::invalid_argument);
  CHECK_THROWS_AS(PolyhedralDivisor::make(2, {{1}}, {{0, 1}, {1, 0}}, {RatMat{{0}}, RatMat{{0}}}),
                  std::invalid_argument);
}

TEST_CASE("cone C of the D6 divisor") {
  const Cone C = build_cone_C(fx::d6());
  CHECK(C.rays == IntMat{{-1, 0, 2}, {-1, 2, 0}, {3, -2, -2}});
}

TEST_CASE("cone C that is not pointed is rejected") {
  const auto d = PolyhedralDivisor::make(1, {{1}}, {{0, 1}, {1, 0}}, {RatMat{{0}}, RatMat{{0}}});
  CHECK_THROWS_WITH_AS(build_cone_C(d), doctest::Contains("not pointed"), std::invalid_argument);
  CHECK_THROWS_AS(build_embedding(d), std::invalid_argument);
}

TEST_CASE("semi-canonical embeddings") {
  const auto e = build_embedding(fx::d6());
  CHECK(e.n() == 4);
  CHECK(e.H == IntMat{{2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {3, 2, 2}});

  const auto p = build_embedding(fx::pomega());
  CHECK(p.n() == 9);
  for (const auto &h : p.H) CHECK(h[2] == 1);

  // Coefficients {0} and the empty set over the positive quadrant: C is unimodular.
  const auto t = PolyhedralDivisor::make(2, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {RatMat{{0, 0}}, std::nullopt});
  const auto et = build_embedding(t);
  CHECK(et.cone_C.rays == IntMat{{0, 0, -1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(et.n() == 3);
  CHECK(et.H == hilbert_basis(dual_cone(et.cone_C)));
}

TEST_CASE("admissibility of coinciding boundary points") {
  const auto d = fx::d6();
  CHECK(check_admissible(d).admissible);

  // Points 0, 0, infinity: the first two coefficients share a boundary point.
  const Line L = Line::from_forms({{1, 0}, {1, 0}, {0, -1}});
  REQUIRE(L.boundary.size() == 2);
  auto a = check_admissible(d.coefficients, d.tailcone, L);
  CHECK_FALSE(a.admissible);
  REQUIRE(a.point);
  CHECK(L.boundary[*a.point].indices == std::vector<std::size_t>{0, 1});
  CHECK(a.u == IntVec{1});

  auto coeffs = d.coefficients;
  coeffs[1] = Polyhedron::empty_set(d.tailcone);
  CHECK(check_admissible(coeffs, d.tailcone, L).admissible);
}

TEST_CASE("toric detection counts boundary points") {
  CHECK_FALSE(detect_toric(line_from_divisor(fx::d6())));
  CHECK(detect_toric(Line::from_forms({{1, 0}, {0, 1}})));
  // y1 = y2: the forms vanish at two points only.
  CHECK(detect_toric(Line::from_forms({{1, 0}, {0, 1}, {0, 1}})));
}

TEST_CASE("dual cone membership matches the support function inequalities") {
  for (const auto &d : {fx::d6(), fx::pomega()}) {
    const auto e = build_embedding(d);
    std::mt19937 rng(static_cast<unsigned>(d.rank_N));
    std::uniform_int_distribution<int> dist(-4, 4);
    const Cone sdual = dual_cone(d.tailcone);
    int tested = 0, members = 0;
    while (tested < 200) {
      IntVec u(d.rank_N), v(e.m);
      for (auto &x : u) x = dist(rng);
      for (auto &x : v) x = dist(rng);
      if (!sdual.contains(u)) continue;
      ++tested;
      IntVec uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const bool in = e.dual_C.contains(uv);
      members += in;
      CHECK(in == satisfies_cdual_inequalities(d, u, v));
    }
    CHECK(members > 0);
  }
}
