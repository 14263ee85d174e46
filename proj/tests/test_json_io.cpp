#include "fixtures.hpp"

#include <doctest.h>

using namespace tvar;

namespace {

auto error_of(const Json &j) -> std::string {
  try {
    divisor_from_json(j);
  } catch (const InputError &e) {
    return e.what();
  }
  return "";
}

auto d6_json() -> Json { return read_json_file(fx::data("d6.json")); }

} // namespace

TEST_CASE("the D6 fixture parses") {
  const auto d = divisor_from_json(d6_json());
  CHECK(d.rank_N == 1);
  CHECK(d.points.size() == 3);
  CHECK(to_json(d) == to_json(fx::d6()));
}

TEST_CASE("repeated points are rejected") {
  Json j = d6_json();
  j["points"][2] = {"2", "2"};
  const auto msg = error_of(j);
  CHECK(msg.find("points must be distinct") != std::string::npos);
  CHECK(msg.find("/points/2") != std::string::npos);
}

TEST_CASE("malformed rationals are rejected with a pointer") {
  Json j = d6_json();
  j["coefficients"][1]["vertices"][0][0] = "1/0";
  const auto msg = error_of(j);
  CHECK(msg.find("malformed rational") != std::string::npos);
  CHECK(msg.find("/coefficients/1/vertices/0/0") != std::string::npos);
  j["coefficients"][1]["vertices"][0][0] = 0.5;
  CHECK(error_of(j).find("malformed rational") != std::string::npos);
}

TEST_CASE("schema violations name the offending field") {
  Json j = d6_json();
  j.erase("tailcone_rays");
  CHECK(error_of(j).find("/tailcone_rays") != std::string::npos);
  j = d6_json();
  j["rank_N"] = -1;
  CHECK(error_of(j).find("/rank_N") != std::string::npos);
  j = d6_json();
  j["coefficients"][0]["vertices"][0] = Json::array({"1", "2"});
  CHECK(error_of(j).find("wrong length") != std::string::npos);
  CHECK_THROWS_AS(read_json_file(fx::data("missing.json")), InputError);
}

TEST_CASE("round trips of the fixture objects") {
  for (const auto &d : {fx::d6(), fx::pomega()}) {
    const Json j = to_json(d);
    const auto back = divisor_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.tailcone == d.tailcone);
    const Line L = line_from_divisor(d);
    const Json lj = to_json(L);
    CHECK(to_json(line_from_json(lj)) == lj);
  }
  const auto e = build_embedding(fx::d6());
  const auto gens = ideal_presentation(e, line_from_divisor(fx::d6()), fx::d6(), 6).all();
  for (const auto &g : gens) CHECK(xpolynomial_from_json(to_json(g), "") == g);
}

TEST_CASE("rationals serialize as strings") {
  CHECK(to_json(Rat(3, 2)) == "3/2");
  CHECK(to_json(Rat(-4)) == "-4");
  CHECK(rat_from_json(Json("-1/2"), "") == Rat(-1, 2));
  CHECK(rat_from_json(Json(3), "") == Rat(3));
}

TEST_CASE("polarized, valuation and custom inputs") {
  const auto p = polarized_from_json(read_json_file(fx::data("pomega.json")));
  CHECK(p.grading_index == 2);
  CHECK_THROWS_AS(polarized_from_json(d6_json()), InputError);

  const Line L = line_from_divisor(fx::d6());
  const auto v = valuation_from_json(read_json_file(fx::data("d6-valuation.json")), L);
  CHECK(v.psi == IntMat{{1}, {0}});
  CHECK(v.point == L.boundary[0].param);
  CHECK_THROWS_AS(valuation_from_json(Json{{"psi", {{1}}}, {"gamma", {0}}, {"point_index", 7}}, L), InputError);

  const auto c = custom_from_json(read_json_file(fx::data("d6-minimal.json")));
  CHECK(c.rank_N == 1);
  CHECK(c.embedding.columns == fx::d6_minimal().columns);
  CHECK(c.embedding.generators == fx::d6_minimal().generators);
}

TEST_CASE("emission is deterministic") {
  const auto e1 = build_embedding(divisor_from_json(d6_json()));
  const auto e2 = build_embedding(divisor_from_json(d6_json()));
  CHECK(to_json(e1).dump() == to_json(e2).dump());
  CHECK(to_json(e1)["hilbert_basis"].dump() == "[[2,1,1],[2,1,2],[2,2,1],[3,2,2]]");
}
