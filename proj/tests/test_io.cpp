#include <catch2/catch_amalgamated.hpp>

#include "alglen/constructions.hpp"
#include "alglen/io.hpp"

using namespace alglen;

TEST_CASE("algebra files round-trip losslessly", "[io]") {
  SECTION("group algebra over F_2") {
    PrimeField f2(2);
    auto d3 = group_algebra(dihedral_group(3), f2);
    Json j = algebra_to_json(d3);
    CHECK(j["field"] == "f2");
    CHECK(j["dim"] == 6);
    auto back = algebra_from_json(f2, j);
    CHECK(algebra_to_json(back).dump() == j.dump());
  }
  SECTION("fractional structure constants over Q") {
    RationalField q;
    // commutative dim-2 algebra with x*x = (1/2) e + (2/3) x
    std::vector<std::vector<Vec<RationalField>>> table(2);
    auto e0 = Vec<RationalField>{q.one(), q.zero()};
    auto e1 = Vec<RationalField>{q.zero(), q.one()};
    table[0] = {e0, e1};
    table[1] = {e1, Vec<RationalField>{q.parse("1/2"), q.parse("2/3")}};
    auto alg = Algebra<RationalField>::from_structure_constants(
        q, {"e", "x"}, table, e0);
    Json j = algebra_to_json(alg);
    CHECK(j["structure_constants"][1][1][0] == "1/2");
    auto back = algebra_from_json(q, j);
    CHECK(algebra_to_json(back).dump() == j.dump());
  }
  SECTION("field mismatch is rejected") {
    PrimeField f2(2);
    PrimeField f3(3);
    auto d3 = group_algebra(dihedral_group(3), f2);
    Json j = algebra_to_json(d3);
    CHECK_THROWS_AS(algebra_from_json(f3, j), FieldMismatch);
    CHECK(algebra_json_field(j) == FieldDesc::prime(2));
  }
  SECTION("malformed documents are rejected") {
    PrimeField f2(2);
    Json j;
    j["field"] = "f2";
    j["dim"] = 2;
    j["labels"] = Json::array({"e", "x"});
    j["unit"] = Json::array({"1", "0"});
    j["structure_constants"] = Json::array();  // wrong row count
    CHECK_THROWS_AS(algebra_from_json(f2, j), ParseError);
  }
}

TEST_CASE("filtration reports serialize", "[io]") {
  PrimeField f2(2);
  auto c3 = bicirculant_algebra(3, f2);
  auto [a, b] = bicirculant_generators(3, f2);
  GeneratingSet<PrimeField> s{&c3.algebra,
                              {*c3.express(b), *c3.express(a.mul(b))}};
  auto report = filtrate(s);
  Json j = filtration_report_to_json(f2, report);
  CHECK(j["generates"] == true);
  CHECK(j["length"] == 2);
  CHECK(j["dims"] == Json::array({1, 3, 5}));
  CHECK(j["new_words"].size() == 3);
  CHECK(j["new_words"][0][0]["word"] == Json::array());
  // identical inputs give byte-identical documents
  CHECK(j.dump() == filtration_report_to_json(f2, filtrate(s)).dump());
}
