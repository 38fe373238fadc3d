#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "alglen/field.hpp"

using namespace alglen;

TEST_CASE("field descriptors parse and validate", "[field]") {
  CHECK(FieldDesc::parse("q").kind == FieldDesc::Kind::rational);
  CHECK(FieldDesc::parse("f7").p == 7);
  CHECK(FieldDesc::parse("f2147483647").p == 2147483647);  // 2^31 - 1 is prime
  CHECK(FieldDesc::parse("f5").str() == "f5");
  CHECK(FieldDesc::parse("q").str() == "q");
  CHECK(FieldDesc::parse("f3").characteristic() == 3);
  CHECK(FieldDesc::parse("q").characteristic() == 0);
  CHECK_THROWS_AS(FieldDesc::parse("f9"), ParseError);
  CHECK_THROWS_AS(FieldDesc::parse("f1"), ParseError);
  CHECK_THROWS_AS(FieldDesc::parse("f0"), ParseError);
  CHECK_THROWS_AS(FieldDesc::parse("f2147483649"), ParseError);
  CHECK_THROWS_AS(FieldDesc::parse("r"), ParseError);
  CHECK_THROWS_AS(FieldDesc::parse(""), ParseError);
  CHECK_THROWS_AS(FieldDesc::prime(10), ParseError);
}

TEST_CASE("prime field arithmetic", "[field]") {
  PrimeField f5(5);
  CHECK(f5.mul(3, 4) == 2);
  PrimeField f2(2);
  CHECK(f2.add(1, 1) == 0);
  PrimeField f7(7);
  CHECK(f7.inv(3) == 5);
  CHECK(f2.inv(1) == 1);
  CHECK(f5.from_int(-3) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.neg(0) == 0);
  CHECK_THROWS_AS(f5.inv(0), DivisionByZero);
  CHECK_THROWS_AS(f5.div(2, 0), DivisionByZero);
}

TEST_CASE("rational arithmetic", "[field]") {
  RationalField q;
  CHECK(q.add(q.parse("1/2"), q.parse("1/3")) == q.parse("5/6"));
  CHECK(q.inv(q.parse("4/3")) == q.parse("3/4"));
  CHECK(q.str(q.mul(q.parse("2/3"), q.parse("3/2"))) == "1");
  CHECK_THROWS_AS(q.inv(q.zero()), DivisionByZero);
  CHECK_THROWS_AS(q.div(q.one(), q.zero()), DivisionByZero);
}

TEST_CASE("scalar text round-trips through canonical form", "[field]") {
  RationalField q;
  CHECK(q.str(q.parse("2/4")) == "1/2");
  CHECK(q.str(q.parse("-6/4")) == "-3/2");
  CHECK(q.str(q.parse("-0")) == "0");
  CHECK(q.str(q.parse("22/7")) == "22/7");
  CHECK(q.parse("123456789012345678901234567890/2") ==
        q.parse("61728394506172839450617283945"));
  CHECK_THROWS_AS(q.parse(""), ParseError);
  CHECK_THROWS_AS(q.parse("1/-2"), ParseError);
  CHECK_THROWS_AS(q.parse("1/0"), ParseError);
  CHECK_THROWS_AS(q.parse(" 1"), ParseError);
  CHECK_THROWS_AS(q.parse("a"), ParseError);

  PrimeField f5(5);
  CHECK(f5.parse("12") == 2);
  CHECK(f5.str(f5.parse("3")) == "3");
  CHECK_THROWS_AS(f5.parse("-1"), ParseError);
  CHECK_THROWS_AS(f5.parse("1/2"), ParseError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto a = q.random(rng);
    CHECK(q.parse(q.str(a)) == a);
    auto b = f5.random(rng);
    CHECK(f5.parse(f5.str(b)) == b);
  }
}

TEMPLATE_TEST_CASE("field axioms hold exactly", "[field][property]",
                   PrimeField, RationalField) {
  auto make = [] {
    if constexpr (std::is_same_v<TestType, PrimeField>) {
      return PrimeField(7);
    } else {
      return RationalField{};
    }
  };
  auto f = make();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = f.random(rng);
    auto b = f.random(rng);
    auto c = f.random(rng);
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.add(a, b) == f.add(b, a));
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.add(a, f.neg(a)) == f.zero());
    CHECK(f.mul(a, f.one()) == a);
    if (!f.is_zero(a)) {
      CHECK(f.mul(a, f.inv(a)) == f.one());
      CHECK(f.inv(f.inv(a)) == a);
    }
  }
}

TEST_CASE("with_field dispatches on the descriptor", "[field]") {
  int chr = with_field(FieldDesc::parse("f13"), [](auto f) {
    return static_cast<int>(f.characteristic());
  });
  CHECK(chr == 13);
  CHECK(with_field(FieldDesc::parse("q"), [](auto f) {
          return f.size().has_value();
        }) == false);
}
