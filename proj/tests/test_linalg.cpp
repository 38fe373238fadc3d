#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "alglen/constructions.hpp"
#include "alglen/linalg.hpp"

using namespace alglen;

namespace {

template <FieldCtx F>
Vec<F> vec_of(const F& f, std::initializer_list<int> entries) {
  Vec<F> v;
  for (int e : entries) v.push_back(f.from_int(e));
  return v;
}

}  // namespace

TEST_CASE("subspace insertion tracks growth", "[linalg]") {
  RationalField q;
  Subspace<RationalField> sp(q, 3);
  CHECK(sp.insert(vec_of(q, {1, 0, 0})));
  CHECK(sp.insert(vec_of(q, {0, 1, 0})));
  CHECK_FALSE(sp.insert(vec_of(q, {1, 1, 0})));
  CHECK(sp.dim() == 2);

  PrimeField f2(2);
  Subspace<PrimeField> sp2(f2, 2);
  CHECK(sp2.insert(vec_of(f2, {1, 1})));
  CHECK(sp2.dim() == 1);
  CHECK(sp2.insert(vec_of(f2, {1, 0})));
  CHECK(sp2.dim() == 2);

  Subspace<PrimeField> empty(f2, 2);
  CHECK(empty.insert(vec_of(f2, {1, 1})));
  CHECK(empty.dim() == 1);
}

TEST_CASE("subspace membership", "[linalg]") {
  RationalField q;
  Subspace<RationalField> sp(q, 2);
  sp.insert(vec_of(q, {1, 0}));
  sp.insert(vec_of(q, {0, 1}));
  CHECK(sp.contains(vec_of(q, {5, 7})));

  PrimeField f2(2);
  Subspace<PrimeField> sp2(f2, 2);
  sp2.insert(vec_of(f2, {1, 1}));
  CHECK_FALSE(sp2.contains(vec_of(f2, {0, 1})));

  Subspace<PrimeField> empty(f2, 3);
  CHECK(empty.contains(vec_of(f2, {0, 0, 0})));
  CHECK_THROWS_AS(empty.contains(vec_of(f2, {0, 0})), DimensionMismatch);
}

TEST_CASE("canonical form does not depend on insertion order", "[linalg]") {
  PrimeField f5(5);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec<PrimeField>> vecs;
    for (int i = 0; i < 5; ++i) {
      Vec<PrimeField> v(4);
      for (auto& x : v) x = f5.random(rng);
      vecs.push_back(v);
    }
    Subspace<PrimeField> a(f5, 4);
    for (const auto& v : vecs) a.insert(v);
    std::shuffle(vecs.begin(), vecs.end(), rng);
    Subspace<PrimeField> b(f5, 4);
    for (const auto& v : vecs) b.insert(v);
    REQUIRE(a == b);
    REQUIRE(a.basis() == b.basis());
  }
}

TEST_CASE("intersection of circulants and anticirculants", "[linalg]") {
  RationalField q;
  SECTION("odd case: the all-ones matrix") {
    auto inter = intersect(circulant_span(3, q), anticirculant_span(3, q));
    REQUIRE(inter.dim() == 1);
    CHECK(inter.contains(Vec<RationalField>(9, q.one())));
  }
  SECTION("even case: the two alternating 0/1 matrices") {
    auto inter = intersect(circulant_span(4, q), anticirculant_span(4, q));
    REQUIRE(inter.dim() == 2);
    Vec<RationalField> even(16, q.zero()), odd(16, q.zero());
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        ((i + j) % 2 == 0 ? even : odd)[i * 4 + j] = q.one();
      }
    }
    CHECK(inter.contains(even));
    CHECK(inter.contains(odd));
  }
  SECTION("idempotence") {
    auto sp = circulant_span(4, q);
    CHECK(intersect(sp, sp) == sp);
  }
}

TEST_CASE("kernels of linear maps", "[linalg]") {
  PrimeField f2(2);
  auto id3 = Matrix<PrimeField>::identity(f2, 3);
  CHECK(kernel_basis(LinearMap<PrimeField>(id3)).dim() == 0);

  RationalField q;
  Matrix<RationalField> zero(q, 2, 2);
  CHECK(kernel_basis(LinearMap<RationalField>(zero)).dim() == 2);
}

TEST_CASE("rank-nullity on random maps", "[linalg][property]") {
  PrimeField f3(3);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    Matrix<PrimeField> m(f3, rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = f3.random(rng);
    }
    LinearMap<PrimeField> map(m);
    auto ker = kernel_basis(map);
    REQUIRE(rank(map) + ker.dim() == cols);
    for (const auto& v : ker.basis()) {
      CHECK(vec_is_zero(f3, map.apply(v)));
    }
  }
}

TEST_CASE("intersection dimension formula on random subspaces",
          "[linalg][property]") {
  PrimeField f5(5);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int ambient = 5;
    auto sample = [&] {
      Subspace<PrimeField> sp(f5, ambient);
      int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) {
        Vec<PrimeField> v(ambient);
        for (auto& x : v) x = f5.random(rng);
        sp.insert(v);
      }
      return sp;
    };
    auto a = sample();
    auto b = sample();
    Subspace<PrimeField> sum = a;
    for (const auto& v : b.basis()) sum.insert(v);
    auto inter = intersect(a, b);
    REQUIRE(inter.dim() + sum.dim() == a.dim() + b.dim());
    for (const auto& v : inter.basis()) {
      CHECK(a.contains(v));
      CHECK(b.contains(v));
    }
  }
}

TEST_CASE("subspace coordinates express members exactly", "[linalg]") {
  RationalField q;
  Subspace<RationalField> sp(q, 3);
  sp.insert(vec_of(q, {1, 2, 0}));
  sp.insert(vec_of(q, {0, 1, 1}));
  auto c = sp.coordinates(vec_of(q, {2, 5, 1}));
  REQUIRE(c.has_value());
  CHECK_FALSE(sp.coordinates(vec_of(q, {0, 0, 1})).has_value());
}

TEST_CASE("matrix arithmetic and flattening", "[linalg]") {
  PrimeField f3(3);
  auto [a, b] = bicirculant_generators(3, f3);
  CHECK(a.pow(3) == Matrix<PrimeField>::identity(f3, 3));
  CHECK(Matrix<PrimeField>::from_flat(f3, 3, 3, a.flatten()) == a);
  CHECK_THROWS_AS(a.mul(Matrix<PrimeField>(f3, 2, 2)), DimensionMismatch);
  PrimeField f5(5);
  Matrix<PrimeField> other(f5, 3, 3);
  CHECK_THROWS_AS(a.mul(other), FieldMismatch);
  CHECK_THROWS_AS(intersect(circulant_span(3, f3), circulant_span(3, f5)),
                  FieldMismatch);
  CHECK_THROWS_AS(intersect(circulant_span(3, f3), circulant_span(4, f3)),
                  DimensionMismatch);
}
