#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "alglen/constructions.hpp"
#include "alglen/length.hpp"
#include "oracles.hpp"

using namespace alglen;

namespace {

template <FieldCtx F>
GeneratingSet<F> bab_set(const MatrixRealization<F>& cn, int n, const F& f) {
  auto [a, b] = bicirculant_generators(n, f);
  return GeneratingSet<F>{&cn.algebra,
                          {*cn.express(b), *cn.express(a.mul(b))}};
}

template <FieldCtx F>
GeneratingSet<F> random_generating_set(const Algebra<F>& alg, int card,
                                       std::mt19937_64& rng) {
  const F& f = alg.field();
  for (;;) {
    GeneratingSet<F> s{&alg, {}};
    while (static_cast<int>(s.gens.size()) < card) {
      Vec<F> v(alg.dim());
      for (auto& x : v) x = f.random(rng);
      s.gens.push_back(std::move(v));
    }
    if (filtrate(s).generates) return s;
  }
}

Word random_word(int len, int alphabet, std::mt19937_64& rng) {
  Word w;
  for (int i = 0; i < len; ++i) {
    w.letters.push_back(static_cast<int>(rng() % alphabet));
  }
  return w;
}

}  // namespace

TEST_CASE("filtration of the full basis reaches everything in one level",
          "[length]") {
  PrimeField f2(2);
  auto d3 = group_algebra(dihedral_group(3), f2);
  GeneratingSet<PrimeField> s{&d3, {}};
  for (int i = 0; i < d3.dim(); ++i) s.gens.push_back(d3.basis_vec(i));
  auto report = filtrate(s);
  REQUIRE(report.generates);
  CHECK(report.length == 1);
  CHECK(report.dims == std::vector<int>{1, d3.dim()});
  CHECK(dim_jump_profile(report) == std::vector<int>{d3.dim() - 1});
}

TEST_CASE("reversal pair filtration attains length n-1", "[length]") {
  RationalField q;
  auto c5 = bicirculant_algebra(5, q);
  auto report = filtrate(bab_set(c5, 5, q));
  REQUIRE(report.generates);
  CHECK(report.length == 4);
  CHECK(dim_jump_profile(report) == std::vector<int>{2, 2, 2, 2});
  CHECK(report.stabilized_dim == 9);
}

TEST_CASE("non-generating sets stabilize below the full dimension",
          "[length]") {
  RationalField q;
  auto c3 = bicirculant_algebra(3, q);
  auto [a, b] = bicirculant_generators(3, q);
  GeneratingSet<RationalField> s{&c3.algebra, {*c3.express(a)}};
  auto report = filtrate(s);
  CHECK_FALSE(report.generates);
  CHECK_FALSE(report.length.has_value());
  CHECK(report.stabilized_dim == 3);
  CHECK_FALSE(report.truncated);
  // oracle: the closure of {E, A, A^2} under products has dimension 3
  CHECK(oracles::brute_subalgebra_dim(q, 3, {a}) == 3);
  CHECK_THROWS_AS(dim_jump_profile(report), NotGenerating);
}

TEST_CASE("filtration dims match the all-words oracle", "[length][property]") {
  PrimeField f2(2);
  auto c4 = bicirculant_algebra(4, f2);
  auto d3 = group_algebra(dihedral_group(3), f2);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const Algebra<PrimeField>& alg = trial % 2 == 0 ? c4.algebra : d3;
    GeneratingSet<PrimeField> s{&alg, {}};
    const int card = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < card; ++i) {
      Vec<PrimeField> v(alg.dim());
      for (auto& x : v) x = f2.random(rng);
      s.gens.push_back(std::move(v));
    }
    auto report = filtrate(s);
    auto brute = oracles::brute_filtration_dims(s, 6);
    for (std::size_t i = 0; i < report.dims.size(); ++i) {
      REQUIRE(report.dims[i] == brute[i]);
    }
    // after stabilization the oracle dims stay flat
    for (std::size_t i = report.dims.size(); i < brute.size(); ++i) {
      REQUIRE(brute[i] == report.stabilized_dim);
    }
  }
}

TEST_CASE("max_level truncates without claiming stabilization", "[length]") {
  RationalField q;
  auto c5 = bicirculant_algebra(5, q);
  auto report = filtrate(bab_set(c5, 5, q), 2);
  CHECK(report.truncated);
  CHECK_FALSE(report.generates);
  CHECK(report.dims.size() == 3);
}

TEST_CASE("word reducibility", "[length]") {
  PrimeField f2(2);
  auto c3 = bicirculant_algebra(3, f2);
  auto s = bab_set(c3, 3, f2);
  SECTION("single generators are irreducible") {
    CHECK_FALSE(is_reducible(Word{{0}}, s));
    CHECK_FALSE(is_reducible(Word{{1}}, s));
  }
  SECTION("squares of involutions are reducible") {
    CHECK(is_reducible(Word{{0, 0}}, s));  // B^2 = E lies in L_1
  }
  SECTION("mixed pairs grow the span") {
    GeneratingSet<PrimeField> ab{
        &c3.algebra,
        {*c3.express(bicirculant_generators(3, f2).first),
         *c3.express(bicirculant_generators(3, f2).second)}};
    CHECK_FALSE(is_reducible(Word{{0, 1}}, ab));
    // brute check: dim L_2 exceeds dim L_1
    auto dims = oracles::brute_filtration_dims(ab, 2);
    CHECK(dims[2] > dims[1]);
  }
  CHECK_THROWS_AS(is_reducible(Word{}, s), Error);
}

TEST_CASE("word equivalence", "[length]") {
  PrimeField f2(2);
  auto c4 = bicirculant_algebra(4, f2);
  auto s = bab_set(c4, 4, f2);
  SECTION("reflexivity") {
    Word w{{0, 1}};
    CHECK(are_equivalent(w, w, s));
  }
  SECTION("the two alternating words of length 2, against the oracle") {
    Word uv{{0, 1}};
    Word vu{{1, 0}};
    CHECK(are_equivalent(uv, vu, s) == oracles::brute_equivalent(uv, vu, s));
  }
  SECTION("a reducible and an irreducible word are never equivalent") {
    Word sq{{0, 0}};  // reducible: B^2 = E
    Word uv{{0, 1}};
    REQUIRE(is_reducible(sq, s));
    REQUIRE_FALSE(is_reducible(uv, s));
    CHECK_FALSE(are_equivalent(sq, uv, s));
  }
  SECTION("equal-length reducible words are equivalent") {
    Word sq0{{0, 0}};
    Word sq1{{1, 1}};
    REQUIRE(is_reducible(sq0, s));
    REQUIRE(is_reducible(sq1, s));
    CHECK(are_equivalent(sq0, sq1, s));
  }
  SECTION("length mismatch is an error") {
    CHECK_THROWS_AS(are_equivalent(Word{{0}}, Word{{0, 1}}, s),
                    LengthMismatch);
    CHECK_THROWS_AS(are_equivalent(Word{}, Word{}, s), LengthMismatch);
  }
}

TEST_CASE("equivalence and reducibility laws on random words",
          "[length][property]") {
  PrimeField f2(2);
  auto c3 = bicirculant_algebra(3, f2);
  std::mt19937_64 rng(101);
  auto s = bab_set(c3, 3, f2);
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int len = 1 + static_cast<int>(rng() % 4);
    Word u = random_word(len, 2, rng);
    Word v = random_word(len, 2, rng);
    Word w = random_word(len, 2, rng);
    const bool uv = are_equivalent(u, v, s);
    CHECK(uv == are_equivalent(v, u, s));
    CHECK(uv == oracles::brute_equivalent(u, v, s));
    if (uv) {
      CHECK(is_reducible(u, s) == is_reducible(v, s));
      if (are_equivalent(v, w, s)) {
        CHECK(are_equivalent(u, w, s));
        ++nontrivial;
      }
    }
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("removing a dependent generator preserves the filtration",
          "[length]") {
  // the cardinality-cap reduction behind the exhaustive search
  PrimeField f2(2);
  auto c3 = bicirculant_algebra(3, f2);
  auto s = bab_set(c3, 3, f2);
  // append a generator lying in span{1, B, AB}
  Vec<PrimeField> extra = c3.algebra.add(
      c3.algebra.unit(), c3.algebra.add(s.gens[0], s.gens[1]));
  GeneratingSet<PrimeField> enlarged{&c3.algebra,
                                     {s.gens[0], s.gens[1], extra}};
  auto base = filtrate(s);
  auto grown = filtrate(enlarged);
  REQUIRE(base.dims == grown.dims);
  CHECK(base.length == grown.length);

  std::mt19937_64 rng(71);
  auto d3 = group_algebra(dihedral_group(3), f2);
  for (int trial = 0; trial < 10; ++trial) {
    auto rs = random_generating_set(d3, 2, rng);
    Vec<PrimeField> dep = d3.add(rs.gens[0], rs.gens[1]);
    GeneratingSet<PrimeField> bigger{&d3, {rs.gens[0], rs.gens[1], dep}};
    CHECK(filtrate(rs).dims == filtrate(bigger).dims);
  }
}

TEST_CASE("exhaustive length search", "[length]") {
  PrimeField f2(2);
  SECTION("two-element group algebra") {
    // F_2 C_2: x^2 = e
    auto c2 = group_algebra(GroupTable::build(2, {0, 1, 1, 0}, {"e", "x"}), f2);
    auto r = algebra_length_exhaustive(c2, 2);
    REQUIRE(r.best == 1);
    CHECK(r.exact);
    // oracle: every generating subset of the 4 elements has length 1
    int oracle_best = -1;
    for (int mask = 1; mask < 16; ++mask) {
      GeneratingSet<PrimeField> s{&c2, {}};
      for (int i = 0; i < 4; ++i) {
        if (mask & (1 << i)) s.gens.push_back(c2.element_from_index(i));
      }
      auto rep = filtrate(s);
      if (rep.generates) oracle_best = std::max(oracle_best, *rep.length);
    }
    CHECK(oracle_best == 1);
  }
  SECTION("full 2x2 matrix algebra with a small cardinality cap") {
    auto m2 = full_matrix_algebra(2, f2);
    auto r = algebra_length_exhaustive(m2.algebra, 2);
    CHECK(r.best == 2);
  }
  SECTION("budget guard") {
    auto d3 = group_algebra(dihedral_group(3), f2);
    CHECK_THROWS_AS(algebra_length_exhaustive(d3, 6, 1000), BudgetExceeded);
    RationalField q;
    auto c3q = bicirculant_algebra(3, q);
    CHECK_THROWS_AS(algebra_length_exhaustive(c3q.algebra, 2), InfiniteField);
  }
  SECTION("deterministic across thread counts") {
    auto m2 = full_matrix_algebra(2, f2);
    auto r1 = algebra_length_exhaustive(m2.algebra, 3, 1 << 20, 1);
    auto r3 = algebra_length_exhaustive(m2.algebra, 3, 1 << 20, 3);
    CHECK(r1.best == r3.best);
    CHECK(r1.witness_indices == r3.witness_indices);
    CHECK(r1.subsets_examined == r3.subsets_examined);
  }
}

TEST_CASE("sampled length search", "[length]") {
  PrimeField f2(2);
  auto d3 = group_algebra(dihedral_group(3), f2);
  SECTION("finds the known witness class for the dihedral algebra") {
    auto r = algebra_length_sampled(d3, 2000, 2, 3, 1);
    REQUIRE(r.best.has_value());
    CHECK(*r.best == 3);
    CHECK_FALSE(r.exact);
    // the witness filtrates to the reported length
    GeneratingSet<PrimeField> s{&d3, r.witness};
    CHECK(filtrate(s).length == r.best);
  }
  SECTION("zero trials is vacuous") {
    auto r = algebra_length_sampled(d3, 0, 2, 3, 1);
    CHECK_FALSE(r.best.has_value());
    CHECK(r.witness.empty());
  }
  SECTION("deterministic across thread counts") {
    auto r1 = algebra_length_sampled(d3, 500, 2, 3, 7, 1);
    auto r3 = algebra_length_sampled(d3, 500, 2, 3, 7, 3);
    CHECK(r1.best == r3.best);
    CHECK(r1.witness_indices == r3.witness_indices);
  }
  SECTION("works over the rationals with bounded coordinates") {
    RationalField q;
    auto c3 = bicirculant_algebra(3, q);
    auto r = algebra_length_sampled(c3.algebra, 50, 2, 3, 5);
    if (r.best) CHECK(*r.best <= 2);  // l(C_3) = 2 caps every sample
  }
}

TEST_CASE("supersets never lengthen a generating set", "[length][property]") {
  PrimeField f2(2);
  auto d3 = group_algebra(dihedral_group(3), f2);
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 15; ++trial) {
    auto s = random_generating_set(d3, 2, rng);
    GeneratingSet<PrimeField> bigger = s;
    Vec<PrimeField> v(d3.dim());
    for (auto& x : v) x = f2.random(rng);
    bigger.gens.push_back(std::move(v));
    auto ls = filtrate(s);
    auto lb = filtrate(bigger);
    REQUIRE(ls.generates);
    REQUIRE(lb.generates);
    CHECK(*lb.length <= *ls.length);
  }
}

TEST_CASE("generating sets reject foreign elements", "[length]") {
  PrimeField f2(2);
  auto d3 = group_algebra(dihedral_group(3), f2);
  auto d4 = group_algebra(dihedral_group(4), f2);
  CHECK_THROWS_AS(
      make_generating_set(d3, {Element<PrimeField>(&d4, d4.basis_vec(0))}),
      AlgebraMismatch);
  CHECK_THROWS_AS(make_generating_set(d3, std::vector<Element<PrimeField>>{}),
                  Error);
}
