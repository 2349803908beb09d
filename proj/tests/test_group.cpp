#include <doctest.h>

#include "helpers.hpp"
#include "strand/rep.hpp"

using namespace strand;

TEST_SUITE_BEGIN("group");

TEST_CASE("multiplication tables are validated by exhaustion") {
  CHECK_NOTHROW(FiniteGroup::cyclic(6));
  CHECK_THROWS_AS(FiniteGroup("bad", {"e", "g"}, {{0, 1}, {1, 1}}),
                  std::invalid_argument);  // g has no inverse
  CHECK_THROWS_AS(FiniteGroup("bad", {"e", "a", "b"}, {{0, 1, 2}, {1, 2, 2}, {2, 2, 1}}),
                  std::invalid_argument);  // not associative
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  CHECK(z6.is_abelian());
  CHECK(z6.inv(1) == 5);
}

TEST_CASE("regular representation stages") {
  auto triv = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  StagePtr s1 = regular_rep(triv, 1);
  CHECK(s1->dim() == 1);
  CHECK(s1->rep.matrix(0).is_identity());

  auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  StagePtr stage = regular_rep(z2, 1);
  QMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  CHECK(stage->rep.matrix(1) == swap);

  StagePtr stage2 = regular_rep(z2, 2);
  REQUIRE(stage2->dim() == 4);
  // block diagonal of two swaps
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      bool expect = (i / 2 == j / 2) && (i % 2 != j % 2);
      CHECK(stage2->rep.matrix(1).at(i, j) == Rat(expect ? 1 : 0));
    }

  // stabilization: stage k embeds in stage k+1 by zero padding
  QVec v = {Rat(1), Rat(2)};
  QVec moved_then_padded = pad_vector(act_vector(stage->rep, 1, v), 4);
  QVec padded_then_moved = act_vector(stage2->rep, 1, pad_vector(v, 4));
  CHECK(moved_then_padded == padded_then_moved);
}

TEST_CASE("act_vector is exact and homomorphic") {
  auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  StagePtr stage = regular_rep(z2, 1);
  QVec v = {Rat(1), Rat(2)};
  CHECK(act_vector(stage->rep, 0, v) == v);
  CHECK(act_vector(stage->rep, 1, v) == QVec{Rat(2), Rat(1)});
  CHECK_THROWS_AS(act_vector(stage->rep, 1, QVec{Rat(1)}), std::invalid_argument);

  auto z6 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(6));
  StagePtr s6 = regular_rep(z6, 2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coord(-5, 5), pick(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    QVec w(s6->dim());
    for (auto& x : w) x = Rat(coord(rng), 1 + trial % 3);
    int g = pick(rng), h = pick(rng);
    CHECK(act_vector(s6->rep, g, act_vector(s6->rep, h, w)) ==
          act_vector(s6->rep, z6->mul(g, h), w));
  }
}

TEST_CASE("fixed subspaces by exact row reduction") {
  auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  StagePtr stage = regular_rep(z2, 1);
  CHECK(fixed_subspace(stage->rep, {0}) == QMatrix::identity(2));

  QMatrix diag = fixed_subspace(stage->rep, {0, 1});
  REQUIRE(diag.rows() == 1);
  CHECK(diag.row(0) == QVec{Rat(1), Rat(1)});

  StagePtr stage2 = regular_rep(z2, 2);
  QMatrix fixed2 = fixed_subspace(stage2->rep, {0, 1});
  CHECK(fixed2.rows() == 2);  // one all-ones line per copy
  for (size_t r = 0; r < fixed2.rows(); ++r)
    CHECK(act_vector(stage2->rep, 1, fixed2.row(r)) == fixed2.row(r));

  CHECK_THROWS_AS(fixed_subspace(stage->rep, {1}), std::invalid_argument);
}

TEST_CASE("subgroup enumeration by closure search") {
  FiniteGroup triv = FiniteGroup::trivial();
  CHECK(subgroups(triv).size() == 1);
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  CHECK(subgroups(z2).size() == 2);
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  auto subs = subgroups(z4);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].size() == 1);
  CHECK(subs[1].size() == 2);
  CHECK(subs[2].size() == 4);
  FiniteGroup v4 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(subgroups(v4).size() == 5);  // 1, three Z/2, V4
  CHECK_THROWS_AS(subgroups(FiniteGroup::cyclic(25)), std::invalid_argument);
}

TEST_CASE("coset G-sets act by translation and fix the basepoint") {
  auto z4 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(4));
  PointedGSet full = coset_gset(z4, {0, 1, 2, 3});
  CHECK(full.size() == 2);  // one coset plus basepoint

  auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  PointedGSet free = coset_gset(z2, {0});
  REQUIRE(free.size() == 3);
  CHECK(free.act(1, 1) == 2);  // generator swaps the two cosets
  CHECK(free.act(1, 2) == 1);
  for (int g = 0; g < 2; ++g) CHECK(free.act(g, free.basepoint()) == free.basepoint());

  PointedGSet halves = coset_gset(z4, {0, 2});
  CHECK(halves.size() == 3);
  CHECK(halves.act(1, 1) == 2);
  CHECK(halves.act(2, 1) == 1);
  CHECK_THROWS_AS(coset_gset(z4, {0, 1}), std::invalid_argument);
}

TEST_CASE("wedge and smash carry the factor index maps") {
  auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  PointedGSet cosets = coset_gset(z2, {0});
  PointedGSet s0 = PointedGSet::discrete(z2, {"x"});
  auto wedge = wedge_with_maps(cosets, s0);
  CHECK(wedge.sum.size() == 4);
  CHECK(wedge.from_x[1] != 0);
  CHECK(wedge.from_y[1] != 0);
  auto smash = smash_with_maps(cosets, s0);
  CHECK(smash.prod.size() == 3);  // two cosets x one point, plus basepoint
  CHECK(smash.prod.act(1, smash.pair_index[1][1]) == smash.pair_index[2][1]);
}

TEST_SUITE_END();
