#include <doctest.h>

#include "helpers.hpp"
#include "strand/monoid.hpp"

using namespace strand;
using namespace strand::testing;

TEST_SUITE_BEGIN("monoid");

namespace {

Elem z(long v) { return Elem::zvec({Int(v)}); }

std::vector<Elem> tup(std::initializer_list<Elem> es) { return std::vector<Elem>(es); }

}  // namespace

TEST_CASE("group subset sums by ambient addition and membership") {
  MonoidPtr m = make_integer_range(3);
  CHECK(*m->sum(tup({z(1), z(2)})).value == z(3));
  CHECK_FALSE(m->sum(tup({z(2), z(3)})).is_defined());
  CHECK(*m->sum({}).value == z(0));
  CHECK(*m->sum(tup({z(2)})).value == z(2));
  CHECK_THROWS_AS(m->sum(tup({z(7)})), std::invalid_argument);

  MonoidPtr z2 = make_full_group({Int(2)});
  CHECK(z2->carrier()->size() == 2);
  CHECK(*z2->sum(tup({z(1), z(1)})).value == z(0));
}

TEST_CASE("pointed set folds") {
  auto triv = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  MonoidPtr m = make_pointed_set(PointedGSet::discrete(triv, {"a", "b"}));
  CHECK(*m->sum(tup({Elem::idx(1), Elem::idx(0)})).value == Elem::idx(1));
  CHECK_FALSE(m->sum(tup({Elem::idx(1), Elem::idx(2)})).is_defined());
  CHECK(*m->sum({}).value == Elem::idx(0));
}

TEST_CASE("Grassmannian sums orthogonal subspaces") {
  MonoidPtr g2 = make_grassmann(2);
  Elem e1 = Elem::subspace(QMatrix::from_rows({{Rat(1), Rat(0)}}));
  Elem e2 = Elem::subspace(QMatrix::from_rows({{Rat(0), Rat(1)}}));
  SumOutcome o = g2->sum(tup({e1, e2}));
  REQUIRE(o.is_defined());
  CHECK(*o.value == Elem::subspace(QMatrix::identity(2)));

  Elem diag = Elem::subspace(QMatrix::from_rows({{Rat(1), Rat(1)}}));
  CHECK_FALSE(g2->sum(tup({e1, diag})).is_defined());
  CHECK(*g2->sum(tup({e1, g2->zero()})).value == e1);
  // non-canonical bases are rejected as carrier elements
  CHECK_THROWS_AS(g2->sum(tup({Elem::subspace(QMatrix::from_rows({{Rat(2), Rat(0)}}))})),
                  std::invalid_argument);
}

TEST_CASE("interval monoid wraps superimposition") {
  MonoidPtr m = make_interval_monoid();
  Elem a = Elem::ivset(ivs({iv("0", "1", true, false)}));
  Elem b = Elem::ivset(ivs({iv("1", "2")}));
  CHECK(*m->sum(tup({a, b})).value == Elem::ivset(ivs({iv("0", "2")})));
  CHECK(*m->sum({}).value == m->zero());
  CHECK_FALSE(m->sum(tup({Elem::ivset(ivs({iv("0", "1")})), Elem::ivset(ivs({iv("1", "2")}))}))
                  .is_defined());
}

TEST_CASE("smash product reduces by distributivity search") {
  MonoidPtr range = make_integer_range(3);
  MonoidPtr z2 = make_full_group({Int(2)});
  MonoidPtr z4 = make_full_group({Int(4)});
  MonoidPtr smash = make_smash(range, z2);
  Elem one = Elem::zvec({Int(1)});  // in the Z/2 factor this is the generator

  // equal second coordinates contract through the first factor
  Elem c1d = Elem::smash_pair(z(1), one);
  Elem c2d = Elem::smash_pair(z(2), one);
  SumOutcome o = smash->sum(tup({c1d, c2d}));
  REQUIRE(o.is_defined());
  CHECK(*o.value == Elem::smash_pair(z(3), one));

  // equal first coordinates contract through the second factor
  MonoidPtr smash4 = make_smash(range, z4);
  SumOutcome o2 = smash4->sum(tup({Elem::smash_pair(z(1), z(1)), Elem::smash_pair(z(1), z(2))}));
  REQUIRE(o2.is_defined());
  CHECK(*o2.value == Elem::smash_pair(z(1), z(3)));

  // cancellation down to the basepoint, with 1+1 undefined in {0,1}
  MonoidPtr smash01 = make_smash(make_integer_range(1), z2);
  SumOutcome oz = smash01->sum(tup({c1d, c1d}));
  REQUIRE(oz.is_defined());
  CHECK(*oz.value == smash01->zero());

  // no schema applies
  Elem other = Elem::smash_pair(z(3), one);
  CHECK_FALSE(smash->sum(tup({c1d, other})).is_defined());
  CHECK(other == *smash->sum(tup({other, smash->zero()})).value);

  // multi-step reduction: first (1,2) contracts to 3, then the labels cancel
  SumOutcome o3 = smash->sum(tup({c1d, c2d, other}));
  REQUIRE(o3.is_defined());
  CHECK(*o3.value == smash->zero());
}

TEST_CASE("smash reduction confluence is tested, not assumed") {
  MonoidPtr z2 = make_full_group({Int(2)});
  auto check_confluent = [&](const MonoidPtr& smash) {
    auto carrier = smash->carrier();
    REQUIRE(carrier.has_value());
    std::vector<Elem> nonzero;
    for (const auto& e : *carrier)
      if (!smash->is_zero(e)) nonzero.push_back(e);
    std::vector<size_t> pick;
    auto run = [&](auto&& self, size_t first, int remaining) -> void {
      if (remaining == 0) {
        std::vector<Elem> tuple;
        for (size_t i : pick) tuple.push_back(nonzero[i]);
        auto values = smash_all_reduced_values(*smash, tuple);
        CHECK(values.size() <= 1);
        return;
      }
      for (size_t i = first; i < nonzero.size(); ++i) {
        pick.push_back(i);
        self(self, i, remaining - 1);
        pick.pop_back();
      }
    };
    for (int n = 2; n <= 4; ++n) run(run, 0, n);
  };
  check_confluent(make_smash(make_integer_range(1), z2));
  check_confluent(make_smash(z2, z2));

  // A genuine ambiguity: in ({0,1,2} in Z) ^ Z/2 the tuple ((1,g),(1,g))
  // reduces both to (2,g) (first coordinates first) and to the basepoint
  // (second coordinates first).  The detector must report it, not hide it.
  MonoidPtr ambiguous = make_smash(make_integer_range(2), z2);
  Elem c1d = Elem::smash_pair(z(1), Elem::zvec({Int(1)}));
  std::vector<Elem> twice = {c1d, c1d};
  auto values = smash_all_reduced_values(*ambiguous, twice);
  CHECK(values.size() == 2);

  // Z/2 ^ Z/3 is ambiguous the same way: (1^1) + (1^1) is 0 or (1^2).
  MonoidPtr z2z3 = make_smash(z2, make_full_group({Int(3)}));
  Elem oneone = Elem::smash_pair(z(1), z(1));
  std::vector<Elem> pair23 = {oneone, oneone};
  CHECK(smash_all_reduced_values(*z2z3, pair23).size() == 2);
}

TEST_CASE("wedge labels need one wedge point") {
  auto triv = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  PointedGSet s0s0 = PointedGSet::discrete(triv, {"L", "R"});
  MonoidPtr z2 = make_full_group({Int(2)});
  MonoidPtr w = make_wedge_label(s0s0, z2);
  Elem l1 = Elem::wedge_pair(1, z(1));
  Elem r1 = Elem::wedge_pair(2, z(1));
  CHECK(*w->sum(tup({l1, l1})).value == w->zero());  // labels cancel in Z/2
  CHECK_FALSE(w->sum(tup({l1, r1})).is_defined());   // different wedge points
  CHECK(*w->sum(tup({l1, w->zero()})).value == l1);
  CHECK(w->carrier()->size() == 3);
}

TEST_CASE("axiom checker passes the bundled constructors") {
  auto triv = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  CHECK(check_axioms(*make_integer_range(3), 4, 10000).ok());
  CHECK(check_axioms(*make_pointed_set(PointedGSet::discrete(triv, {"a", "b"})), 4, 10000).ok());
  CHECK(check_axioms(*make_grassmann(3), 3, 400).ok());
  CHECK(check_axioms(*make_interval_monoid(), 3, 400).ok());
  PointedGSet s0s0 = PointedGSet::discrete(triv, {"L", "R"});
  CHECK(check_axioms(*make_wedge_label(s0s0, make_full_group({Int(2)})), 4, 10000).ok());
  MonoidPtr absorbing =
      make_total_monoid({"0", "1", "inf"}, 0, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
  CHECK(check_axioms(*absorbing, 4, 10000).ok());
}

TEST_CASE("a corrupted table is caught by partition coherence") {
  // (1,1) is not summable but (1,1,0) is; blocks {1,0},{1} expose it.
  MonoidPtr bad = make_explicit_monoid({"0", "1", "inf"}, 0,
                                       {{{0, 1}, 1}, {{0, 2}, 2}, {{1, 2}, 2},
                                        {{2, 2}, 2}, {{0, 1, 1}, 2}});
  CheckReport rep = check_axioms(*bad, 4, 10000);
  CHECK_FALSE(rep.ok());
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations[0].what.find("partition coherence") != std::string::npos);
}

TEST_CASE("equivariance checker") {
  auto z2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  // negation action on {-1, 0, 1} inside Z
  MonoidPtr good = make_group_subset(AmbientAbelian{1, {}}, {{Int(-1)}, {Int(0)}, {Int(1)}},
                                     z2, {{0, 1, 2}, {2, 1, 0}});
  CHECK(check_equivariance(*good, 3, 2000).ok());

  // swapping -1 and 0 is not additive
  MonoidPtr bad = make_group_subset(AmbientAbelian{1, {}}, {{Int(-1)}, {Int(0)}, {Int(1)}},
                                    z2, {{0, 1, 2}, {1, 0, 2}});
  CHECK_FALSE(check_equivariance(*bad, 3, 2000).ok());

  // trivial action always passes
  CHECK(check_equivariance(*make_integer_range(3), 3, 500).ok());
}

TEST_CASE("homotopy inversion flips the interval part only") {
  Elem label = Elem::smash_pair(Elem::ivset(ivs({iv("0", "1")})), z(1));
  Elem flipped = homotopy_inversion(label);
  CHECK(flipped == Elem::smash_pair(Elem::ivset(ivs({iv("-1", "0", false, false)})), z(1)));
  CHECK(homotopy_inversion(flipped) == label);
  std::mt19937_64 rng(13);
  IntervalSampler sample;
  MonoidPtr smash = make_smash(make_interval_monoid(), make_full_group({Int(2)}));
  for (int trial = 0; trial < 100; ++trial) {
    IntervalSet p = sample(rng);
    if (p.empty()) continue;
    Elem e = Elem::smash_pair(Elem::ivset(p), z(1));
    CHECK(homotopy_inversion(homotopy_inversion(e)) == e);
    // inversion preserves summability of pairs
    IntervalSet q = sample(rng);
    if (q.empty()) continue;
    Elem f = Elem::smash_pair(Elem::ivset(q), z(1));
    std::vector<Elem> pair = {e, f};
    std::vector<Elem> inv_pair = {homotopy_inversion(e), homotopy_inversion(f)};
    CHECK(smash->sum(pair).is_defined() == smash->sum(inv_pair).is_defined());
  }
}

TEST_CASE("interval monoid passes randomized coherence") {
  CheckReport rep = check_axioms(*make_interval_monoid(), 4, 1500, 17);
  CHECK(rep.ok());
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.cases > 1000);
}

TEST_SUITE_END();
