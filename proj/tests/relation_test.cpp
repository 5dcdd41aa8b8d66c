#include <gtest/gtest.h>

#include <random>

#include "kcausal/errors.hpp"
#include "kcausal/models.hpp"
#include "kcausal/relation.hpp"
#include "oracles.hpp"

using namespace kcausal;

namespace {

using Pairs = std::vector<EventPair>;

oracle::Matrix to_matrix(const Relation& r) {
  oracle::Matrix m(r.ground_size(), std::vector<bool>(r.ground_size(), false));
  for (auto [p, q] : r.pairs()) m[p][q] = true;
  return m;
}

Relation chain_k_plus(std::size_t n) { return k_plus(chain_ground(n)); }

}  // namespace

TEST(EventSet, InsertEraseCount) {
  EventSet s(70);
  EXPECT_TRUE(s.empty());
  s.insert(0);
  s.insert(69);
  s.insert(64);
  EXPECT_EQ(s.count(), 3u);
  EXPECT_TRUE(s.contains(69));
  s.erase(64);
  EXPECT_FALSE(s.contains(64));
  EXPECT_EQ(s.members(), (std::vector<Event>{0, 69}));
  EXPECT_THROW(s.insert(70), ValidationError);
}

TEST(EventSet, ComplementStaysInsideUniverse) {
  EventSet s(5, {1, 3});
  const EventSet c = s.complement();
  EXPECT_EQ(c.members(), (std::vector<Event>{0, 2, 4}));
  EXPECT_EQ(c.complement(), s);
  EXPECT_EQ(EventSet::all(67).count(), 67u);
  EXPECT_EQ(EventSet::from_mask(4, 0xff).count(), 4u);
}

TEST(EventSet, SetAlgebra) {
  EventSet a(6, {0, 1, 2});
  EventSet b(6, {2, 3});
  EXPECT_EQ((a | b).members(), (std::vector<Event>{0, 1, 2, 3}));
  EXPECT_EQ((a & b).members(), (std::vector<Event>{2}));
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_THROW(a |= EventSet(7), ValidationError);
}

TEST(Relation, FromPairsRejectsOutOfRange) {
  EXPECT_THROW(Relation::from_pairs(2, {{0, 2}}), ValidationError);
  const Relation r = Relation::from_pairs(3, {{2, 0}, {0, 1}});
  EXPECT_EQ(r.pairs(), (Pairs{{0, 1}, {2, 0}}));
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r.transpose().pairs(), (Pairs{{0, 2}, {1, 0}}));
}

TEST(Relation, ComplementAndIntersect) {
  const Relation r = Relation::from_pairs(2, {{0, 1}});
  EXPECT_EQ(r.complement().size(), 3u);
  EXPECT_EQ(r.intersect(r.complement()).size(), 0u);
  EXPECT_TRUE(r.is_subset_of(full_relation(2)));
}

TEST(CausalGround, FlagsSelfLoops) {
  EXPECT_TRUE(CausalGround(Relation::from_pairs(2, {{0, 1}})).is_irreflexive());
  EXPECT_FALSE(CausalGround(Relation::from_pairs(2, {{1, 1}})).is_irreflexive());
}

TEST(KPlus, SinglePoint) {
  EXPECT_EQ(k_plus(CausalGround(Relation(1))).pairs(), (Pairs{{0, 0}}));
}

TEST(KPlus, ChainOfThree) {
  EXPECT_EQ(chain_k_plus(3).pairs(), (Pairs{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}));
}

TEST(KPlus, TwoCycleIsFull) {
  const CausalGround g(Relation::from_pairs(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(oracle::closure_by_composition(to_matrix(g.base())), to_matrix(full_relation(2)));
  EXPECT_EQ(k_plus(g), full_relation(2));
  EXPECT_FALSE(is_antisymmetric(k_plus(g)));
}

TEST(KPlus, EmptyBaseIsDiagonal) { EXPECT_EQ(k_plus(antichain_ground(4)), diagonal(4)); }

TEST(KPlus, MatchesCompositionFixedPoint) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const CausalGround g = trial % 3 == 0 && n >= 2 ? gen_cyclic(n, rng())
                                                    : gen_random_dag(n, 0.3, rng());
    const oracle::Matrix expected = oracle::closure_by_composition(to_matrix(g.base()));
    EXPECT_EQ(to_matrix(k_plus(g)), expected) << "trial " << trial;
  }
}

TEST(KPlus, RowsAreBfsReachability) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const CausalGround g = gen_random_dag(n, 0.15, rng());
    const Relation k = k_plus(g);
    const oracle::Matrix base = to_matrix(g.base());
    for (Event p = 0; p < n; ++p) {
      const auto seen = oracle::reachable_from(base, p);
      for (Event q = 0; q < n; ++q) EXPECT_EQ(k.contains(p, q), seen[q]);
    }
  }
}

TEST(KPlus, IsPreorderAndAntisymmetricOnDags) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Relation k = k_plus(gen_random_dag(9, 0.4, seed));
    EXPECT_TRUE(is_preorder(k));
    EXPECT_TRUE(is_antisymmetric(k));
    EXPECT_EQ(reflexive_transitive_closure(k), k);
  }
}

TEST(Images, ChainFutureAndPast) {
  const Relation k = chain_k_plus(3);
  EXPECT_EQ(future_set(k, EventSet(3, {0})).members(), (std::vector<Event>{0, 1, 2}));
  EXPECT_EQ(past_set(k, EventSet(3, {2})).members(), (std::vector<Event>{0, 1, 2}));
  EXPECT_EQ(past_set(k, EventSet(3, {0})).members(), (std::vector<Event>{0}));
  EXPECT_TRUE(future_set(k, EventSet(3)).empty());
  EXPECT_TRUE(past_set(k, EventSet(3)).empty());
}

TEST(Images, AntichainFutureIsReflexiveOnly) {
  const Relation k = k_plus(antichain_ground(2));
  EXPECT_EQ(future_set(k, EventSet(2, {0})).members(), (std::vector<Event>{0}));
}

TEST(Closedness, ChainUpSets) {
  const Relation k = chain_k_plus(3);
  EXPECT_TRUE(is_future_closed(k, EventSet(3, {1, 2})));
  EXPECT_FALSE(is_future_closed(k, EventSet(3, {0})));
  EXPECT_TRUE(is_future_closed(k, EventSet::all(3)));
  EXPECT_TRUE(is_past_closed(k, EventSet(3, {0})));
}

TEST(Predicates, Antisymmetry) {
  EXPECT_TRUE(is_antisymmetric(diagonal(3)));
  EXPECT_TRUE(is_antisymmetric(chain_k_plus(4)));
  EXPECT_FALSE(is_antisymmetric(full_relation(2)));
}

TEST(Predicates, DiagonalSizes) {
  EXPECT_EQ(diagonal(1).pairs(), (Pairs{{0, 0}}));
  EXPECT_EQ(diagonal(2).pairs(), (Pairs{{0, 0}, {1, 1}}));
  EXPECT_EQ(diagonal(3).size(), 3u);
}

TEST(Duality, ChainExample) {
  EXPECT_TRUE(complement_duality_check(chain_k_plus(3), EventSet(3, {1, 2})));
  EXPECT_TRUE(complement_duality_check(chain_k_plus(3), EventSet(3)));
}

TEST(Duality, RandomRelationsAndSets) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    Pairs pairs;
    for (Event p = 0; p < n; ++p)
      for (Event q = 0; q < n; ++q)
        if (rng() % 3 == 0) pairs.emplace_back(p, q);
    const Relation r = Relation::from_pairs(n, pairs);
    const EventSet x = EventSet::from_mask(n, rng());
    EXPECT_TRUE(complement_duality_check(r, x));
  }
}
