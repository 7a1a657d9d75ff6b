#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "monoideal/error.hpp"
#include "monoideal/generic.hpp"
#include "monoideal/reconstruct.hpp"
#include "test_support.hpp"

namespace monoideal {
namespace {

using testing::set_of;

// Columns realise the six strict orders of three points.
Antichain all_orders_triple() {
  return set_of({{0, 0, 1, 1, 2, 2}, {1, 2, 0, 2, 0, 1}, {2, 1, 2, 0, 1, 0}});
}

WeakOrdering order(std::vector<std::vector<std::size_t>> blocks) { return WeakOrdering{blocks}; }

TEST(WeakOrdering, FromValues) {
  EXPECT_EQ(weak_ordering_of({3, 1, 3}), order({{1}, {0, 2}}));
  EXPECT_EQ(to_string(weak_ordering_of({3, 1, 3})), "{2}<{1,3}");
  EXPECT_TRUE(weak_ordering_of({1, 2, 0}).is_strict());
  EXPECT_FALSE(weak_ordering_of({0, 0}).is_strict());
}

TEST(Classify, PairExample) {
  const auto c = classify_coordinates(set_of({{2, 2, 3}, {3, 3, 2}}));
  EXPECT_EQ(c.coordinates_of(order({{0}, {1}})), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.coordinates_of(order({{1}, {0}})), (std::vector<std::size_t>{2}));
  EXPECT_TRUE(c.coordinates_of(order({{0, 1}})).empty());
}

TEST(Classify, AllTiedAndSinglePoint) {
  const auto c = classify_coordinates(set_of({{1, 0, 5}, {1, 5, 0}, {1, 2, 2}}));
  EXPECT_EQ(c.at(0), order({{0, 1, 2}}));
  const auto one = classify_coordinates(set_of({{4, 7}}));
  ASSERT_EQ(one.classes().size(), 1u);
  EXPECT_EQ(one.classes().begin()->second.size(), 2u);
}

TEST(Classify, ClassesPartitionCoordinates) {
  auto rng = testing::seeded(41);
  for (int n = 0; n < 200; ++n) {
    const auto q = sampling::random_antichain(rng, 5, 4, 0, 3);
    std::size_t total = 0;
    const auto c = classify_coordinates(q);
    for (const auto& [w, coords] : c.classes()) total += coords.size();
    EXPECT_EQ(total, q.dimension());
  }
}

TEST(OrderGeneric, Examples) {
  EXPECT_TRUE(is_order_generic(set_of({{2, 2, 3}, {3, 3, 2}})));
  EXPECT_TRUE(is_order_generic(set_of({{1, 3}, {2, 2}})));
  EXPECT_TRUE(is_order_generic(all_orders_triple()));
  EXPECT_TRUE(is_order_generic(set_of({{0, 2, 2}, {1, 1, 2}})));
  EXPECT_FALSE(is_order_generic(set_of({{0, 2}, {1, 1}, {2, 0}})));
  EXPECT_FALSE(is_order_generic(set_of({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})));
}

TEST(OrderedBell, KnownValues) {
  const std::vector<std::uint64_t> expected{1, 1, 3, 13, 75, 541};
  for (unsigned k = 0; k < expected.size(); ++k) EXPECT_EQ(ordered_bell(k), expected[k]);
}

TEST(OrderedBell, MatchesRecurrence) {
  const auto a = testing::ordered_bell_by_recurrence(12);
  for (unsigned k = 0; k <= 12; ++k) EXPECT_EQ(ordered_bell(k), a[k]) << k;
}

TEST(OrderedBell, ExceedsFactorial) {
  std::uint64_t f = 1;
  for (unsigned k = 2; k <= 10; ++k) {
    f *= k;
    EXPECT_GT(ordered_bell(k), f);
  }
}

TEST(OrderedBell, OverflowThrows) { EXPECT_THROW(ordered_bell(40), OverflowError); }

TEST(Stirling, SmallValues) {
  EXPECT_EQ(stirling2(0, 0), 1u);
  EXPECT_EQ(stirling2(4, 2), 7u);
  EXPECT_EQ(stirling2(5, 3), 25u);
  EXPECT_EQ(stirling2(3, 4), 0u);
}

TEST(WeakOrderingsOfThree, ThirteenDistinct) {
  const auto all = weak_orderings_of_three();
  EXPECT_EQ(all.size(), 13u);
  EXPECT_EQ(std::set<WeakOrdering>(all.begin(), all.end()).size(), 13u);
}

TEST(StrictMin, Examples) {
  const auto q = all_orders_triple();
  EXPECT_EQ(strict_min_coordinates(0, {0, 1, 2}, q), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(strict_min_coordinates(1, {0, 1}, q), (std::vector<std::size_t>{2, 4, 5}));
  EXPECT_THROW(strict_min_coordinates(0, {1, 2}, q), PreconditionError);
  EXPECT_THROW(strict_min_coordinates(5, {5}, q), PreconditionError);
}

TEST(StrictMin, ShrinksAsSubsetGrows) {
  auto rng = testing::seeded(42);
  for (int n = 0; n < 200; ++n) {
    const auto q = sampling::random_antichain(rng, 6, 4, 0, 4);
    if (q.size() < 3) continue;
    const auto small = strict_min_coordinates(0, {0, 1}, q);
    const auto big = strict_min_coordinates(0, {0, 1, 2}, q);
    EXPECT_TRUE(std::includes(small.begin(), small.end(), big.begin(), big.end()));
  }
}

TEST(StrictMin, OrderGenericMakesEverySetNonEmpty) {
  const auto q = all_orders_triple();
  for (std::size_t a = 0; a < 3; ++a) EXPECT_FALSE(strict_min_coordinates(a, {0, 1, 2}, q).empty());
}

TEST(SubsetGenerators, SingletonIsPurePowersAtMaxima) {
  const auto q = set_of({{2, 2, 3}, {3, 3, 2}});
  EXPECT_EQ(subset_generators({0}, q).points, (PointSet{{0, 0, 4}}));
  EXPECT_EQ(subset_generators({1}, q).points, (PointSet{{0, 4, 0}, {4, 0, 0}}));
}

TEST(SubsetGenerators, UnionMatchesReconstruction) {
  auto rng = testing::seeded(43);
  for (int n = 0; n < 100; ++n) {
    const auto k = 2 + n % 2;
    const auto d = k == 2 ? 2 + n % 4 : 6 + n % 3;
    const auto q = sampling::random_order_generic(rng, k, d, 6);
    const auto u = union_of_subset_generators(q);
    EXPECT_TRUE(u.order_generic);
    EXPECT_EQ(Antichain::trusted(u.points, d), zero_dim_ideal_from_socle(q));
    EXPECT_TRUE(is_antichain(u.points));
  }
}

// For C inside C', r in P_C below s in P_C' forces C = C' and r = s.
TEST(SubsetGenerators, NestedSubsetsAreIncomparable) {
  auto rng = testing::seeded(44);
  const std::vector<std::vector<std::size_t>> subsets{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  for (int n = 0; n < 60; ++n) {
    const auto q = sampling::random_order_generic(rng, 3, 6 + n % 5, 8);
    for (const auto& c : subsets) {
      for (const auto& c2 : subsets) {
        if (!std::includes(c2.begin(), c2.end(), c.begin(), c.end())) continue;
        const auto pc = subset_generators(c, q).points;
        const auto pc2 = subset_generators(c2, q).points;
        for (const auto& r : pc) {
          for (const auto& s : pc2) {
            if (leq(r, s)) {
              EXPECT_EQ(c, c2);
              EXPECT_EQ(r, s);
            }
          }
        }
      }
    }
  }
}

// Points shared by P_{u,v} and P_{u,w} pair a sole-minimum coordinate of u
// with a coordinate where v and w tie below u.
TEST(SubsetGenerators, SharedPairPoints) {
  auto rng = testing::seeded(45);
  std::size_t shared_seen = 0;
  for (int n = 0; n < 300; ++n) {
    const auto q = sampling::random_order_generic(rng, 3, 8 + n % 3, 3);
    const TripleClasses cls(q);
    for (std::size_t u = 0; u < 3; ++u) {
      const auto v = (u + 1) % 3;
      const auto w = (u + 2) % 3;
      const auto puv = subset_generators({std::min(u, v), std::max(u, v)}, q).points;
      const auto puw = subset_generators({std::min(u, w), std::max(u, w)}, q).points;
      const auto min_u = cls.sole_min(u);
      const auto& tied = cls.tied_low(v, w, u);
      for (const auto& r : puv) {
        for (const auto& s : puw) {
          if (!comparable(r, s)) continue;
          ASSERT_EQ(r, s);
          ++shared_seen;
          std::vector<std::size_t> support;
          for (std::size_t i = 0; i < r.dimension(); ++i) {
            if (r[i] != 0) support.push_back(i);
          }
          ASSERT_EQ(support.size(), 2u);
          const bool form = (std::count(min_u.begin(), min_u.end(), support[0]) &&
                             std::count(tied.begin(), tied.end(), support[1])) ||
                            (std::count(min_u.begin(), min_u.end(), support[1]) &&
                             std::count(tied.begin(), tied.end(), support[0]));
          EXPECT_TRUE(form) << to_string(r) << " in " << to_string(q);
        }
      }
    }
  }
  EXPECT_GT(shared_seen, 0u);
}

TEST(TripleClasses, StrictColumnsOnly) {
  const TripleClasses cls(all_orders_triple());
  for (const auto& [w, coords] : cls.classes()) EXPECT_EQ(coords.size(), w.is_strict() ? 1u : 0u);
  EXPECT_EQ(cls.sole_min(0), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(cls.sole_max(0), (std::vector<std::size_t>{4, 5}));
  EXPECT_TRUE(cls.shared_max(0).empty());
}

TEST(TripleClasses, StrictMaximaAreDisjoint) {
  auto rng = testing::seeded(46);
  for (int n = 0; n < 100; ++n) {
    const TripleClasses cls(sampling::random_order_generic(rng, 3, 8, 5));
    for (std::size_t u = 0; u < 3; ++u) {
      for (std::size_t v = u + 1; v < 3; ++v) {
        const auto a = cls.sole_max(u);
        const auto b = cls.sole_max(v);
        std::vector<std::size_t> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        EXPECT_TRUE(both.empty());
      }
    }
  }
}

TEST(Type3, ConstructedInstance) {
  const auto q = all_orders_triple();
  EXPECT_EQ(type3_generators(q), zero_dim_ideal_from_socle(q));
}

TEST(Type3, Preconditions) {
  EXPECT_THROW(type3_generators(set_of({{0, 1}, {1, 0}})), PreconditionError);
  EXPECT_THROW(type3_generators(set_of({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})), PreconditionError);
  EXPECT_THROW(TripleClasses(set_of({{0, 1}})), PreconditionError);
}

TEST(Type3, RandomTriplesAgree) {
  auto rng = testing::seeded(47);
  for (int n = 0; n < 100; ++n) {
    const auto d = 6 + n % 5;
    const auto q = sampling::random_order_generic(rng, 3, d, 9);
    const auto closed = type3_generators(q);
    EXPECT_EQ(closed, zero_dim_ideal_from_socle(q));
    std::map<WeakOrdering, std::size_t> sizes;
    const auto c = classify_coordinates(q);
    for (const auto& [w, coords] : c.classes()) sizes[w] = coords.size();
    EXPECT_EQ(type3_cardinality(sizes, d), closed.size());
  }
}

TEST(Type3Cardinality, StrictColumnsOnly) {
  std::map<WeakOrdering, std::size_t> sizes;
  for (const auto& w : weak_orderings_of_three()) {
    if (w.is_strict()) sizes[w] = 1;
  }
  EXPECT_EQ(type3_cardinality(sizes, 6), type3_generators(all_orders_triple()).size());
}

TEST(Type3Cardinality, RejectsBadSizes) {
  EXPECT_THROW(type3_cardinality({{order({{0, 1, 2}}), 4}}, 5), PreconditionError);
  EXPECT_THROW(type3_cardinality({{order({{0}, {1}}), 2}}, 2), PreconditionError);
}

}  // namespace
}  // namespace monoideal
