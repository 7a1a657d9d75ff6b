#include <gtest/gtest.h>

#include <set>

#include "monoideal/augment.hpp"
#include "monoideal/error.hpp"
#include "monoideal/oracle.hpp"
#include "monoideal/updown.hpp"
#include "test_support.hpp"

namespace monoideal {
namespace {

using testing::set_of;

const Antichain kIdealOne = set_of({{2, 2, 4}, {2, 3, 3}, {2, 4, 2}, {3, 2, 3}, {4, 2, 2}});
const Antichain kSocle = set_of({{2, 2, 3}, {3, 3, 2}});

TEST(UpSet, Membership) {
  const UpSet up(set_of({{2, 2, 4}, {4, 2, 2}}));
  EXPECT_FALSE(up.contains({3, 2, 3}));
  EXPECT_TRUE(up.contains({4, 3, 2}));
  EXPECT_TRUE(up.contains({2, 2, 4}));
  EXPECT_THROW(up.contains({1, 1}), DimensionMismatch);
}

TEST(UpSet, KeepsOnlyMinimalGenerators) {
  const PointSet gens{{1, 3}, {2, 3}, {3, 1}};
  EXPECT_EQ(UpSet(gens).generators(), set_of({{1, 3}, {3, 1}}));
}

TEST(DownSet, Membership) {
  const DownSet down(kSocle);
  EXPECT_TRUE(down.contains({2, 2, 3}));
  EXPECT_TRUE(down.contains({0, 0, 0}));
  EXPECT_FALSE(down.contains({3, 3, 3}));
  // Monotone: anything below a member is a member.
  EXPECT_TRUE(down.contains({3, 1, 2}));
}

TEST(Cofinite, StructuralCheck) {
  EXPECT_TRUE(is_cofinite(UpSet(kIdealOne)));
  EXPECT_TRUE(is_cofinite(UpSet(set_of({{3, 0}, {0, 2}}))));
  EXPECT_FALSE(is_cofinite(UpSet(set_of({{2, 2, 3}, {3, 3, 2}}))));
  EXPECT_FALSE(is_corner_bounded(DownSet(kSocle)));
  EXPECT_TRUE(is_corner_bounded(DownSet(augment_down(kSocle))));
}

TEST(SocleDown, WorkedExample) { EXPECT_EQ(socle_down(UpSet(kIdealOne)), kSocle); }

TEST(SocleDown, PurePowersGiveOnePoint) {
  const auto gens = set_of({{4, 0, 0}, {0, 2, 0}, {0, 0, 7}});
  EXPECT_EQ(socle_down(UpSet(gens)), set_of({{3, 1, 6}}));
}

TEST(SocleDown, NotCofiniteThrows) {
  EXPECT_THROW(socle_down(UpSet(kSocle)), NotCofinite);
  EXPECT_THROW(socle_up(DownSet(kSocle)), NotCofinite);
}

TEST(SocleUp, WorkedExample) {
  const auto q_star = set_of({{2, 2, 3}, {3, 3, 2}, {4, 4, 1}, {4, 1, 4}, {1, 4, 4}});
  EXPECT_EQ(socle_up(DownSet(q_star)), kIdealOne);
  const auto shifted = set_of({{2, 2, 3}, {3, 3, 2}, {5, 6, 1}, {5, 0, 7}, {0, 6, 7}});
  EXPECT_EQ(socle_up(DownSet(shifted)),
            set_of({{1, 1, 4}, {1, 3, 3}, {1, 4, 2}, {3, 1, 3}, {4, 1, 2}}));
}

TEST(SocleUp, SinglePointWithCorners) {
  const LatticePoint p{2, 0, 5};
  const auto down = augment_down(set_of({p}), LatticePoint::filled(3, -1), LatticePoint{9, 9, 9});
  EXPECT_EQ(socle_up(DownSet(down)), set_of({{3, 0, 0}, {0, 1, 0}, {0, 0, 6}}));
}

TEST(SocleDown, PrunedMatchesExhaustive) {
  auto rng = testing::seeded(21);
  for (int n = 0; n < 300; ++n) {
    const auto d = 2 + n % 3;
    const auto g = sampling::random_antichain(rng, d, 5, 0, 6);
    const auto corners = sampling::random_corners(rng, g);
    const UpSet up(augment_up(g, corners.lower, corners.upper));
    EXPECT_EQ(socle_down(up, CornerSearch::pruned), socle_down(up, CornerSearch::exhaustive));
    const DownSet down(augment_down(g, corners.lower, corners.upper));
    EXPECT_EQ(socle_up(down, CornerSearch::pruned), socle_up(down, CornerSearch::exhaustive));
  }
}

TEST(SocleDown, AgreesWithBoxScan) {
  auto rng = testing::seeded(5);
  for (int n = 0; n < 300; ++n) {
    const auto d = 1 + n % 3;
    const auto g = augment_up(sampling::random_antichain(rng, d, 5, 1, 6));
    EXPECT_EQ(socle_down(UpSet(g)), oracle::brute_socle_down(g)) << to_string(g);
  }
}

// Corners are maximal outside U: not in U, every unit step up lands in U.
TEST(SocleDown, CornerCharacterisation) {
  auto rng = testing::seeded(8);
  for (int n = 0; n < 200; ++n) {
    const auto d = 2 + n % 3;
    const UpSet up(augment_up(sampling::random_antichain(rng, d, 6, 0, 5)));
    for (const auto& r : socle_down(up)) {
      EXPECT_FALSE(up.contains(r));
      for (std::size_t j = 0; j < d; ++j) EXPECT_TRUE(up.contains(r + LatticePoint::axis(d, j)));
    }
  }
}

TEST(SocleDown, DisjointFromUpSet) {
  auto rng = testing::seeded(13);
  for (int n = 0; n < 100; ++n) {
    const auto d = 2 + n % 2;
    const auto gens = augment_up(sampling::random_antichain(rng, d, 4, 0, 5));
    const UpSet up(gens);
    const DownSet below(socle_down(up));
    oracle::Box::around(gens).for_each([&](const LatticePoint& x) {
      EXPECT_FALSE(below.contains(x) && up.contains(x)) << to_string(x);
    });
    const auto pts = augment_down(sampling::random_antichain(rng, d, 4, 0, 5));
    const DownSet down(pts);
    const UpSet above(socle_up(down));
    oracle::Box::around(pts).for_each([&](const LatticePoint& x) {
      EXPECT_FALSE(above.contains(x) && down.contains(x)) << to_string(x);
    });
  }
}

void expect_witnesses_consistent(const Antichain& gens, const std::vector<CornerSelection>& found,
                                 LatticePoint::value_type step) {
  for (const auto& c : found) {
    const auto d = c.point.dimension();
    ASSERT_EQ(c.sources.size(), d);
    EXPECT_EQ(std::set<std::size_t>(c.sources.begin(), c.sources.end()).size(), d);
    for (std::size_t j = 0; j < d; ++j) {
      EXPECT_EQ(c.point[j], gens[c.sources[j]][j] + step);
    }
  }
}

TEST(Witnesses, WorkedExample) {
  const auto found = socle_down_with_witnesses(UpSet(kIdealOne));
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0].point, (LatticePoint{2, 2, 3}));
  expect_witnesses_consistent(kIdealOne, found, -1);
}

TEST(Witnesses, GorensteinUsesEveryGenerator) {
  const auto gens = set_of({{4, 0, 0}, {0, 2, 0}, {0, 0, 7}});
  const auto found = socle_down_with_witnesses(UpSet(gens));
  ASSERT_EQ(found.size(), 1u);
  std::set<std::size_t> used(found[0].sources.begin(), found[0].sources.end());
  EXPECT_EQ(used.size(), 3u);
}

TEST(Witnesses, RandomInstances) {
  auto rng = testing::seeded(17);
  for (int n = 0; n < 200; ++n) {
    const auto d = 2 + n % 3;
    const auto g = sampling::random_antichain(rng, d, 5, 0, 6);
    const auto up = augment_up(g);
    const auto found = socle_down_with_witnesses(UpSet(up));
    EXPECT_EQ(found.size(), socle_down(UpSet(up)).size());
    expect_witnesses_consistent(up, found, -1);
    const auto down = augment_down(g);
    expect_witnesses_consistent(down, socle_up_with_witnesses(DownSet(down)), +1);
  }
}

}  // namespace
}  // namespace monoideal
