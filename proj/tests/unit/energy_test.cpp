// Copyright 2026 The ddlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ddlab/energy.hpp"
#include "ddlab/oracle.hpp"
#include "test_util.hpp"

namespace ddlab {
namespace {

using testing::make;

TEST(DistanceClasses, SingleClass) {
  auto dc = distance_classes(make(2, 1, {0, 2}, {{1, 1}}));
  ASSERT_EQ(dc.size(), 1u);
  EXPECT_EQ(dc.key(0), Rational(2));
  auto mem = dc.members(0);
  ASSERT_EQ(mem.size(), 2u);
  EXPECT_EQ(mem[0], (PairIndex{0, 0}));
  EXPECT_EQ(mem[1], (PairIndex{1, 0}));
}

TEST(DistanceClasses, Trivial) {
  EXPECT_EQ(distance_classes(make(2, 1, {0}, {{0, 1}})).size(), 1u);
}

TEST(DistanceClasses, TwoClasses) {
  auto dc = distance_classes(make(2, 1, {0, 2}, {{0, 1}, {1, 2}}));
  ASSERT_EQ(dc.size(), 2u);
  EXPECT_EQ(dc.key(0), Rational(1));
  EXPECT_EQ(dc.class_size(0), 1u);
  EXPECT_EQ(dc.key(1), Rational(5));
  auto mem = dc.members(1);
  ASSERT_EQ(mem.size(), 3u);
  EXPECT_EQ(mem[0], (PairIndex{0, 1}));
  EXPECT_EQ(mem[1], (PairIndex{1, 0}));
  EXPECT_EQ(mem[2], (PairIndex{1, 1}));
}

TEST(DistanceClasses, IndependentOfWorkerCount) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    Config cfg = testing::random_valid_config(rng, 30, 30, 2 + it % 3);
    auto one = distance_classes(cfg, 1);
    for (unsigned w : {2u, 3u, 7u}) {
      auto many = distance_classes(cfg, w);
      ASSERT_EQ(many.size(), one.size());
      for (std::size_t i = 0; i < one.size(); ++i) {
        ASSERT_EQ(many.key(i), one.key(i));
        ASSERT_TRUE(std::equal(many.members(i).begin(), many.members(i).end(),
                               one.members(i).begin(), one.members(i).end()));
      }
    }
  }
}

void expect_same_classes(const DistanceClasses& a, const DistanceClasses& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a.key(i), b.key(i));
    ASSERT_TRUE(std::equal(a.members(i).begin(), a.members(i).end(),
                           b.members(i).begin(), b.members(i).end()));
  }
}

TEST(DistanceClasses, IntegerPathMatchesRationalPath) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 30; ++it) {
    Config cfg = testing::random_valid_config(rng, 25, 25, 2 + it % 4);
    expect_same_classes(distance_classes(cfg, 2, GroupingPath::kAuto),
                        distance_classes(cfg, 2, GroupingPath::kRationalOnly));
    SqDistMatrix mat = sq_dist_matrix(cfg);
    expect_same_classes(distance_classes(mat, 2, GroupingPath::kAuto),
                        distance_classes(mat, 2, GroupingPath::kRationalOnly));
  }
  // Fractional and huge coordinates fall back to rationals.
  Config frac(2, 1, {Rational(0), Rational(1, 2)},
               {Point({Rational(0), Rational(1)}), Point({Rational(1, 3), Rational(2)})});
  expect_same_classes(distance_classes(frac, 1),
                      distance_classes(frac, 1, GroupingPath::kRationalOnly));
  Config huge(2, 1, {Rational(0), Rational(1)},
              {Point({Rational(0), Rational(std::int64_t{1} << 40)}), Point({Rational(3), Rational(1)})});
  expect_same_classes(distance_classes(huge, 1),
                      distance_classes(huge, 1, GroupingPath::kRationalOnly));
  EXPECT_EQ(distance_classes(huge, 1).key(2), Rational(std::int64_t{1} << 40).square());
}

TEST(DistanceClasses, PartitionAllPairs) {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 30; ++it) {
    Config cfg = testing::random_valid_config(rng, 10, 10, 3);
    auto dc = distance_classes(cfg);
    std::vector<PairIndex> all;
    for (std::size_t i = 0; i < dc.size(); ++i) {
      ASSERT_GT(dc.class_size(i), 0u);
      for (const auto& pr : dc.members(i)) {
        ASSERT_EQ(sq_dist(cfg.p1()[pr.p1], cfg.p2()[pr.p2]), dc.key(i));
        all.push_back(pr);
      }
      if (i > 0) ASSERT_LT(dc.key(i - 1), dc.key(i));
    }
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all.size(), cfg.n() * cfg.m());
    ASSERT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  }
}

TEST(Energy, Examples) {
  auto e = energy(distance_classes(make(2, 1, {0, 2}, {{1, 1}})));
  EXPECT_EQ(e.q, 2u);
  EXPECT_EQ(e.q0, 2u);
  EXPECT_EQ(e.q1, 0u);

  e = energy(distance_classes(make(2, 1, {0, 2}, {{0, 1}, {1, 2}})));
  EXPECT_EQ(e.x, 2u);
  EXPECT_EQ(e.q, 6u);
  EXPECT_EQ(e.q0, 2u);
  EXPECT_EQ(e.q1, 4u);
  using H = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  EXPECT_EQ(e.histogram, (H{{1, 1}, {3, 1}}));

  // Squared distances 1, 2, 5, 10, 404, 365, 328, 293: all distinct.
  e = energy(distance_classes(make(2, 1, {0, 1, 2, 3}, {{0, 1}, {20, 2}})));
  EXPECT_EQ(e.x, 8u);
  EXPECT_EQ(e.q, 0u);
  EXPECT_EQ(e.q0, 0u);
  EXPECT_EQ(e.q1, 0u);
}

TEST(Energy, MatchesQuadrupleOracle) {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 120; ++it) {
    // Mix valid and unconstrained inputs; the identity does not need c = 1.
    Config cfg = it % 2 == 0
                     ? testing::random_valid_config(rng, 12, 12, 2 + it % 3)
                     : testing::random_free_config(rng, 1 + rng() % 10,
                                                   1 + rng() % 10, 2 + it % 3, 4);
    auto e = energy(distance_classes(cfg));
    auto o = oracle_quadruples(cfg);
    ASSERT_EQ(e.q, o.q);
    ASSERT_EQ(e.q0, o.q0);
    ASSERT_EQ(e.q1, o.q1);
    ASSERT_LE(e.q0, cfg.n() * cfg.m());
  }
}

TEST(Energy, InvariantUnderTranslationAndPermutation) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    Config cfg = testing::random_valid_config(rng, 10, 10, 2 + it % 3);
    auto base = energy(distance_classes(cfg));

    Rational shift(static_cast<std::int64_t>(rng() % 17) - 8, 1 + rng() % 5);
    std::vector<Rational> p1 = cfg.p1();
    for (auto& a : p1) a += shift;
    std::vector<Point> p2 = cfg.p2();
    for (auto& p : p2) p[0] += shift;
    std::shuffle(p2.begin(), p2.end(), rng);
    std::reverse(p1.begin(), p1.end());
    auto moved = energy(distance_classes(Config(cfg.k(), cfg.c(), p1, p2)));
    EXPECT_EQ(moved.q, base.q);
    EXPECT_EQ(moved.q0, base.q0);
    EXPECT_EQ(moved.x, base.x);
  }
}

TEST(Chain, TwoClassExample) {
  auto e = energy(distance_classes(make(2, 1, {0, 2}, {{0, 1}, {1, 2}})));
  auto c = check_chain(e, 2, 2);
  EXPECT_TRUE(c.cauchy_schwarz);
  EXPECT_EQ(c.slack, Integer(12 - 4));
  EXPECT_TRUE(c.x_at_most_half);
  EXPECT_EQ(c.lower_bound, LowerBoundStatus::kHolds);  // 4*2*6 = 48 >= 16
  EXPECT_TRUE(c.ok());
}

TEST(Chain, AllDistinctIsGuarded) {
  auto e = energy(distance_classes(make(2, 1, {0, 1, 2, 3}, {{0, 1}, {20, 2}})));
  auto c = check_chain(e, 4, 2);
  EXPECT_TRUE(c.cauchy_schwarz);
  EXPECT_EQ(c.slack, Integer(0));
  EXPECT_EQ(c.lower_bound, LowerBoundStatus::kDivisionGuard);
}

TEST(Chain, CylinderEightByEight) {
  auto e = energy(distance_classes(gen_cylinder_extremal(8, 8, Rational(1))));
  EXPECT_EQ(e.x, 8u);
  // Class |i-j| = d has 8 pairs for d = 0 and 2(8-d) otherwise.
  std::uint64_t q = 8 * 7;
  for (std::uint64_t d = 1; d < 8; ++d) q += 2 * (8 - d) * (2 * (8 - d) - 1);
  EXPECT_EQ(e.q, q);
  auto c = check_chain(e, 8, 8);
  EXPECT_TRUE(c.cauchy_schwarz);
  EXPECT_EQ(c.lower_bound, LowerBoundStatus::kHolds);
}

TEST(Chain, HoldsOnRandomInputs) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 80; ++it) {
    Config cfg = testing::random_free_config(rng, 1 + rng() % 15, 1 + rng() % 15,
                                             2 + it % 3, 3 + it % 6);
    auto e = energy(distance_classes(cfg));
    EXPECT_TRUE(check_chain(e, cfg.n(), cfg.m()).ok());
  }
}

TEST(Energy, MatrixInput) {
  auto e = energy(distance_classes(gen_orthogonal_extremal(3, 3)));
  EXPECT_EQ(e.x, 5u);
  // Sizes of i + j classes: 1, 2, 3, 2, 1.
  EXPECT_EQ(e.q, 0u + 2 + 6 + 2 + 0);
  EXPECT_EQ(e.q0, 0u);
  auto o = oracle_quadruples(gen_orthogonal_extremal(3, 3));
  EXPECT_EQ(o.q, e.q);
}

}  // namespace
}  // namespace ddlab
