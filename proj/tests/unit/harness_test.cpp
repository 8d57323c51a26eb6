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

#include <sstream>

#include "ddlab/error.hpp"
#include "ddlab/oracle.hpp"
#include "ddlab/sweep.hpp"
#include "test_util.hpp"

namespace ddlab {
namespace {

using testing::make;

TEST(OracleQuadruples, Examples) {
  EXPECT_EQ(oracle_quadruples(make(2, 1, {0, 2}, {{1, 1}})),
            (QuadrupleCounts{2, 2, 0}));
  EXPECT_EQ(oracle_quadruples(make(2, 1, {0, 1, 2, 3}, {{0, 1}, {20, 2}})),
            (QuadrupleCounts{0, 0, 0}));
  EXPECT_EQ(oracle_quadruples(make(2, 1, {0, 2}, {{0, 1}, {1, 2}})),
            (QuadrupleCounts{6, 2, 4}));
}

TEST(OracleQuadruples, Guard) {
  std::vector<Rational> p1;
  for (std::int64_t i = 0; i < 2001; ++i) p1.emplace_back(i);
  Config big(2, 1, p1, {testing::pt({0, 1})});
  try {
    oracle_quadruples(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(OracleIncidences, Examples) {
  Config cfg = make(2, 1, {0, 2}, {{0, 1}, {1, 2}});
  EXPECT_EQ(oracle_incidences(GridPi(cfg), build_gamma(cfg)), 4u);
  EXPECT_EQ(oracle_incidences(GridPi(cfg), GammaSet{}), 0u);
}

TEST(Generator, Names) {
  EXPECT_EQ(parse_generator("cylinder"), Generator::kCylinder);
  EXPECT_EQ(parse_generator("orthogonal"), Generator::kOrthogonal);
  EXPECT_EQ(parse_generator("random"), Generator::kRandom);
  EXPECT_FALSE(parse_generator("spiral").has_value());
}

TEST(Sweep, SingleRandomRow) {
  SweepSpec spec;
  spec.n_list = {8};
  spec.m_list = {8};
  spec.seeds = {1};
  auto rows = compute_sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  const SweepRow& r = rows[0];
  EXPECT_TRUE(r.error.empty()) << r.error;
  EXPECT_TRUE(r.chain_ok);
  EXPECT_TRUE(r.q0_ok);
  EXPECT_TRUE(r.bijection_ok);
  ASSERT_TRUE(r.incidences.has_value());
  EXPECT_EQ(*r.incidences, r.q1);
}

TEST(Sweep, ExtremalCounts) {
  SweepSpec spec;
  spec.n_list = {16};
  spec.m_list = {16};
  spec.seeds = {0};
  spec.generator = Generator::kCylinder;
  auto cyl = compute_sweep(spec);
  EXPECT_EQ(cyl.at(0).x, 16u);
  EXPECT_FALSE(cyl.at(0).incidences.has_value());
  spec.generator = Generator::kOrthogonal;
  auto orth = compute_sweep(spec);
  EXPECT_EQ(orth.at(0).x, 31u);
  EXPECT_TRUE(orth.at(0).chain_ok);
}

TEST(Sweep, OrderedAndDeterministic) {
  SweepSpec spec;
  spec.n_list = {6, 3};
  spec.m_list = {5, 9};
  spec.k = 3;
  spec.seeds = {2, 1};
  spec.c = 2;
  std::ostringstream a, b;
  run_sweep(spec, a);
  spec.workers = 3;
  run_sweep(spec, b);
  EXPECT_EQ(a.str(), b.str());

  auto rows = compute_sweep(spec);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows.front().n, 3u);
  EXPECT_EQ(rows.front().m, 5u);
  EXPECT_EQ(rows.front().seed, 1u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.chain_ok && r.q0_ok && r.bijection_ok) << r.error;
  }
  EXPECT_EQ(a.str().substr(0, kSweepColumns.size()), kSweepColumns);
}

TEST(Sweep, ErrorRowDoesNotStopSweep) {
  SweepSpec spec;
  spec.n_list = {0, 2};
  spec.m_list = {2};
  spec.seeds = {1};
  auto rows = compute_sweep(spec);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NE(rows[0].error.find("InvalidCount"), std::string::npos);
  EXPECT_TRUE(rows[1].error.empty());
}

}  // namespace
}  // namespace ddlab
