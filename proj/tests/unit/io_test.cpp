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

#include <random>
#include <sstream>

#include "ddlab/error.hpp"
#include "ddlab/io.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace ddlab {
namespace {

TEST(ConfigFile, Parses) {
  std::istringstream in("k=3,c=2\r\nP1,1/2\nP1,-3\n\nP2,0,1,2\nP2,4/6,-1,0\n");
  Config cfg = read_config(in);
  EXPECT_EQ(cfg.k(), 3);
  EXPECT_EQ(cfg.c(), 2);
  EXPECT_EQ(cfg.p1(), (std::vector<Rational>{-3, Rational::parse("1/2")}));
  ASSERT_EQ(cfg.m(), 2u);
  EXPECT_EQ(cfg.p2()[1][0], Rational::parse("2/3"));
}

TEST(ConfigFile, WritesCanonicalForm) {
  std::istringstream in("k=2,c=1\nP1,4/2\nP1,0\nP2,-2/4,3\n");
  std::ostringstream out;
  write_config(out, read_config(in));
  EXPECT_EQ(out.str(), "k=2,c=1\nP1,0\nP1,2\nP2,-1/2,3\n");
}

TEST(ConfigFile, RoundTripsRandomConfigs) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 50; ++it) {
    Config cfg = testing::random_valid_config(rng, 8, 8, 2 + it % 4);
    std::ostringstream out;
    write_config(out, cfg);
    std::istringstream in(out.str());
    ASSERT_EQ(read_config(in), cfg);
  }
}

TEST(ConfigFile, Rejects) {
  for (const char* bad : {"", "k=2\n", "k=1,c=1\n", "k=2,c=0\n", "c=1,k=2\n",
                          "k=2,c=1\nP1,1,2\n", "k=2,c=1\nP2,1\n",
                          "k=2,c=1\nP1,x\n", "k=2,c=1\nP3,1\n",
                          "k=2,c=1\nP1,1\nP1,1\n", "k=2,c=1\nP2,0,1\nP1,0\n",
                          "k=2,c=1\nP1,1/0\n"}) {
    std::istringstream in(bad);
    try {
      read_config(in);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(MatrixFile, RoundTripAndDispatch) {
  SqDistMatrix mat = gen_orthogonal_extremal(2, 3);
  std::ostringstream out;
  write_matrix(out, mat);
  EXPECT_EQ(out.str(), "n=2,m=3\n2,3,4\n3,4,5\n");
  std::istringstream in(out.str());
  Input input = read_input(in);
  ASSERT_TRUE(std::holds_alternative<SqDistMatrix>(input));
  EXPECT_EQ(std::get<SqDistMatrix>(input).entries, mat.entries);

  std::istringstream cfg_in("k=2,c=1\nP1,0\nP2,0,1\n");
  EXPECT_TRUE(std::holds_alternative<Config>(read_input(cfg_in)));
}

TEST(MatrixFile, Rejects) {
  for (const char* bad : {"n=2,m=2\n1,2\n", "n=1,m=2\n1\n", "n=1,m=1\n-1\n",
                          "x=1\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_input(in), Error) << bad;
  }
}

TEST(GammaCsv, Format) {
  Config cfg = testing::make(2, 1, {0, 2}, {{0, 1}, {1, 2}});
  std::ostringstream out;
  write_gamma_csv(out, build_gamma(cfg));
  EXPECT_EQ(out.str(), "0,1,0,-1,-3\n1,0,-1,0,3\n");
}

TEST(Json, EnergyReportShape) {
  Config cfg = testing::make(2, 1, {0, 2}, {{0, 1}, {1, 2}});
  auto j = nlohmann::json::parse(to_json(energy(distance_classes(cfg))));
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["x"], 2);
  EXPECT_EQ(j["Q"], 6);
  EXPECT_EQ(j["Q0"], 2);
  EXPECT_EQ(j["Q1"], 4);
  EXPECT_EQ(j["histogram"], nlohmann::json::parse("[[1,1],[3,1]]"));
}

TEST(Json, BoundAndIncidenceShape) {
  auto b = nlohmann::json::parse(to_json(theorem1_bound(100, 5)));
  EXPECT_EQ(b["regime"], "R1");
  EXPECT_EQ(b["min"], 25.0);
  EXPECT_EQ(b["terms"]["m2"], 25.0);
  EXPECT_TRUE(b["terms"].contains("n23m23"));
  EXPECT_TRUE(b["terms"].contains("logterm"));
  EXPECT_TRUE(b["terms"].contains("n2"));
  EXPECT_TRUE(b.contains("piecewise"));

  Config cfg = testing::make(2, 1, {0, 2}, {{0, 1}, {1, 2}});
  auto i = nlohmann::json::parse(to_json(incidences(GridPi(cfg), build_gamma(cfg))));
  EXPECT_EQ(i["total"], 4);
  EXPECT_EQ(i["per_sign"]["pos"], 2);
  EXPECT_EQ(i["per_sign"]["neg"], 2);
  EXPECT_EQ(i["per_curve"], nlohmann::json::parse("[2,2]"));
}

}  // namespace
}  // namespace ddlab
