// Copyright 2026 The kassoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kassoc/g_test.hpp"

#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "kassoc/scenarios.hpp"

namespace kassoc {
namespace {

Dataset two_by_two(int a, int b, int c, int d) {
  Dataset out{{"A", "B"}, {2, 2}, Dataset::Values(a + b + c + d, 2)};
  int r = 0;
  auto put = [&](int count, int x, int y) {
    for (int i = 0; i < count; ++i, ++r) {
      out.values(r, 0) = x;
      out.values(r, 1) = y;
    }
  };
  put(a, 0, 0);
  put(b, 0, 1);
  put(c, 1, 0);
  put(d, 1, 1);
  return out;
}

TEST(ChiSquared, KnownQuantiles) {
  EXPECT_NEAR(chi_squared_critical_value(1, 0.05), 3.841458820694124, 1e-9);
  EXPECT_NEAR(chi_squared_critical_value(2, 0.01), 9.21034037197618, 1e-9);
  EXPECT_NEAR(chi_squared_critical_value(4, 0.01), 13.276704135987622, 1e-9);
  EXPECT_EQ(chi_squared_critical_value(0, 0.01), 0.0);
}

TEST(GTest, StatisticOfAKnownTable) {
  const GTestResult r = g_test(two_by_two(10, 20, 30, 40), 0, 1, {}, {0.05, false});
  EXPECT_NEAR(r.statistic, 0.8043486460964835, 1e-9);
  EXPECT_EQ(r.df, 1);
  EXPECT_TRUE(r.independent);
}

TEST(GTest, BalancedTableHasZeroStatistic) {
  const GTestResult r = g_test(two_by_two(25, 25, 25, 25), 0, 1, {}, {});
  EXPECT_NEAR(r.statistic, 0.0, 1e-12);
  EXPECT_TRUE(r.independent);
}

TEST(GTest, StrongAssociationIsRejected) {
  const GTestResult r = g_test(two_by_two(90, 10, 10, 90), 0, 1, {}, {});
  EXPECT_GT(r.statistic, r.critical_value);
  EXPECT_FALSE(r.independent);
}

TEST(GTest, DegreesOfFreedomCountAllStrataByDefault) {
  const Scenario s = transitivity_failure();  // Y has four states
  const Dataset d = sample(*s.joint(), 2000, 3);
  EXPECT_EQ(g_test(d, 0, 2, NodeSet{1}, {}).df, 4);
  EXPECT_EQ(g_test(d, 0, 1, {}, {}).df, 3);
  EXPECT_EQ(g_test(d, NodeSet{0}, NodeSet{1, 2}, {}, {}).df, 7);

  // Every stratum of a deterministic xor still observes both values of X and Y.
  const Dataset x = sample(*noisy_xor(Rational(0)).joint(), 2000, 4);
  EXPECT_EQ(g_test(x, 0, 1, NodeSet{2}, {}).df, 2);
  EXPECT_EQ(g_test(x, 0, 1, NodeSet{2}, {0.01, true}).df, 2);
}

TEST(GTest, DropEmptyStrataReducesDf) {
  Dataset d{{"A", "B", "S"}, {2, 2, 3}, Dataset::Values(4, 3)};
  d.values << 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0;  // only S = 0 observed
  EXPECT_EQ(g_test(d, 0, 1, NodeSet{2}, {0.01, false}).df, 3);
  EXPECT_EQ(g_test(d, 0, 1, NodeSet{2}, {0.01, true}).df, 1);
}

TEST(GTest, RejectsBadArguments) {
  const Dataset d = two_by_two(1, 1, 1, 1);
  EXPECT_THROW(g_test(d, 0, 0, {}, {}), std::invalid_argument);
  EXPECT_THROW(g_test(d, 0, 1, {}, {1.5, false}), std::invalid_argument);
  EXPECT_THROW(g_test(d, 0, 5, {}, {}), std::out_of_range);
}

TEST(GTest, ExampleOneSamplesAtModerateSize) {
  const DiscreteJoint joint = *noisy_xor().joint();
  int accepted = 0, rejected = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Dataset d = sample(joint, 10000, seed);
    accepted += g_test(d, 0, 1, {}, {}).independent;
    rejected += !g_test(d, 0, 2, NodeSet{1}, {}).independent;
  }
  EXPECT_GE(accepted, 9);
  EXPECT_EQ(rejected, 10);
}

}  // namespace
}  // namespace kassoc
