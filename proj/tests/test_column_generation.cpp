// Copyright 2026 The Railcap Authors
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

#include "railcap/column_generation.hpp"

#include <gtest/gtest.h>

#include "railcap/oracle.hpp"
#include "test_support.hpp"

namespace railcap {
namespace {

using testing::diamond_network;
using testing::expect_feasible;
using testing::network_from_arcs;

TEST(ColumnGeneration, TerminatesAfterOneRoundWhenEverythingFits) {
  const auto network = network_from_arcs(
      {{"a", "b", 10.0, 1000}, {"b", "c", 12.0, 1000}},
      {{"a", "c", 100.0}, {"b", "c", 50.0}});
  const auto result = solve_with_column_generation(network);
  EXPECT_EQ(result.trace.rounds.size(), 1u);
  EXPECT_FALSE(result.trace.round_budget_exhausted);
  double share_sum = 0.0;
  for (const auto& shares : result.solution.shares) {
    for (double f : shares) share_sum += f;
  }
  EXPECT_NEAR(share_sum, 2.0, 1e-9);  // every OD pair fully served
  expect_feasible(result.problem, result.solution, "fits");
}

TEST(ColumnGeneration, DiamondDetourCarriesTheOverflow) {
  // Demand 200 against two 100-seat routes: round 1 saturates the bottom,
  // round 2 prices in the top detour, and everything gets transported.
  // The full-enumeration reference solve agrees.
  const auto network = diamond_network(100, 100, {{"a", "d", 200.0}});
  const auto result = solve_with_column_generation(network);
  EXPECT_GE(result.trace.rounds.size(), 2u);
  EXPECT_NEAR(result.trace.rounds[0].objective, 0.5 * 200.0 / 20.0, 1e-9);
  EXPECT_NEAR(result.solution.transported(result.problem), 200.0, 1e-9);

  const auto reference = oracle_solve(network);
  EXPECT_NEAR(result.solution.objective, reference.solution.objective, 1e-9);
  expect_feasible(result.problem, result.solution, "diamond");
}

TEST(ColumnGeneration, ZeroDemandEverywhere) {
  const auto network = network_from_arcs({{"a", "b", 10.0, 100}},
                                         {{"a", "b", 0.0}});
  const auto result = solve_with_column_generation(network);
  EXPECT_EQ(result.solution.objective, 0.0);
  for (const auto& shares : result.solution.shares) {
    for (double f : shares) EXPECT_EQ(f, 0.0);
  }
}

TEST(ColumnGeneration, ObjectiveIsNonDecreasingAcrossRounds) {
  std::mt19937_64 rng(515);
  for (int round = 0; round < 25; ++round) {
    const auto inputs = testing::random_instance(rng);
    const auto network = build_service_network(inputs);
    const auto result = solve_with_column_generation(network, CgConfig::exhaustive());
    for (std::size_t i = 0; i + 1 < result.trace.rounds.size(); ++i) {
      EXPECT_GE(result.trace.rounds[i + 1].objective,
                result.trace.rounds[i].objective -
                    1e-9 * std::max(1.0, result.trace.rounds[i].objective))
          << "instance " << round << " round " << i;
    }
    expect_feasible(result.problem, result.solution,
                    "instance " + std::to_string(round));
  }
}

TEST(ColumnGeneration, RoundBudgetIsAWarningNotAnError) {
  const auto network = diamond_network(100, 100, {{"a", "d", 200.0}});
  CgConfig config;
  config.max_rounds = 1;
  const auto result = solve_with_column_generation(network, config);
  EXPECT_EQ(result.trace.rounds.size(), 1u);
  EXPECT_TRUE(result.trace.round_budget_exhausted);
  // The solution is still a certified optimum over the restricted columns.
  expect_feasible(result.problem, result.solution, "budget");
}

TEST(ColumnGeneration, UnroutableDemandStaysUnserved) {
  const auto network = network_from_arcs(
      {{"a", "b", 10.0, 1000}, {"c", "d", 10.0, 1000}},
      {{"a", "b", 100.0}, {"a", "d", 70.0}});
  const auto result = solve_with_column_generation(network);
  ASSERT_EQ(result.trace.unroutable.size(), 1u);
  // od pairs sort (a,b) < (a,d): index 1 is the unroutable one
  EXPECT_EQ(result.trace.unroutable[0], 1);
  EXPECT_NEAR(result.solution.transported(result.problem), 100.0, 1e-9);
}

TEST(ColumnGeneration, ObjectiveIsConcaveInUniformDemandScale) {
  // z(alpha) is an LP value as a function of the share-constraint
  // right-hand sides, hence concave and non-decreasing.
  const auto base = diamond_network(120, 60, {{"a", "d", 400.0}});
  const std::vector<double> alphas = {0.05, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> z;
  for (double alpha : alphas) {
    std::vector<OdPair> scaled = base.od_pairs();
    for (auto& od : scaled) od.demand *= alpha;
    ServiceNetwork network(base.stations(), base.arcs(), scaled);
    const auto result =
        solve_with_column_generation(network, CgConfig::exhaustive());
    z.push_back(result.solution.objective);
  }
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    EXPECT_GE(z[i + 1], z[i] - 1e-9) << "monotonicity at " << alphas[i + 1];
  }
  for (std::size_t i = 1; i + 1 < z.size(); ++i) {
    const double t = (alphas[i] - alphas[i - 1]) / (alphas[i + 1] - alphas[i - 1]);
    const double chord = (1.0 - t) * z[i - 1] + t * z[i + 1];
    EXPECT_GE(z[i], chord - 1e-9) << "concavity at " << alphas[i];
  }
}

}  // namespace
}  // namespace railcap
