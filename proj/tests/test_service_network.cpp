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

#include "railcap/service_network.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "railcap/errors.hpp"
#include "test_support.hpp"

namespace railcap {
namespace {

Train one_leg_train(std::string id, std::string from, std::string to,
                    double minutes, std::int64_t seats) {
  Train t;
  t.id = std::move(id);
  t.route.push_back({from, to, std::nullopt});
  t.travel_times.push_back(minutes);
  t.seats = seats;
  return t;
}

TEST(BuildServiceNetwork, AggregatesSeatsAndAveragesCost) {
  NetworkInputs inputs;
  inputs.stations = {{"a", ""}, {"b", ""}};
  inputs.links = {{"a", "b", std::nullopt}};
  inputs.trains = {one_leg_train("t1", "a", "b", 10.0, 200),
                   one_leg_train("t2", "a", "b", 14.0, 200)};
  const auto network = build_service_network(inputs);
  ASSERT_EQ(network.arcs().size(), 1u);
  EXPECT_EQ(network.arcs()[0].seat_capacity, 400);
  EXPECT_DOUBLE_EQ(network.arcs()[0].cost_minutes, 12.0);
  EXPECT_EQ(network.arcs()[0].serving_trains,
            (std::vector<std::string>{"t1", "t2"}));
}

TEST(BuildServiceNetwork, SingleNormalTrainOffersItsSeats) {
  NetworkInputs inputs;
  inputs.stations = {{"a", ""}, {"b", ""}};
  inputs.links = {{"a", "b", std::nullopt}};
  inputs.trains = {one_leg_train("t1", "a", "b", 10.0, kNormalSeatsPerTrain)};
  const auto network = build_service_network(inputs);
  EXPECT_EQ(network.arcs()[0].seat_capacity, 1000);
}

TEST(BuildServiceNetwork, UntraversedLinksAreOmitted) {
  NetworkInputs inputs;
  inputs.stations = {{"a", ""}, {"b", ""}, {"c", ""}};
  inputs.links = {{"a", "b", std::nullopt}, {"b", "c", std::nullopt}};
  inputs.trains = {one_leg_train("t1", "a", "b", 10.0, 100)};
  const auto network = build_service_network(inputs);
  EXPECT_EQ(network.arcs().size(), 1u);
  EXPECT_EQ(network.arc_index(network.station_index("b"),
                              network.station_index("c")),
            -1);
}

TEST(BuildServiceNetwork, EmptyTimetableThrows) {
  NetworkInputs inputs;
  inputs.stations = {{"a", ""}};
  try {
    build_service_network(inputs);
    FAIL() << "expected EmptyTimetable";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyTimetable);
  }
}

TEST(BuildServiceNetwork, DeterministicUnderInputPermutation) {
  NetworkInputs inputs;
  inputs.stations = {{"b", ""}, {"a", ""}, {"c", ""}};
  inputs.links = {{"b", "c", std::nullopt}, {"a", "b", std::nullopt}};
  inputs.trains = {one_leg_train("t2", "b", "c", 9.0, 150),
                   one_leg_train("t1", "a", "b", 7.0, 100)};
  inputs.od_pairs = {{"a", "c", 80.0}, {"a", "b", 30.0}};

  auto shuffled = inputs;
  std::mt19937_64 rng(7);
  std::shuffle(shuffled.stations.begin(), shuffled.stations.end(), rng);
  std::shuffle(shuffled.trains.begin(), shuffled.trains.end(), rng);
  std::shuffle(shuffled.od_pairs.begin(), shuffled.od_pairs.end(), rng);

  EXPECT_TRUE(build_service_network(inputs) == build_service_network(shuffled));
}

TEST(BuildServiceNetwork, SeatCapacityIsExactIntegerSum) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> seats(0, 700);
  NetworkInputs inputs;
  inputs.stations = {{"a", ""}, {"b", ""}};
  inputs.links = {{"a", "b", std::nullopt}};
  std::int64_t total = 0;
  for (int i = 0; i < 37; ++i) {
    const int s = seats(rng);
    total += s;
    inputs.trains.push_back(
        one_leg_train("t" + std::to_string(i), "a", "b", 5.0, s));
  }
  EXPECT_EQ(build_service_network(inputs).arcs()[0].seat_capacity, total);
}

TEST(ApplyCapacityRegime, PresetsAndScaling) {
  std::vector<Train> trains = {one_leg_train("t1", "a", "b", 10.0, 400)};

  EXPECT_EQ(apply_capacity_regime(trains, CapacityRegime::normal())[0].seats,
            1000);
  EXPECT_EQ(apply_capacity_regime(trains, CapacityRegime::covid())[0].seats, 200);
  EXPECT_EQ(apply_capacity_regime(trains, CapacityRegime::scaled(0.25))[0].seats,
            100);
  EXPECT_EQ(
      apply_capacity_regime(trains, CapacityRegime::fixed_seats(64))[0].seats,
      64);
  EXPECT_EQ(trains[0].seats, 400) << "input must stay untouched";
}

TEST(ApplyCapacityRegime, NegativeCustomCapacityThrows) {
  std::vector<Train> trains = {one_leg_train("t1", "a", "b", 10.0, 400)};
  try {
    apply_capacity_regime(trains, CapacityRegime::scaled(-0.5));
    FAIL() << "expected NegativeCapacity";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNegativeCapacity);
  }
  try {
    apply_capacity_regime(trains, CapacityRegime::fixed_seats(-1));
    FAIL() << "expected NegativeCapacity";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNegativeCapacity);
  }
}

TEST(ApplyCapacityRegime, UniformScaleScalesEveryArcCapacity) {
  NetworkInputs inputs;
  inputs.stations = {{"a", ""}, {"b", ""}, {"c", ""}};
  inputs.links = {{"a", "b", std::nullopt}, {"b", "c", std::nullopt}};
  inputs.trains = {one_leg_train("t1", "a", "b", 10.0, 400),
                   one_leg_train("t2", "a", "b", 12.0, 400),
                   one_leg_train("t3", "b", "c", 9.0, 400)};
  const auto before = build_service_network(inputs);
  auto scaled = inputs;
  scaled.trains = apply_capacity_regime(inputs.trains, CapacityRegime::scaled(0.5));
  const auto after = build_service_network(scaled);
  ASSERT_EQ(before.arcs().size(), after.arcs().size());
  for (std::size_t a = 0; a < before.arcs().size(); ++a) {
    EXPECT_EQ(after.arcs()[a].seat_capacity, before.arcs()[a].seat_capacity / 2);
    EXPECT_DOUBLE_EQ(after.arcs()[a].cost_minutes, before.arcs()[a].cost_minutes);
  }
}

TEST(FilterDemand, StrictThreshold) {
  const std::vector<OdPair> ods = {
      {"a", "b", 50.0}, {"a", "c", 100.0}, {"b", "c", 101.0}};
  const auto kept = filter_demand(ods, 100.0);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].origin, "b");
  EXPECT_DOUBLE_EQ(kept[0].demand, 101.0);
}

TEST(FilterDemand, ZeroThresholdKeepsAllPositive) {
  const std::vector<OdPair> ods = {{"a", "b", 1.0}, {"a", "c", 2.0}};
  EXPECT_EQ(filter_demand(ods, 0.0).size(), 2u);
  EXPECT_TRUE(filter_demand({}, 0.0).empty());
}

TEST(ParseRegime, RoundTripAndErrors) {
  EXPECT_EQ(parse_regime("normal"), CapacityRegime::normal());
  EXPECT_EQ(parse_regime("covid"), CapacityRegime::covid());
  EXPECT_EQ(parse_regime("scale=0.25"), CapacityRegime::scaled(0.25));
  EXPECT_EQ(parse_regime("seats=150"), CapacityRegime::fixed_seats(150));
  EXPECT_THROW(parse_regime("bogus"), Error);
  EXPECT_THROW(parse_regime("scale=abc"), Error);
}

}  // namespace
}  // namespace railcap
