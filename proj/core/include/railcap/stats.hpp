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

#ifndef RAILCAP_STATS_HPP_
#define RAILCAP_STATS_HPP_

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace railcap::stats {

inline double mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// Lower-candidate quantile on a sorted span: the element at index
// floor((n - 1) * q). For q = 0.5 and even n this is the lower of the two
// middle values, which keeps report files bit-stable.
inline double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) return 0.0;
  const auto idx = static_cast<std::size_t>(
      std::floor((static_cast<double>(sorted.size()) - 1.0) * q));
  return sorted[idx];
}

inline double median_sorted(std::span<const double> sorted) {
  return quantile_sorted(sorted, 0.5);
}

inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return median_sorted(values);
}

inline double population_stddev(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const double m = mean(values);
  double acc = 0.0;
  for (double v : values) acc += (v - m) * (v - m);
  return std::sqrt(acc / static_cast<double>(values.size()));
}

/// Fraction of values satisfying the predicate; 0 for an empty span.
template <typename Pred>
double fraction(std::span<const double> values, Pred pred) {
  if (values.empty()) return 0.0;
  std::size_t hits = 0;
  for (double v : values) {
    if (pred(v)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(values.size());
}

}  // namespace railcap::stats

#endif  // RAILCAP_STATS_HPP_
