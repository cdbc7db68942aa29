// Copyright 2026 The Steklov Cuboid Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace steklov {

namespace detail {

template <class Visitor>
void enumerate_ball_level(std::span<const double> w, double budget, std::int64_t min_entry,
                          std::size_t level, std::vector<std::int64_t>& box, Visitor& visit) {
  const double wi = w[level];
  const double lo_sq = static_cast<double>(min_entry) * wi * static_cast<double>(min_entry) * wi;
  if (!(lo_sq < budget)) return;
  // Largest entry m with (m w)^2 < budget; the loop below re-checks the
  // strict inequality so rounding in the sqrt cannot admit an extra box.
  const auto top = static_cast<std::int64_t>(std::floor(std::sqrt(budget) / wi)) + 1;
  for (std::int64_t m = min_entry; m <= top; ++m) {
    const double used = static_cast<double>(m) * wi * static_cast<double>(m) * wi;
    if (!(used < budget)) break;
    box[level] = m;
    if (level + 1 == w.size()) {
      visit(static_cast<const std::vector<std::int64_t>&>(box));
    } else {
      enumerate_ball_level(w, budget - used, min_entry, level + 1, box, visit);
    }
  }
}

}  // namespace detail

template <class Visitor>
void for_each_box_in_ball(std::span<const double> weights, double radius_sq,
                          std::int64_t min_entry, Visitor&& visit) {
  if (weights.empty()) return;
  std::vector<std::int64_t> box(weights.size(), min_entry);
  detail::enumerate_ball_level(weights, radius_sq, min_entry, 0, box, visit);
}

}  // namespace steklov
