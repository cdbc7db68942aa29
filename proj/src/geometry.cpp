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

#include "steklov/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

Cuboid::Cuboid(std::vector<double> half_lengths) : a_(std::move(half_lengths)) {
  if (a_.size() < 2) throw ArgumentError("cuboid dimension must be at least 2");
  if (a_.size() > static_cast<std::size_t>(kMaxDim))
    throw ArgumentError("cuboid dimension exceeds " + std::to_string(kMaxDim));
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!std::isfinite(a_[i]) || !(a_[i] > 0.0))
      throw ArgumentError("half length a[" + std::to_string(i) + "] must be positive and finite");
  }
}

double Cuboid::aspect_deviation() const noexcept {
  const auto [lo, hi] = std::minmax_element(a_.begin(), a_.end());
  return *hi / *lo - 1.0;
}

bool Cuboid::is_cube(double rel_tol) const noexcept { return aspect_deviation() <= rel_tol; }

Cuboid Cuboid::scaled(double t) const {
  std::vector<double> a = a_;
  for (double& x : a) x *= t;
  return Cuboid(std::move(a));
}

int mask_size(CoordMask m) noexcept { return std::popcount(m); }

CoordMask Bipartition::trig_mask() const noexcept {
  CoordMask m = 0;
  for (int i : tau1) m |= CoordMask{1} << i;
  return m;
}

Bipartition Bipartition::from_mask(int d, CoordMask trig) {
  if (d < 2 || d > kMaxDim) throw ArgumentError("dimension out of range");
  if (d < kMaxDim && (trig >> d) != 0) throw ArgumentError("trigonometric mask has bits beyond dimension");
  Bipartition b;
  for (int i = 0; i < d; ++i) ((trig >> i) & 1u ? b.tau1 : b.tau2).push_back(i);
  if (b.p() < 1 || b.q() < 1) throw ArgumentError("bipartition needs 1 <= p <= d-1");
  return b;
}

double facet_volume(const Cuboid& c, int codim) {
  const int d = c.dim();
  if (codim < 0 || codim > d) throw ArgumentError("codim must lie in 0..d");
  // Elementary symmetric polynomial of degree d-codim in the side lengths 2a_i.
  const int k = d - codim;
  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < d; ++i) {
    const double side = 2.0 * c.half_length(i);
    for (int j = std::min(i + 1, k); j >= 1; --j) e[j] += e[j - 1] * side;
  }
  return std::ldexp(e[static_cast<std::size_t>(k)], codim);
}

std::vector<Bipartition> bipartitions(int d, int p) {
  if (d < 2 || d > kMaxDim) throw ArgumentError("dimension out of range");
  if (p < 1 || p > d - 1) throw ArgumentError("p must satisfy 1 <= p <= d-1");
  std::vector<Bipartition> out;
  std::vector<int> comb(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) comb[i] = i;
  while (true) {
    CoordMask m = 0;
    for (int i : comb) m |= CoordMask{1} << i;
    out.push_back(Bipartition::from_mask(d, m));
    int i = p - 1;
    while (i >= 0 && comb[i] == d - p + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < p; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

double default_margin(const Cuboid& c) {
  const auto a = c.half_lengths();
  return std::numbers::pi / (2.0 * *std::min_element(a.begin(), a.end())) + 1.0;
}

std::vector<BoxIndex> boxes_within(const Cuboid& c, const Bipartition& b, double sigma,
                                   double margin) {
  if (!(sigma > 0.0)) throw ArgumentError("sigma must be positive");
  if (!(margin >= 0.0)) throw ArgumentError("margin must be nonnegative");
  std::vector<double> w;
  for (int i : b.tau1) w.push_back(std::numbers::pi / (2.0 * c.half_length(i)));
  const double r = sigma + margin;
  std::vector<BoxIndex> out;
  for_each_box_in_ball(w, b.q() * r * r, 1, [&](const BoxIndex& m) { out.push_back(m); });
  return out;
}

}  // namespace steklov
