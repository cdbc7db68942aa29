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

// Cuboid geometry and the combinatorial indices used by every solver:
// bipartitions of the coordinates into trigonometric and hyperbolic slots,
// sign patterns selecting sin/cos and sinh/cosh, and lattice box indices.
//
// Coordinates are 0-based throughout the code and in serialized output.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace steklov {

inline constexpr int kMaxDim = 32;

/// Bit i set means coordinate i belongs to the set.
using CoordMask = std::uint32_t;

/// Axis-aligned box (-a_1, a_1) x ... x (-a_d, a_d), d >= 2.
class Cuboid {
 public:
  explicit Cuboid(std::vector<double> half_lengths);

  int dim() const noexcept { return static_cast<int>(a_.size()); }
  double half_length(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  std::span<const double> half_lengths() const noexcept { return a_; }

  /// True when max a_i / min a_i - 1 <= rel_tol.
  bool is_cube(double rel_tol) const noexcept;
  double aspect_deviation() const noexcept;
  Cuboid scaled(double t) const;

 private:
  std::vector<double> a_;
};

/// Ordered split of {0..d-1} into trigonometric (tau1) and hyperbolic (tau2)
/// coordinates. Both index lists are strictly increasing.
struct Bipartition {
  std::vector<int> tau1;
  std::vector<int> tau2;

  int p() const noexcept { return static_cast<int>(tau1.size()); }
  int q() const noexcept { return static_cast<int>(tau2.size()); }
  int dim() const noexcept { return p() + q(); }
  CoordMask trig_mask() const noexcept;

  /// Builds the bipartition whose trigonometric set is `trig`; validates
  /// 1 <= p <= d-1.
  static Bipartition from_mask(int d, CoordMask trig);

  auto operator<=>(const Bipartition&) const = default;
};

/// ell(i) in {0,1}: 0 selects sin / sinh, 1 selects cos / cosh.
struct SignPattern {
  CoordMask bits = 0;

  int ell(int coord) const noexcept { return static_cast<int>((bits >> coord) & 1u); }
  void set(int coord, int value) noexcept {
    if (value) bits |= (CoordMask{1} << coord);
    else bits &= ~(CoordMask{1} << coord);
  }
  /// Pattern restricted to the coordinates in `mask`.
  SignPattern restricted(CoordMask mask) const noexcept { return {bits & mask}; }

  auto operator<=>(const SignPattern&) const = default;
};

/// Fine-grid box index, one entry per trigonometric coordinate (in tau1
/// order). Entry m selects the half-period (m pi/(2a), (m+1) pi/(2a)]; its
/// parity is ell on that coordinate.
using BoxIndex = std::vector<std::int64_t>;

/// Vol_{d-codim} of the union of codimension-`codim` facets; codim 0 is the
/// volume of the cuboid itself.
double facet_volume(const Cuboid& c, int codim);

/// All C(d, p) bipartitions with |tau1| = p, lexicographic in tau1.
std::vector<Bipartition> bipartitions(int d, int p);

/// Default enumeration margin: max_i pi/(2 a_i) + 1.
double default_margin(const Cuboid& c);

/// Strictly positive boxes whose lower corner lies inside the ball
/// sum_i (m_i pi / (2 a_i))^2 < q (sigma + margin)^2. Any box holding an exact
/// or approximate eigenvalue below sigma is included.
std::vector<BoxIndex> boxes_within(const Cuboid& c, const Bipartition& b, double sigma,
                                   double margin);

/// Visits every box m with m_i >= min_entry and sum_i (m_i w_i)^2 < radius_sq,
/// in lexicographic order. Rows are pruned by solving the remaining radial
/// budget for the last coordinate.
template <class Visitor>
void for_each_box_in_ball(std::span<const double> weights, double radius_sq,
                          std::int64_t min_entry, Visitor&& visit);

/// Number of coordinates in the mask.
int mask_size(CoordMask m) noexcept;

}  // namespace steklov

#include "steklov/detail/box_enumeration.hpp"
