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

// Closed-form approximate eigenvalues and the counting function built from
// them. Each strictly positive box carries one quasi-eigenvalue standing for a
// cluster of 2^q true eigenvalues.

#include <cstdint>
#include <vector>

#include "steklov/geometry.hpp"

namespace steklov {

struct QuasiEigenvalue {
  double sigma_tilde = 0.0;
  std::vector<double> alpha_tilde;
  BoxIndex box;
  Bipartition bipartition;
  std::int64_t multiplicity = 0;
};

std::vector<double> alpha_tilde(const Cuboid& c, const Bipartition& b, const BoxIndex& box);
double sigma_tilde(const Cuboid& c, const Bipartition& b, const BoxIndex& box);

enum class CountMode {
  filtered,  // boxes_within followed by the sigma_tilde filter
  pruned     // radial budget on all but the last coordinate, bisection on the last
};

/// sum over bipartitions with |tau1| = p of 2^q * #{boxes : sigma_tilde < sigma}.
std::int64_t count_p(const Cuboid& c, int p, double sigma, CountMode mode = CountMode::pruned);

/// 1 (for sigma_0 = 0) + sum_p count_p.
std::int64_t count_total(const Cuboid& c, double sigma, CountMode mode = CountMode::pruned);

/// All quasi-eigenvalues below sigma_max, sorted by (sigma_tilde, tau, box).
std::vector<QuasiEigenvalue> quasi_spectrum(const Cuboid& c, double sigma_max);

/// Sorted quasi-eigenvalues below a ceiling with prefix multiplicities, for
/// evaluating count_total on many grid points at once.
class QuasiCensus {
 public:
  QuasiCensus(const Cuboid& c, double sigma_ceiling);

  /// count_total(sigma) for 0 < sigma <= ceiling.
  std::int64_t count(double sigma) const;
  double ceiling() const noexcept { return ceiling_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  double ceiling_;
  std::vector<double> values_;
  std::vector<std::int64_t> prefix_;  // prefix_[k] = weight of values_[0..k)
};

}  // namespace steklov
