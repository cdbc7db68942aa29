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

// One-dimensional Steklov factors on [-a, a].
//
//   trigonometric:  T_{a,l}(x) = x cot(a x + l pi/2)   (sin for l = 0, cos for l = 1)
//   hyperbolic:     H_{a,0}(x) = x coth(a x),  H_{a,1}(x) = x tanh(a x)
//
// A separated eigenfunction has Steklov parameter sigma = T(alpha) on each
// trigonometric axis and sigma = H(beta) on each hyperbolic axis.

#include <cstdint>

namespace steklov {

/// For a x above this, tanh and coth are taken to be exactly 1.
inline constexpr double kHyperbolicSaturation = 30.0;
/// Trigonometric arguments closer than this to a pole of cot / tan are rejected.
inline constexpr double kPoleTolerance = 1e-12;

double trig_factor(double a, int ell, double x);
double hyp_factor(double a, int ell, double x);

double trig_factor_derivative(double a, int ell, double x);
double hyp_factor_derivative(double a, int ell, double x);

/// One monotone branch of T: the fine-grid half period
/// (m pi/(2a), (m+1) pi/(2a)] with ell = m mod 2. On it T decreases from +inf
/// (m >= 1) or 1/a (m = 0) down to 0 at the right endpoint.
struct TrigBranch {
  double a = 1.0;
  std::int64_t box = 0;

  int ell() const noexcept { return static_cast<int>(box & 1); }
  std::int64_t period() const noexcept { return box >> 1; }
  double left() const noexcept;
  double right() const noexcept;
  /// sup of T on the branch: 1/a for box 0, +inf otherwise.
  double sup() const noexcept;

  /// T evaluated through the in-branch phase, accurate near either endpoint.
  double value(double x) const;
  double derivative(double x) const;
};

/// Unique x on the branch with T(x) = sigma. sigma = 0 gives the right
/// endpoint. Throws DomainError when sigma >= sup().
double invert_trig(const TrigBranch& branch, double sigma);

/// Unique x >= 0 with H_{a,ell}(x) = sigma. For ell = 0 requires
/// sigma >= 1/a (sigma = 1/a is the limit at x = 0); otherwise DomainError.
double invert_hyp(double a, int ell, double sigma);

}  // namespace steklov
