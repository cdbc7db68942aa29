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

#include "steklov/factors1d.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "steklov/error.hpp"
#include "steklov/roots.hpp"

namespace steklov {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_scale(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ArgumentError("half length must be positive");
}

void check_ell(int ell) {
  if (ell != 0 && ell != 1) throw ArgumentError("ell must be 0 or 1");
}

// x coth(a x), with the x -> 0 limit 1/a.
double x_coth(double a, double x) {
  const double y = a * x;
  if (y > kHyperbolicSaturation) return x;
  if (y < 1e-6) return (1.0 + y * y / 3.0) / a;
  return x / std::tanh(y);
}

double x_tanh(double a, double x) {
  const double y = a * x;
  if (y > kHyperbolicSaturation) return x;
  return x * std::tanh(y);
}

}  // namespace

double trig_factor(double a, int ell, double x) {
  check_scale(a);
  check_ell(ell);
  const double arg = a * x + ell * kHalfPi;
  const double s = std::sin(arg);
  if (std::abs(s) < kPoleTolerance) throw DomainError("trig_factor evaluated at a pole");
  return x * std::cos(arg) / s;
}

double trig_factor_derivative(double a, int ell, double x) {
  check_scale(a);
  check_ell(ell);
  const double arg = a * x + ell * kHalfPi;
  const double s = std::sin(arg);
  if (std::abs(s) < kPoleTolerance) throw DomainError("trig_factor_derivative evaluated at a pole");
  return std::cos(arg) / s - a * x / (s * s);
}

double hyp_factor(double a, int ell, double x) {
  check_scale(a);
  check_ell(ell);
  if (x < 0.0) throw ArgumentError("hyp_factor needs x >= 0");
  return ell == 0 ? x_coth(a, x) : x_tanh(a, x);
}

double hyp_factor_derivative(double a, int ell, double x) {
  check_scale(a);
  check_ell(ell);
  if (x < 0.0) throw ArgumentError("hyp_factor_derivative needs x >= 0");
  const double y = a * x;
  if (y > kHyperbolicSaturation) return 1.0;
  if (ell == 0) {
    if (y < 1e-4) return 2.0 * a * x / 3.0;
    const double sh = std::sinh(y);
    return std::cosh(y) / sh - y / (sh * sh);
  }
  const double ch = std::cosh(y);
  return std::tanh(y) + y / (ch * ch);
}

double TrigBranch::left() const noexcept { return static_cast<double>(box) * kHalfPi / a; }
double TrigBranch::right() const noexcept { return static_cast<double>(box + 1) * kHalfPi / a; }
double TrigBranch::sup() const noexcept {
  return box == 0 ? 1.0 / a : std::numeric_limits<double>::infinity();
}

// On the branch a x + ell pi/2 = period*pi + ell*pi + phi with phi in (0, pi/2],
// so cot(a x + ell pi/2) = cot(phi). Working in phi avoids the large-argument
// reduction of cot near the branch poles.
double TrigBranch::value(double x) const {
  const double phi = a * x - static_cast<double>(box) * kHalfPi;
  if (!(phi > 0.0) || phi > kHalfPi * (1.0 + 1e-12)) throw DomainError("x outside trigonometric branch");
  if (phi < kPoleTolerance) throw DomainError("trigonometric branch evaluated at its pole");
  return x / std::tan(phi);
}

double TrigBranch::derivative(double x) const {
  const double phi = a * x - static_cast<double>(box) * kHalfPi;
  if (!(phi > 0.0) || phi > kHalfPi * (1.0 + 1e-12)) throw DomainError("x outside trigonometric branch");
  const double s = std::sin(phi);
  return std::cos(phi) / s - a * x / (s * s);
}

double invert_trig(const TrigBranch& branch, double sigma) {
  check_scale(branch.a);
  if (branch.box < 0) throw ArgumentError("box index must be nonnegative");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ArgumentError("invert_trig needs finite sigma >= 0");
  if (sigma == 0.0) return branch.right();
  if (!(sigma < branch.sup()))
    throw DomainError("invert_trig: sigma exceeds the range of the first branch");

  const double a = branch.a;
  const double offset = static_cast<double>(branch.box) * kHalfPi;
  // g(phi) = (offset + phi) cot(phi) / a - sigma, strictly decreasing on (0, pi/2].
  auto fdf = [&](double phi) {
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    const double f = (offset + phi) * c / (s * a) - sigma;
    const double df = (c / s - (offset + phi) / (s * s)) / a;
    return std::pair{f, df};
  };
  double lo = kHalfPi / 2.0;
  for (int i = 0; fdf(lo).first <= 0.0; ++i) {
    if (i > 1100) throw ConvergenceError("invert_trig: no lower bracket", 0.0, lo);
    lo *= 0.5;
  }
  RootOptions opt;
  opt.coarse_width = 1e-3 * kHalfPi;
  opt.f_tol = 1e-15 * sigma;
  const double phi = solve_bracketed(fdf, lo, kHalfPi, opt, "invert_trig");
  return (offset + phi) / a;
}

double invert_hyp(double a, int ell, double sigma) {
  check_scale(a);
  check_ell(ell);
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ArgumentError("invert_hyp needs finite sigma >= 0");
  double lo = 0.0;
  double hi = 0.0;
  if (ell == 1) {
    if (sigma == 0.0) return 0.0;
    lo = sigma;
    hi = sigma + 1.0 / a;
  } else {
    const double floor_value = 1.0 / a;
    if (sigma < floor_value) throw DomainError("invert_hyp: sigma below 1/a has no sinh solution");
    if (sigma == floor_value) return 0.0;
    lo = 0.0;
    hi = sigma;
  }
  auto fdf = [&](double x) {
    return std::pair{hyp_factor(a, ell, x) - sigma, hyp_factor_derivative(a, ell, x)};
  };
  RootOptions opt;
  opt.coarse_width = 1e-3 * std::max(1.0, hi - lo);
  opt.f_tol = 1e-15 * sigma;
  return solve_bracketed(fdf, lo, hi, opt, "invert_hyp");
}

}  // namespace steklov
