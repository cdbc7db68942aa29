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

// Bracketed root polishing for monotone scalar equations: bisection down to a
// coarse width, then Newton steps that fall back to bisection whenever they
// leave the bracket or stall.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

struct RootOptions {
  double coarse_width = 1e-3;  // bisect until the bracket is this narrow
  double f_tol = 1e-13;        // stop when |f| <= f_tol
  int max_iterations = 400;
};

/// Finds x in [lo, hi] with f(x) = 0 where f(lo) and f(hi) have opposite
/// signs (or one is zero). `fdf(x)` returns {f(x), f'(x)}.
template <class FDF>
double solve_bracketed(FDF&& fdf, double lo, double hi, const RootOptions& opt,
                       const char* what) {
  auto [flo, dlo] = fdf(lo);
  if (flo == 0.0) return lo;
  auto [fhi, dhi] = fdf(hi);
  if (fhi == 0.0) return hi;
  (void)dlo;
  (void)dhi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw ConvergenceError(std::string(what) + ": endpoints do not bracket a root", lo, hi);
  const bool increasing = flo < 0.0;

  auto shrink = [&](double x, double fx) {
    if ((fx < 0.0) == increasing) lo = x;
    else hi = x;
  };

  int it = 0;
  while (hi - lo > opt.coarse_width) {
    if (++it > opt.max_iterations) throw ConvergenceError(std::string(what) + ": bisection stalled", lo, hi);
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const auto [fm, dm] = fdf(mid);
    (void)dm;
    if (fm == 0.0 || std::abs(fm) <= opt.f_tol) return mid;
    shrink(mid, fm);
  }

  double x = 0.5 * (lo + hi);
  for (; it < opt.max_iterations; ++it) {
    const auto [fx, dfx] = fdf(x);
    if (fx == 0.0 || std::abs(fx) <= opt.f_tol) return x;
    shrink(x, fx);
    const double width = hi - lo;
    if (!(width > 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))))
      return 0.5 * (lo + hi);
    double next = x - fx / dfx;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (next == x) return x;
    x = next;
  }
  throw ConvergenceError(std::string(what) + ": Newton polish did not converge", lo, hi);
}

}  // namespace steklov
