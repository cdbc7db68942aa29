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

// Independent reference computations for the tests. Nothing here calls the
// library: roots are found by plain bisection, counts by brute force.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

// Root of f on [lo, hi] by bisection to machine resolution; f(lo), f(hi)
// must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 2000; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double arccot(double x) { return std::atan2(1.0, x); }

// First eigenvalue of the square of half side 1: tan x tanh x = 1, sigma = x tanh x.
inline std::pair<double, double> square_first() {
  const double x = bisect([](double t) { return std::tan(t) * std::tanh(t) - 1.0; }, 0.1, 1.5);
  return {x * std::tanh(x), x};
}

// Unit cube first eigenvalue: sin on one axis, cosh on the other two with
// beta_1 = beta_2 = alpha / sqrt 2, so alpha cot alpha = beta tanh beta.
inline double cube_first() {
  auto g = [](double x) {
    const double b = x / std::sqrt(2.0);
    return x / std::tan(x) - b * std::tanh(b);
  };
  const double x = bisect(g, 1e-6, 1.5);
  const double b = x / std::sqrt(2.0);
  return b * std::tanh(b);
}

// sigma_tilde straight from the closed form, independent of the quasi module.
inline double sigma_tilde(const std::vector<double>& a_trig, const std::vector<std::int64_t>& n, int q) {
  double s = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    double inner = 1.0;
    for (std::size_t j = 0; j < n.size(); ++j) {
      if (j == i) continue;
      const double r = a_trig[i] * static_cast<double>(n[j]) / (a_trig[j] * static_cast<double>(n[i]));
      inner += r * r;
    }
    const double al = static_cast<double>(n[i]) * kPi / (2.0 * a_trig[i]) +
                      arccot(std::sqrt(inner) / std::sqrt(static_cast<double>(q))) / a_trig[i];
    s += al * al;
  }
  return std::sqrt(s / q);
}

// Least-squares slope, intercept and R^2 of y against x.
struct Fit {
  double slope, intercept, r2;
};
inline Fit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx, syy > 0 ? sxy * sxy / (sxx * syy) : 1.0};
}

// Kendall tau of y against its index and the exact two-sided p-value under
// the null of no trend (all n! orderings equally likely; n <= 8).
struct Kendall {
  double tau;
  double p_two_sided;
};
inline Kendall kendall_trend(const std::vector<double>& y) {
  const int n = static_cast<int>(y.size());
  auto score = [n](const std::vector<double>& v) {
    int s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += (v[j] > v[i]) - (v[j] < v[i]);
    return s;
  };
  const int s = score(y);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0, extreme = 0;
  do {
    std::vector<double> v(perm.begin(), perm.end());
    ++total;
    if (std::abs(score(v)) >= std::abs(s)) ++extreme;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {2.0 * s / (n * (n - 1.0)), static_cast<double>(extreme) / static_cast<double>(total)};
}

}  // namespace oracle
