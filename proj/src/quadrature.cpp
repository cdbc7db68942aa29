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

#include "steklov/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "steklov/error.hpp"

namespace steklov {
namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                           83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

double radical_inverse(std::uint64_t i, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
    i /= static_cast<std::uint64_t>(base);
    f *= inv;
  }
  return r;
}

}  // namespace

GaussRule gauss_legendre(int n) {
  if (n < 1) throw ArgumentError("Gauss-Legendre rule needs at least one node");
  GaussRule r;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[static_cast<std::size_t>(i)] = -x;
    r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    r.weights[static_cast<std::size_t>(i)] = w;
    r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) r.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return r;
}

double tensor_integrate(const BoxIntegrand& f, int dim, double lo, double hi, int nodes) {
  if (dim < 1) throw ArgumentError("integration dimension must be positive");
  if (nodes < 2) throw ArgumentError("quadrature needs at least 2 nodes per axis");
  const GaussRule g = gauss_legendre(nodes);
  const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  std::vector<double> x(static_cast<std::size_t>(dim));
  // Recursive contraction: each level sums its own axis, so rounding does not
  // depend on the total point count.
  auto level = [&](auto&& self, int axis) -> double {
    double s = 0.0;
    for (int k = 0; k < nodes; ++k) {
      x[static_cast<std::size_t>(axis)] = mid + half * g.nodes[static_cast<std::size_t>(k)];
      const double v = axis + 1 == dim ? f(x) : self(self, axis + 1);
      s += g.weights[static_cast<std::size_t>(k)] * v;
    }
    return s * half;
  };
  return level(level, 0);
}

QmcEstimate qmc_integrate(const BoxIntegrand& f, int dim, double lo, double hi, std::int64_t points,
                          int replicates, std::uint64_t seed) {
  if (dim < 1 || dim > static_cast<int>(std::size(kPrimes))) throw ArgumentError("QMC dimension out of range");
  if (points < 1 || replicates < 2) throw ArgumentError("QMC needs points >= 1 and replicates >= 2");
  std::mt19937_64 rng(seed);
  const double vol = std::pow(hi - lo, dim);
  std::vector<double> means;
  std::vector<double> x(static_cast<std::size_t>(dim));
  std::vector<double> shift(static_cast<std::size_t>(dim));
  for (int r = 0; r < replicates; ++r) {
    for (auto& s : shift) s = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double sum = 0.0;
    for (std::int64_t i = 1; i <= points; ++i) {
      for (int k = 0; k < dim; ++k) {
        double u = radical_inverse(static_cast<std::uint64_t>(i), kPrimes[k]) + shift[static_cast<std::size_t>(k)];
        if (u >= 1.0) u -= 1.0;
        x[static_cast<std::size_t>(k)] = lo + (hi - lo) * u;
      }
      sum += f(x);
    }
    means.push_back(vol * sum / static_cast<double>(points));
  }
  QmcEstimate e;
  for (double m : means) e.value += m;
  e.value /= replicates;
  double var = 0.0;
  for (double m : means) var += (m - e.value) * (m - e.value);
  var /= (replicates - 1);
  e.standard_error = std::sqrt(var / replicates);
  return e;
}

}  // namespace steklov
