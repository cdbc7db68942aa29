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

// Quadrature on boxes: Gauss-Legendre rules, their tensor products, and a
// randomized quasi-Monte Carlo fallback for higher dimensions.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace steklov {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, n >= 1. Nodes from Newton iteration on P_n.
GaussRule gauss_legendre(int n);

using BoxIntegrand = std::function<double(std::span<const double>)>;

/// Tensor-product rule with `nodes` points per axis over [lo, hi]^dim.
/// Summation order is fixed (lexicographic with per-slice partial sums).
double tensor_integrate(const BoxIntegrand& f, int dim, double lo, double hi, int nodes);

struct QmcEstimate {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Randomized Halton estimate over [lo, hi]^dim: `replicates` independent
/// Cranley-Patterson shifts of a `points`-point Halton set, seeded.
QmcEstimate qmc_integrate(const BoxIntegrand& f, int dim, double lo, double hi, std::int64_t points,
                          int replicates, std::uint64_t seed);

}  // namespace steklov
