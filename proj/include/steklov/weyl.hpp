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

// Analytic side of the two-term Weyl law
//   N(sigma) = C1 Vol(dOmega) sigma^{d-1} + C2 Vol(d^2 Omega) sigma^{d-2} + O(sigma^{d-2-eta}),
// the angular constants G_{p,q}, the approximate-eigenvalue region E_sigma
// and the scaled remainder table.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "steklov/geometry.hpp"
#include "steklov/quasi.hpp"

namespace steklov {

/// omega_k = pi^{k/2} / Gamma(k/2 + 1).
double unit_ball_volume(int k);

inline constexpr int kDefaultNodes = 32;
/// Highest integral dimension p-1 handled by the tensor Gauss-Legendre rule.
inline constexpr int kMaxTensorDim = 4;
inline constexpr std::uint64_t kDefaultQmcSeed = 0x5eed'c0ff'ee00'0001ULL;

struct GEstimate {
  double value = 0.0;
  double standard_error = 0.0;  // zero for the deterministic tensor rule
  bool sampled = false;
};

/// G_{p,q} = int_{[0,pi/2]^{p-1}} arccot(q^{-1/2} prod csc theta_j) prod_k sin^k theta_k.
/// Tensor Gauss-Legendre for p-1 <= kMaxTensorDim, randomized Halton beyond.
GEstimate g_constant_estimate(int p, int q, int nodes = kDefaultNodes);
double g_constant(int p, int q, int nodes = kDefaultNodes);

struct PConstants {
  int p = 0;
  int q = 0;
  double c_prime = 0.0;
  double c_double_prime = 0.0;
  double c = 0.0;
};

struct WeylConstants {
  int d = 0;
  double C1 = 0.0;
  double C2 = 0.0;           // closed form
  double C2_assembly = 0.0;  // c'_{d-1} + c''_{d-1} + 2^{(d-2)/2} omega_{d-2} / (2 pi)^{d-2}
  std::vector<PConstants> c_p;                  // 2 <= p <= d-1
  std::map<std::pair<int, int>, GEstimate> G;   // keyed by (p, q)
};

/// C1 = omega_{d-1} / (2 pi)^{d-1}; valid for d >= 2.
double weyl_c1(int d);

WeylConstants weyl_constants(int d, int nodes = kDefaultNodes);

/// Power of sigma dividing the remainder in R(sigma): 0 for d = 2, 2/3 for
/// d = 3, d - 2 - 1/(d-1) for d >= 4.
double remainder_exponent(int d);

/// Membership of x (already divided by sigma, positive orthant) in E_sigma.
/// For a lattice point n, esigma_contains(n / sigma) iff sigma_tilde(n) < sigma.
bool esigma_contains(const Cuboid& c, const Bipartition& b, double sigma, std::span<const double> x);

/// Vol_p(E_sigma), E_sigma extended symmetrically to all orthants.
double esigma_volume(const Cuboid& c, const Bipartition& b, double sigma, int nodes = 64);

/// Vol(E_sigma) = leading - first_order / sigma + O(sigma^-2).
struct EsigmaExpansion {
  double leading = 0.0;
  double first_order = 0.0;

  double at(double sigma) const noexcept { return leading - first_order / sigma; }
};

EsigmaExpansion esigma_expansion(const Cuboid& c, const Bipartition& b, int nodes = kDefaultNodes);

/// Leading coefficient (times sigma^{p-1}) of the lattice points overcounted
/// on the coordinate hyperplanes: sqrt(q^p) 2^p omega_{p-1}/(4 (2 pi)^{p-1}) sum_j prod_{i!=j} a_i.
double hyperplane_overcount_leading(const Cuboid& c, const Bipartition& b);

/// sum_{k>=1} 2^{-k} #{n in N_0^p with exactly k zero entries (k < p), n / sigma in E_sigma}.
double hyperplane_overcount_direct(const Cuboid& c, const Bipartition& b, double sigma);

struct WeylRow {
  double sigma = 0.0;
  std::int64_t N = 0;
  double main = 0.0;
  double second = 0.0;
  double R = 0.0;
};

/// One row per grid value; N from the approximate-eigenvalue census. The grid
/// must be positive and nondecreasing.
std::vector<WeylRow> remainder_table(const Cuboid& c, std::span<const double> sigma_grid,
                                     int nodes = kDefaultNodes);

}  // namespace steklov
