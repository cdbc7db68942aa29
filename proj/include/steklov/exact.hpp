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

// Exact separated eigenvalues. For a bipartition, a fine-grid box on the
// trigonometric coordinates and a sign pattern on the hyperbolic ones there is
// at most one solution of the compatibility and harmonicity system; it is
// found by reducing to the strictly decreasing scalar function
//   F(sigma) = sum_i alpha_i(sigma)^2 - sum_j beta_j(sigma)^2.

#include <optional>
#include <string>
#include <vector>

#include "steklov/geometry.hpp"

namespace steklov {

struct EigenSolution {
  double sigma = 0.0;
  std::vector<double> alpha;  // over tau1
  std::vector<double> beta;   // over tau2
  BoxIndex box;
  SignPattern ell_tau2;
  Bipartition bipartition;
};

struct Residuals {
  double harmonicity = 0.0;    // |sum alpha^2 - sum beta^2| / sum alpha^2
  double compatibility = 0.0;  // max over coordinates of |factor - sigma| / max(sigma, 1)
};

/// Value of F at sigma for the given (box, ell) data; exposed for property
/// checks. Throws DomainError outside the domain of F.
double compatibility_gap(const Cuboid& c, const Bipartition& b, const BoxIndex& box,
                         SignPattern ell_tau2, double sigma);

/// Unique solution in the box, or nullopt when the box carries none.
std::optional<EigenSolution> solve_box(const Cuboid& c, const Bipartition& b, const BoxIndex& box,
                                       SignPattern ell_tau2);

Residuals residuals(const Cuboid& c, const EigenSolution& s);

/// Eigenfunction with linear factors x_i (i in linear_mask) or a zero box
/// entry. Linear-factor solutions force sigma = 1/a_i on every linear axis.
struct ExceptionalEigenvalue {
  double sigma = 0.0;
  CoordMask linear_mask = 0;
  CoordMask trig_mask = 0;
  CoordMask hyp_mask = 0;
  BoxIndex box;                // over the trigonometric coordinates
  SignPattern ell;             // ell over trigonometric and hyperbolic coordinates
  std::vector<double> alpha;
  std::vector<double> beta;

  bool has_linear_factor() const noexcept { return linear_mask != 0; }
};

/// Exhaustive list of exceptional eigenvalues, sorted by sigma.
std::vector<ExceptionalEigenvalue> enumerate_exceptional(const Cuboid& c);

enum class Family { constant, regular, zero_box, linear };

const char* family_name(Family f) noexcept;

struct EigenvalueRecord {
  double sigma = 0.0;
  Family family = Family::regular;
  int p = 0;
  CoordMask tau_mask = 0;       // trigonometric coordinates
  CoordMask linear_mask = 0;
  BoxIndex box;
  CoordMask ell_tau2_mask = 0;  // bit i set: cosh on hyperbolic coordinate i
  int multiplicity = 1;
  std::vector<double> alpha;
  std::vector<double> beta;
};

struct ExactOptions {
  /// Box enumeration margin; negative selects default_margin(c).
  double margin = -1.0;
};

/// All eigenvalues strictly below sigma_max, each listed individually,
/// sorted by (sigma, tau_mask, box, ell_tau2_mask).
std::vector<EigenvalueRecord> spectrum_exact(const Cuboid& c, double sigma_max,
                                             const ExactOptions& opt = {});

struct Cluster {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  int multiplicity = 0;
};

/// Groups a sorted list: consecutive values closer than rel_gap * sigma join
/// the same cluster.
std::vector<Cluster> group_clusters(const std::vector<EigenvalueRecord>& sorted,
                                    double rel_gap = 1e-6);

/// Number of records with sigma strictly below the threshold (multiplicity
/// weighted). Records must be sorted.
long long count_below(const std::vector<EigenvalueRecord>& sorted, double sigma);

}  // namespace steklov
