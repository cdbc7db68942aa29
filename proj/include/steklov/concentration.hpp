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

// Boundary L^2 mass of separated eigenfunctions over axis-aligned patches of
// the cuboid boundary, evaluated from closed-form one-dimensional integrals in
// log space, and the concentration sequence on the facet union X_tau.

#include <string>
#include <vector>

#include "steklov/exact.hpp"
#include "steklov/geometry.hpp"

namespace steklov {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Patch on the face x_axis = side * a_axis. `ranges` has one entry per
/// coordinate; the entry at `axis` is ignored.
struct Patch {
  int axis = 0;
  int side = 1;
  std::vector<Interval> ranges;
};

/// The 2d faces of the cuboid as patches.
std::vector<Patch> full_boundary(const Cuboid& c);

/// int_region u^2 / int_{dOmega} u^2. Throws ArgumentError on overlapping
/// patches or ranges outside the cuboid.
double boundary_mass(const Cuboid& c, const EigenSolution& sol, const std::vector<Patch>& region);

/// Axis-aligned U on one connected component of X_tau: ranges over tau1 (in
/// tau1 order) and the component signs over tau2 (empty means all +1).
struct FacetPatch {
  std::vector<Interval> ranges;
  std::vector<int> signs;
};

/// Patches making up U_eps = {x in dOmega : x_tau1 in U, dist(x, U) < eps}.
/// The tau2 distance uses the sup norm where the Euclidean ball is not a box.
std::vector<Patch> collar_patches(const Cuboid& c, const Bipartition& b, const FacetPatch& U, double eps);

/// Mass outside {x in dOmega : |x_j| > a_j - eps for every j in tau2},
/// computed without cancellation.
double off_collar_mass(const Cuboid& c, const EigenSolution& sol, double eps);

struct MassReport {
  int k = 0;
  double sigma = 0.0;
  double mass_in_U_eps = 0.0;
  double target_ratio = 0.0;
  double epsilon = 0.0;
  double off_collar_mass = 0.0;
};

struct ConcentrationResult {
  std::vector<MassReport> reports;
  std::string diagnostic;  // nonempty when the sequence was truncated
};

/// Vol_p(U) / Vol_p(X_tau).
double target_ratio(const Cuboid& c, const Bipartition& b, const FacetPatch& U);

/// For k = k_min..k_max solves box (2k, ..., 2k) with cosh on tau2 and
/// reports the mass of U_eps.
ConcentrationResult concentration_sequence(const Cuboid& c, const Bipartition& b, const FacetPatch& U,
                                           double eps, int k_max, int k_min = 1);

}  // namespace steklov
