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

// First nonzero eigenvalue, comparison with cubes of equal volume or surface
// area, and recovery of a rectangle from its perimeter and first eigenvalue.

#include <vector>

#include "steklov/exact.hpp"
#include "steklov/geometry.hpp"

namespace steklov {

/// sigma_1 = T(alpha) on the longest axis (sine factor) = H(beta_k) on every
/// other axis (cosh factors), with alpha^2 = |beta|^2.
struct FirstEigenResult {
  double sigma1 = 0.0;
  double alpha = 0.0;
  std::vector<double> beta;  // over the other axes, increasing index
  int longest_axis = 0;
  EigenSolution solution;
};

/// Throws DomainError if a competing candidate (another axis, or an
/// exceptional eigenvalue) falls below the constructed value.
FirstEigenResult sigma1(const Cuboid& c);

enum class Constraint { volume, area };

struct IsoperimetricReport {
  double sigma1_cuboid = 0.0;
  double sigma1_cube = 0.0;
  double cube_half_length = 0.0;
  double margin = 0.0;  // sigma1_cube - sigma1_cuboid
  double aspect_deviation = 0.0;
  bool is_cube = false;
};

inline constexpr double kCubeTolerance = 1e-9;

IsoperimetricReport isoperimetric_check(const Cuboid& c, Constraint constraint);

struct RectangleSides {
  double a1 = 0.0;  // shorter half side (cosh factor)
  double a2 = 0.0;  // longer half side (sine factor)
  double alpha = 0.0;
};

/// Half sides (a1 <= a2) of the rectangle with a1 + a2 = L and first
/// eigenvalue sigma1. Throws DomainError when no such rectangle exists.
RectangleSides invert_rectangle(double L, double sigma1);

}  // namespace steklov
