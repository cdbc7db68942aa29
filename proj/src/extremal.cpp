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

#include "steklov/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "steklov/error.hpp"
#include "steklov/roots.hpp"

namespace steklov {
namespace {

constexpr double kOrderSlack = 1e-12;

Bipartition single_trig(int d, int axis) { return Bipartition::from_mask(d, CoordMask{1} << axis); }

SignPattern all_cosh(const Bipartition& b) {
  SignPattern s;
  for (int j : b.tau2) s.set(j, 1);
  return s;
}

std::optional<EigenSolution> ground_mode(const Cuboid& c, int axis) {
  const Bipartition b = single_trig(c.dim(), axis);
  return solve_box(c, b, BoxIndex{0}, all_cosh(b));
}

}  // namespace

FirstEigenResult sigma1(const Cuboid& c) {
  const int d = c.dim();
  int longest = 0;
  for (int i = 1; i < d; ++i)
    if (c.half_length(i) > c.half_length(longest)) longest = i;
  auto sol = ground_mode(c, longest);
  if (!sol) throw DomainError("sigma1: the ground mode has no solution");

  FirstEigenResult r;
  r.sigma1 = sol->sigma;
  r.alpha = sol->alpha.front();
  r.beta = sol->beta;
  r.longest_axis = longest;
  r.solution = std::move(*sol);

  const double floor_value = r.sigma1 * (1.0 - kOrderSlack);
  for (int i = 0; i < d; ++i) {
    if (i == longest) continue;
    if (auto other = ground_mode(c, i); other && other->sigma < floor_value)
      throw DomainError("sigma1: axis " + std::to_string(i) + " gives a smaller candidate");
  }
  for (const auto& e : enumerate_exceptional(c))
    if (e.sigma < floor_value) throw DomainError("sigma1: an exceptional eigenvalue lies below the candidate");
  return r;
}

IsoperimetricReport isoperimetric_check(const Cuboid& c, Constraint constraint) {
  const int d = c.dim();
  double s = 0.0;
  if (constraint == Constraint::volume) {
    double log_vol = 0.0;
    for (double a : c.half_lengths()) log_vol += std::log(a);
    s = std::exp(log_vol / d);
  } else {
    // d s^{d-1} equals the sum over j of prod_{i != j} a_i.
    const double cof = facet_volume(c, 1) / std::ldexp(1.0, d);
    s = std::pow(cof / d, 1.0 / (d - 1));
  }
  IsoperimetricReport r;
  r.cube_half_length = s;
  r.sigma1_cuboid = sigma1(c).sigma1;
  r.sigma1_cube = sigma1(Cuboid(std::vector<double>(static_cast<std::size_t>(d), s))).sigma1;
  r.margin = r.sigma1_cube - r.sigma1_cuboid;
  r.aspect_deviation = c.aspect_deviation();
  r.is_cube = c.is_cube(kCubeTolerance);
  return r;
}

RectangleSides invert_rectangle(double L, double sigma1) {
  if (!(L > 0.0) || !std::isfinite(L)) throw ArgumentError("perimeter parameter L must be positive");
  if (!(sigma1 > 0.0) || !std::isfinite(sigma1)) throw ArgumentError("sigma1 must be positive");
  // Side carrying cosh(alpha x): alpha tanh(alpha a) = sigma1.
  auto f = [sigma1](double a) { return std::atanh(sigma1 / a) / a; };
  // Side carrying sin(alpha x): alpha cot(alpha a) = sigma1.
  auto g = [sigma1, L](double a) { return L - std::atan(a / sigma1) / a; };
  auto fdf = [&](double a) {
    const double df = -std::atanh(sigma1 / a) / (a * a) - sigma1 / (a * (a * a - sigma1 * sigma1));
    const double dg = std::atan(a / sigma1) / (a * a) - sigma1 / (a * (sigma1 * sigma1 + a * a));
    return std::pair{f(a) - g(a), df - dg};
  };
  const double lo = sigma1 * (1.0 + 1e-12);
  double hi = sigma1 + 10.0 / L + 10.0;
  for (int i = 0; !(fdf(hi).first < 0.0); ++i) {
    if (i > 200) throw DomainError("invert_rectangle: inconsistent input, no intersection found");
    hi *= 2.0;
  }
  if (!(fdf(lo).first > 0.0)) throw DomainError("invert_rectangle: inconsistent input, no intersection found");
  RootOptions opt;
  opt.coarse_width = 1e-6 * hi;
  opt.f_tol = 0.0;
  const double alpha = solve_bracketed(fdf, lo, hi, opt, "invert_rectangle");
  RectangleSides r;
  r.alpha = alpha;
  r.a1 = f(alpha);
  r.a2 = L - r.a1;
  if (!(r.a1 <= r.a2 * (1.0 + 1e-9)))
    throw DomainError("invert_rectangle: inconsistent input, sigma1 exceeds the square's value for this L");
  return r;
}

}  // namespace steklov
