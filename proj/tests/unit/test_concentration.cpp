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

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "steklov/concentration.hpp"
#include "steklov/error.hpp"
#include "steklov/extremal.hpp"

using namespace steklov;

TEST_CASE("full boundary carries unit mass") {
  for (auto a : std::vector<std::vector<double>>{{1, 1}, {0.5, 2}, {1, 1, 1}, {0.7, 1.1, 1.6}}) {
    const Cuboid c(a);
    const auto sol = sigma1(c).solution;
    CHECK(boundary_mass(c, sol, full_boundary(c)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(full_boundary(c).size() == 2 * a.size());
  }
  const Cuboid cube({1, 1, 1});
  const auto b = Bipartition::from_mask(3, 0b011);
  const auto hi = solve_box(cube, b, {40, 40}, SignPattern{0b100});
  REQUIRE(hi.has_value());
  CHECK(boundary_mass(cube, *hi, full_boundary(cube)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("square first eigenfunction: face masses in closed form") {
  const Cuboid sq({1, 1});
  const auto r = sigma1(sq);
  const int s_axis = r.solution.bipartition.tau1[0];
  const int h_axis = 1 - s_axis;
  const double al = r.solution.alpha[0], be = r.solution.beta[0];
  // u = sin(al x) cosh(be y)
  const double sine_faces = 2 * std::pow(std::sin(al), 2) * (1 + std::sinh(2 * be) / (2 * be));
  const double cosh_faces = 2 * (1 - std::sin(2 * al) / (2 * al)) * std::pow(std::cosh(be), 2);
  const double frac = sine_faces / (sine_faces + cosh_faces);
  std::vector<Interval> full{{-1, 1}, {-1, 1}};
  const Patch plus{s_axis, 1, full}, minus{s_axis, -1, full};
  CHECK(boundary_mass(sq, r.solution, {plus, minus}) == doctest::Approx(frac).epsilon(1e-12));
  CHECK(boundary_mass(sq, r.solution, {plus}) == doctest::Approx(boundary_mass(sq, r.solution, {minus})).epsilon(1e-13));
  // mirror of a sub-patch on a cosh face
  std::vector<Interval> part{{-1, 1}, {-1, 1}};
  part[static_cast<std::size_t>(s_axis)] = {0.2, 0.7};
  std::vector<Interval> mirror = part;
  mirror[static_cast<std::size_t>(s_axis)] = {-0.7, -0.2};
  CHECK(boundary_mass(sq, r.solution, {{h_axis, 1, part}}) ==
        doctest::Approx(boundary_mass(sq, r.solution, {{h_axis, 1, mirror}})).epsilon(1e-13));
}

TEST_CASE("region validation") {
  const Cuboid sq({1, 1});
  const auto sol = sigma1(sq).solution;
  const Patch p{0, 1, {{-1, 1}, {-0.5, 0.5}}};
  const Patch q{0, 1, {{-1, 1}, {0.2, 0.9}}};
  CHECK_THROWS_AS(boundary_mass(sq, sol, {p, q}), ArgumentError);
  CHECK_THROWS_AS(boundary_mass(sq, sol, {{0, 2, {{-1, 1}, {-1, 1}}}}), ArgumentError);
  CHECK_THROWS_AS(boundary_mass(sq, sol, {{0, 1, {{-1, 1}, {-1, 1.5}}}}), ArgumentError);
  CHECK_NOTHROW(boundary_mass(sq, sol, {p, {0, -1, {{-1, 1}, {-0.5, 0.5}}}}));
}

TEST_CASE("target ratios and collars") {
  const Cuboid cube({1, 1, 1});
  const auto b2 = Bipartition::from_mask(3, 0b011);
  CHECK(target_ratio(cube, b2, {{{-1, 1}, {-1, 1}}, {}}) == doctest::Approx(0.5));
  CHECK(target_ratio(cube, b2, {{{0, 1}, {-1, 1}}, {}}) == doctest::Approx(0.25));
  const auto b1 = Bipartition::from_mask(3, 0b001);
  CHECK(target_ratio(cube, b1, {{{-1, 1}}, {1, -1}}) == doctest::Approx(0.25));
  CHECK(target_ratio(cube, b1, {{{-0.5, 0.5}}, {}}) == doctest::Approx(0.125));
  CHECK_THROWS_AS(target_ratio(cube, b1, {{{-0.5, 0.5}}, {1}}), ArgumentError);
  CHECK_THROWS_AS(target_ratio(cube, b1, {{{-0.5, 0.5}}, {1, 0}}), ArgumentError);
  CHECK_THROWS_AS(target_ratio(cube, b1, {{{-0.5, 1.5}}, {}}), ArgumentError);
  CHECK_THROWS_AS(target_ratio(cube, b1, {{{0.5, -0.5}}, {}}), ArgumentError);
  const auto col = collar_patches(cube, b1, {{{-0.5, 0.5}}, {}}, 0.1);
  CHECK(col.size() == 2);
  CHECK_THROWS_AS(collar_patches(cube, b1, {{{-0.5, 0.5}}, {}}, 1.5), ArgumentError);
}

TEST_CASE("Riemann-Lebesgue deviation of the trigonometric factor") {
  const Cuboid cube({1, 1, 1});
  const auto b = Bipartition::from_mask(3, 0b011);
  for (int k = 1; k <= 30; ++k) {
    const auto s = solve_box(cube, b, {2 * k, 2 * k}, SignPattern{0b100});
    REQUIRE(s.has_value());
    for (double al : s->alpha) {
      const double a = 1.0;
      const double mean = (2 * a - std::sin(2 * al * a) / al) / (2 * a);  // average of 1 - cos(2 al x)
      CHECK(std::abs(mean - 1) <= 1 / (al * a));
    }
  }
}

TEST_CASE("concentration on a face of the cube") {
  const Cuboid cube({1, 1, 1});
  const auto b = Bipartition::from_mask(3, 0b011);
  const FacetPatch U{{{0, 1}, {-1, 1}}, {}};
  const auto res = concentration_sequence(cube, b, U, 0.1, 40, 10);
  CHECK(res.diagnostic.empty());
  REQUIRE(res.reports.size() == 31);
  for (const auto& r : res.reports) {
    CHECK(r.mass_in_U_eps >= 0);
    CHECK(r.mass_in_U_eps <= 1);
    CHECK(r.target_ratio == doctest::Approx(0.25));
  }
  CHECK(std::abs(res.reports.back().mass_in_U_eps - 0.25) < 0.02);
  std::vector<double> k, lg;
  for (const auto& r : res.reports) {
    k.push_back(r.k);
    lg.push_back(std::log(r.off_collar_mass));
  }
  const auto fit = oracle::linear_fit(k, lg);
  CHECK(fit.slope < 0);
  CHECK(fit.r2 > 0.99);
  CHECK_THROWS_AS(concentration_sequence(cube, b, U, 0.1, 5, 6), ArgumentError);
}
