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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "steklov/error.hpp"
#include "steklov/exact.hpp"
#include "steklov/extremal.hpp"

using namespace steklov;
using oracle::kPi;

TEST_CASE("first eigenvalue examples") {
  const auto sq = sigma1(Cuboid({1, 1}));
  CHECK(sq.sigma1 == doctest::Approx(oracle::square_first().first).epsilon(1e-12));
  CHECK(sq.longest_axis == 0);
  const auto cube = sigma1(Cuboid({1, 1, 1}));
  CHECK(cube.sigma1 == doctest::Approx(oracle::cube_first()).epsilon(1e-12));
  REQUIRE(cube.beta.size() == 2);
  CHECK(cube.beta[0] == doctest::Approx(cube.beta[1]).epsilon(1e-12));
  CHECK(sigma1(Cuboid({0.5, 3, 1})).longest_axis == 1);
}

TEST_CASE("first eigenvalue structure and scaling") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ua(0.3, 2.5);
  for (int t = 0; t < 40; ++t) {
    std::vector<double> a(2 + t % 3);
    for (auto& x : a) x = ua(rng);
    const Cuboid c(a);
    const auto r = sigma1(c);
    double nb = 0;
    for (double b : r.beta) nb += b * b;
    CHECK(r.alpha == doctest::Approx(std::sqrt(nb)).epsilon(1e-10));
    const double amax = *std::max_element(a.begin(), a.end());
    CHECK(r.alpha < kPi / (2 * amax));
    CHECK(c.half_length(r.longest_axis) == amax);
    const auto res = residuals(c, r.solution);
    CHECK(res.compatibility < 1e-9);
    CHECK(res.harmonicity < 1e-9);
    for (double s : {0.5, 2.0}) CHECK(sigma1(c.scaled(s)).sigma1 == doctest::Approx(r.sigma1 / s).epsilon(1e-9));
  }
}

TEST_CASE("sigma1 lies strictly below every other eigenvalue up to 2 sigma1") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(0.4, 2.0);
  for (int t = 0; t < 25; ++t) {
    std::vector<double> a(t < 20 ? 2 : 3);
    for (auto& x : a) x = ua(rng);
    const Cuboid c(a);
    const double s1 = sigma1(c).sigma1;
    const auto sp = spectrum_exact(c, 2 * s1);
    REQUIRE(sp.size() >= 2);
    CHECK(sp[1].sigma == doctest::Approx(s1).epsilon(1e-12));
    for (std::size_t i = 2; i < sp.size(); ++i) CHECK(sp[i].sigma > s1 * (1 + 1e-9));
  }
}

TEST_CASE("sigma1 decreases along fixed perimeter") {
  double prev = INFINITY;
  for (double a2 = 1.0; a2 < 1.95; a2 += 0.05) {
    const double s = sigma1(Cuboid({2.0 - a2, a2})).sigma1;
    CHECK(s < prev);
    prev = s;
  }
}

TEST_CASE("isoperimetric comparisons") {
  const auto self = isoperimetric_check(Cuboid({1, 1, 1}), Constraint::volume);
  CHECK(std::abs(self.margin) < 1e-10);
  CHECK(self.is_cube);
  const auto v = isoperimetric_check(Cuboid({0.5, 2}), Constraint::volume);
  CHECK(v.cube_half_length == doctest::Approx(1.0));
  CHECK(v.margin > 0);
  CHECK_FALSE(v.is_cube);
  const auto ar = isoperimetric_check(Cuboid({0.5, 2}), Constraint::area);
  CHECK(ar.cube_half_length == doctest::Approx(1.25));
  CHECK(ar.margin > 0);

  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> ua(0.25, 2.0);
  for (int t = 0; t < 100; ++t) {
    const Cuboid c({ua(rng), ua(rng), ua(rng)});
    const auto r = isoperimetric_check(c, Constraint::area);
    CHECK(r.margin >= 0);
  }
  // margins shrink as the shape approaches a cube
  double prev = INFINITY;
  for (double e : {0.5, 0.1, 0.01, 0.001}) {
    const double m = isoperimetric_check(Cuboid({1, 1 + e, 1}), Constraint::area).margin;
    CHECK(m < prev);
    prev = m;
  }
}

TEST_CASE("rectangle inversion") {
  const double s = sigma1(Cuboid({0.7, 1.3})).sigma1;
  const auto r = invert_rectangle(2.0, s);
  CHECK(std::abs(r.a1 - 0.7) < 1e-8);
  CHECK(std::abs(r.a2 - 1.3) < 1e-8);

  const double s_sq = oracle::square_first().first;
  const auto q = invert_rectangle(2.0, s_sq);
  CHECK(std::abs(q.a1 - 1.0) < 1e-6);
  CHECK(std::abs(q.a2 - 1.0) < 1e-6);
  CHECK(q.a1 <= q.a2);

  CHECK_THROWS_AS(invert_rectangle(2.0, s_sq * 1.01), DomainError);
  CHECK_THROWS_AS(invert_rectangle(-1.0, 0.5), ArgumentError);
  CHECK_THROWS_AS(invert_rectangle(2.0, 0.0), ArgumentError);
}

TEST_CASE("inversion curves are monotone") {
  // cosh side a(alpha) = artanh(s/alpha)/alpha, sine side b(alpha) = arctan(alpha/s)/alpha
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> us(0.1, 2.0), uf(1e-6, 20.0);
  for (int t = 0; t < 1000; ++t) {
    const double s = us(rng);
    const double al = s * (1 + uf(rng));
    const double h = 1e-7 * al;
    auto f = [s](double x) { return std::atanh(s / x) / x; };
    auto g = [s](double x) { return 2.0 - std::atan(x / s) / x; };
    CHECK(f(al + h) < f(al));
    CHECK(g(al + h) > g(al));
  }
}
