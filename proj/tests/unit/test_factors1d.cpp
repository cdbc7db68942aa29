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
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "steklov/error.hpp"
#include "steklov/factors1d.hpp"

using namespace steklov;
using oracle::kPi;

TEST_CASE("trigonometric factor examples") {
  CHECK(trig_factor(1, 0, kPi / 4) == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(trig_factor(1, 1, kPi / 4) == doctest::Approx(-kPi / 4).epsilon(1e-15));
  CHECK(std::abs(trig_factor(2, 0, kPi / 4)) < 1e-15);
  CHECK_THROWS_AS(trig_factor(1, 0, kPi), DomainError);
  CHECK_THROWS_AS(trig_factor(1, 1, kPi / 2), DomainError);
}

TEST_CASE("hyperbolic factor examples") {
  CHECK(hyp_factor(1, 1, 0) == 0.0);
  CHECK(hyp_factor(1, 0, 0) == doctest::Approx(1.0));
  CHECK(hyp_factor(2, 0, 0) == doctest::Approx(0.5));
  CHECK(hyp_factor(1, 0, 1e-9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(hyp_factor(1, 1, 20) - 20.0) < 1e-12);
  for (double x : {21.0, 35.0, 100.0, 1e4})
    for (int ell : {0, 1}) CHECK(std::abs(hyp_factor(1, ell, x) - x) < 1e-12 * std::max(1.0, x));
  for (int ell : {0, 1})
    for (double x = 0.0; x < 5; x += 0.01) {
      CHECK(hyp_factor(1.3, ell, x + 0.01) >= hyp_factor(1.3, ell, x));
      if (ell == 0) CHECK(hyp_factor(1.3, 0, x) >= 1 / 1.3 - 1e-15);
    }
}

TEST_CASE("derivatives agree with finite differences") {
  for (double a : {0.5, 1.0, 2.3})
    for (int ell : {0, 1})
      for (double x : {0.3, 0.9, 2.7}) {
        const double h = 1e-6;
        const double fd = (hyp_factor(a, ell, x + h) - hyp_factor(a, ell, x - h)) / (2 * h);
        CHECK(hyp_factor_derivative(a, ell, x) == doctest::Approx(fd).epsilon(1e-6));
        if (std::abs(std::sin(a * x + ell * kPi / 2)) > 0.1) {
          const double ft = (trig_factor(a, ell, x + h) - trig_factor(a, ell, x - h)) / (2 * h);
          CHECK(trig_factor_derivative(a, ell, x) == doctest::Approx(ft).epsilon(1e-6));
        }
      }
}

TEST_CASE("trig branch geometry") {
  TrigBranch b{2.0, 3};
  CHECK(b.ell() == 1);
  CHECK(b.period() == 1);
  CHECK(b.left() == doctest::Approx(3 * kPi / 4));
  CHECK(b.right() == doctest::Approx(kPi));
}

TEST_CASE("invert_trig examples") {
  CHECK(invert_trig({1.0, 0}, 0.0) == doctest::Approx(kPi / 2).epsilon(1e-14));
  const double s = 0.68823;
  const double x = oracle::bisect([s](double t) { return t / std::tan(t) - s; }, 1e-9, kPi / 2);
  CHECK(invert_trig({1.0, 0}, s) == doctest::Approx(x).epsilon(1e-12));
  // alpha of the square's first eigenvalue; the inverse at the true sigma_1
  const auto [s1, a1] = oracle::square_first();
  CHECK(invert_trig({1.0, 0}, s1) == doctest::Approx(a1).epsilon(1e-12));
  CHECK(a1 == doctest::Approx(0.93755).epsilon(1e-5));
  const double far = invert_trig({1.0, 2}, 1e8);
  CHECK(far > kPi);
  CHECK(far - kPi < 1e-6);
}

TEST_CASE("invert_hyp examples") {
  CHECK(invert_hyp(1, 1, 0) == 0.0);
  CHECK(invert_hyp(1, 0, 1) == 0.0);
  CHECK_THROWS_AS(invert_hyp(1, 0, 0.5), DomainError);
  const double b = oracle::bisect([](double t) { return t * std::tanh(t) - 10.0; }, 9, 11);
  CHECK(invert_hyp(1, 1, 10) == doctest::Approx(b).epsilon(1e-12));
  CHECK(std::abs(invert_hyp(1, 1, 10) - 10.0) < 1e-7);
  const double b1 = oracle::bisect([](double t) { return t * std::tanh(t) - 1.0; }, 0.5, 2);
  CHECK(invert_hyp(1, 1, 1) == doctest::Approx(b1).epsilon(1e-12));
}

TEST_CASE("round trip on 10^4 random instances") {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> ua(0.2, 3.0), us(0.0, 60.0);
  std::uniform_int_distribution<int> ubox(0, 40), uell(0, 1);
  int bad_t = 0, bad_h = 0;
  for (int i = 0; i < 10000; ++i) {
    const double a = ua(rng);
    const TrigBranch br{a, ubox(rng)};
    // the first branch only reaches [0, 1/a)
    const double sigma = br.box == 0 ? us(rng) / 60.0 * br.sup() * (1 - 1e-9) : us(rng);
    const double x = invert_trig(br, sigma);
    if (!(x > br.left() && x <= br.right())) ++bad_t;
    else if (std::abs(trig_factor(a, br.ell(), x) - sigma) > 1e-10 * std::max(1.0, sigma)) {
      // steep near the left pole: judge by x-resolution instead
      const double slope = std::abs(trig_factor_derivative(a, br.ell(), x));
      if (std::abs(trig_factor(a, br.ell(), x) - sigma) > 8e-16 * slope * x + 1e-10 * sigma) ++bad_t;
    }
    const int ell = uell(rng);
    const double hs = ell == 0 ? 1 / a + us(rng) : us(rng);
    const double y = invert_hyp(a, ell, hs);
    if (std::abs(hyp_factor(a, ell, y) - hs) > 1e-10 * std::max(1.0, hs)) ++bad_h;
  }
  CHECK(bad_t == 0);
  CHECK(bad_h == 0);
}

TEST_CASE("monotonicity of the inverses") {
  for (std::int64_t m = 0; m < 6; ++m) {
    TrigBranch br{1.3, m};
    double prev = INFINITY;
    const double top = m == 0 ? br.sup() : 40.0;
    for (double s = 0; s < top; s += m == 0 ? top / 50 : 0.37) {
      const double x = invert_trig(br, s);
      CHECK(x < prev);
      prev = x;
    }
  }
  for (int ell : {0, 1}) {
    double prev = -1;
    for (double s = 1 / 0.8 + 0.01; s < 40; s += 0.37) {
      const double x = invert_hyp(0.8, ell, s);
      CHECK(x > prev);
      prev = x;
    }
  }
}
