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
#include "steklov/exact.hpp"
#include "steklov/factors1d.hpp"
#include "steklov/quasi.hpp"

using namespace steklov;

namespace {
SignPattern pattern(CoordMask bits) { return SignPattern{bits}; }
}  // namespace

TEST_CASE("square first eigenvalue box") {
  Cuboid sq({1, 1});
  auto b = Bipartition::from_mask(2, 0b01);
  const auto sol = solve_box(sq, b, {0}, pattern(0b10));
  REQUIRE(sol.has_value());
  const auto [sigma, x] = oracle::square_first();
  CHECK(sol->sigma == doctest::Approx(sigma).epsilon(1e-12));
  CHECK(sol->alpha[0] == doctest::Approx(x).epsilon(1e-12));
  CHECK(sol->sigma == doctest::Approx(0.68823).epsilon(5e-5));
  CHECK(sol->alpha[0] == doctest::Approx(0.93755).epsilon(1e-5));
}

TEST_CASE("square box 0 with sinh has no solution") {
  // sigma would need to exceed 1 = 1/a for the sinh side and stay below 1 on the sin branch
  Cuboid sq({1, 1});
  auto b = Bipartition::from_mask(2, 0b01);
  CHECK_FALSE(solve_box(sq, b, {0}, pattern(0)).has_value());
}

TEST_CASE("cube cluster at box (20, 20)") {
  Cuboid cube({1, 1, 1});
  auto b = Bipartition::from_mask(3, 0b011);
  const auto s0 = solve_box(cube, b, {20, 20}, pattern(0));
  const auto s1 = solve_box(cube, b, {20, 20}, pattern(0b100));
  REQUIRE(s0.has_value());
  REQUIRE(s1.has_value());
  CHECK(std::abs(s0->sigma - s1->sigma) < 1e-10);
  const double st = oracle::sigma_tilde({1, 1}, {20, 20}, 1);
  CHECK(std::abs(s0->sigma - st) * 20 < 0.05);
}

TEST_CASE("residuals of random solves") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ua(0.4, 2.0);
  std::uniform_int_distribution<int> ubox(0, 30);
  int solved = 0;
  for (int t = 0; t < 300; ++t) {
    const int d = 2 + t % 3;
    std::vector<double> a(d);
    for (auto& x : a) x = ua(rng);
    Cuboid c(a);
    const int p = 1 + static_cast<int>(rng() % static_cast<unsigned>(d - 1));
    const auto bs = bipartitions(d, p);
    const auto& b = bs[rng() % bs.size()];
    BoxIndex box(p);
    for (auto& m : box) m = ubox(rng);
    const auto sol = solve_box(c, b, box, pattern(static_cast<CoordMask>(rng())));
    if (!sol) continue;
    ++solved;
    const auto r = residuals(c, *sol);
    CHECK(r.harmonicity < 1e-9);
    CHECK(r.compatibility < 1e-9);
    for (int i = 0; i < p; ++i) {
      const TrigBranch br{c.half_length(b.tau1[i]), box[i]};
      CHECK(sol->alpha[i] > br.left());
      CHECK(sol->alpha[i] <= br.right());
    }
  }
  CHECK(solved > 200);
}

TEST_CASE("F is strictly decreasing in sigma") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ua(0.5, 1.8), uf(0.05, 0.95);
  std::uniform_int_distribution<int> ubox(1, 25);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const int d = 3;
    Cuboid c({ua(rng), ua(rng), ua(rng)});
    const int p = 1 + t % 2;
    const auto b = bipartitions(d, p)[t % 3];
    BoxIndex box(p);
    for (auto& m : box) m = ubox(rng);
    const auto ell = pattern(static_cast<CoordMask>(rng()));
    const auto sol = solve_box(c, b, box, ell);
    if (!sol) continue;
    // sample on either side of the root, inside the domain of F
    const double s1 = sol->sigma * (0.6 + 0.8 * uf(rng));
    const double h = 1e-6 * sol->sigma;
    try {
      const double f1 = compatibility_gap(c, b, box, ell, s1);
      const double f2 = compatibility_gap(c, b, box, ell, s1 + h);
      CHECK(f2 < f1);
      ++checked;
    } catch (const std::exception&) {
      // outside the domain (below the cosh floor); skip
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("cluster property for |m| >= 20") {
  Cuboid c({0.8, 1.1, 1.3});
  for (int p = 1; p <= 2; ++p)
    for (const auto& b : bipartitions(3, p)) {
      const BoxIndex box = p == 1 ? BoxIndex{24} : BoxIndex{16, 18};
      std::vector<double> sig;
      for (CoordMask bits = 0; bits < 8; ++bits) {
        auto s = solve_box(c, b, box, pattern(bits));
        if (s) sig.push_back(s->sigma);
      }
      REQUIRE(sig.size() == 8);  // ell on tau1 is dropped, so each tau2 pattern repeats
      const auto [mn, mx] = std::minmax_element(sig.begin(), sig.end());
      CHECK(*mx - *mn < 1e-8);
    }
}

TEST_CASE("spectrum of the square below 1.1") {
  const auto sp = spectrum_exact(Cuboid({1, 1}), 1.1);
  REQUIRE(sp.size() == 4);
  CHECK(sp[0].sigma == 0.0);
  CHECK(sp[0].family == Family::constant);
  const double s1 = oracle::square_first().first;
  CHECK(sp[1].sigma == doctest::Approx(s1).epsilon(1e-12));
  CHECK(sp[2].sigma == doctest::Approx(s1).epsilon(1e-12));
  CHECK(sp[1].tau_mask != sp[2].tau_mask);
  CHECK(sp[3].sigma == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sp[3].family == Family::linear);
  CHECK(sp[3].linear_mask == 0b11);
  const auto cl = group_clusters(sp);
  REQUIRE(cl.size() == 3);
  CHECK(cl[1].multiplicity == 2);
  CHECK(count_below(sp, 0.7) == 3);
  CHECK(count_below(sp, 1.0) == 3);
}

TEST_CASE("x1 x2 is a Steklov eigenfunction of the square with sigma 1/a") {
  for (double a : {1.0, 0.6}) {
    auto u = [](double x, double y) { return x * y; };
    const double h = 1e-5;
    for (double t = -a; t <= a; t += a / 4) {
      // faces x = +-a and y = +-a, outward normal derivative by central differences
      for (double s : {-1.0, 1.0}) {
        const double dn_x = s * (u(s * a + h, t) - u(s * a - h, t)) / (2 * h);
        const double dn_y = s * (u(t, s * a + h) - u(t, s * a - h)) / (2 * h);
        CHECK(dn_x == doctest::Approx(u(s * a, t) / a).epsilon(1e-8));
        CHECK(dn_y == doctest::Approx(u(t, s * a) / a).epsilon(1e-8));
      }
      const double lap = (u(t + h, 0.3) - 2 * u(t, 0.3) + u(t - h, 0.3)) / (h * h) +
                         (u(t, 0.3 + h) - 2 * u(t, 0.3) + u(t, 0.3 - h)) / (h * h);
      CHECK(std::abs(lap) < 1e-4);
    }
  }
}

TEST_CASE("tiny sigma_max leaves only the constant") {
  for (auto a : std::vector<std::vector<double>>{{1, 1}, {0.3, 2}, {1, 1, 1}, {0.5, 0.7, 2, 1}}) {
    const auto sp = spectrum_exact(Cuboid(a), 1e-6);
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].sigma == 0.0);
  }
}

TEST_CASE("exact spectrum sorted, every record verified") {
  const Cuboid c({0.9, 1.0, 1.2});
  const auto sp = spectrum_exact(c, 8.0);
  CHECK(std::is_sorted(sp.begin(), sp.end(), [](auto& x, auto& y) { return x.sigma < y.sigma; }));
  for (const auto& r : sp) {
    CHECK(r.sigma < 8.0);
    CHECK(r.multiplicity == 1);
    if (r.family != Family::regular && r.family != Family::zero_box) continue;
    auto b = Bipartition::from_mask(3, r.tau_mask);
    const auto sol = solve_box(c, b, r.box, pattern(r.ell_tau2_mask));
    REQUIRE(sol.has_value());
    CHECK(sol->sigma == doctest::Approx(r.sigma).epsilon(1e-13));
  }
}

TEST_CASE("cube spectrum below 5 agrees with quasi eigenvalues after grouping") {
  const Cuboid cube({1, 1, 1});
  const auto sp = spectrum_exact(cube, 5.0);
  const auto qs = quasi_spectrum(cube, 5.0);
  // every quasi cluster has 2^q exact members nearby
  for (const auto& q : qs) {
    int near = 0;
    for (const auto& r : sp)
      if (r.family == Family::regular && r.tau_mask == q.bipartition.trig_mask() && r.box == q.box) {
        ++near;
        CHECK(std::abs(r.sigma - q.sigma_tilde) < 0.2);
      }
    CHECK(near == q.multiplicity);
  }
}

TEST_CASE("exceptional families") {
  const auto sq = enumerate_exceptional(Cuboid({1, 1}));
  bool has_one = false;
  for (const auto& e : sq)
    if (e.has_linear_factor() && std::abs(e.sigma - 1.0) < 1e-14 && e.linear_mask == 0b11) has_one = true;
  CHECK(has_one);

  for (const auto& e : enumerate_exceptional(Cuboid({1, 2}))) {
    CHECK(mask_size(e.linear_mask) <= 1);
    for (int i = 0; i < 2; ++i)
      if ((e.linear_mask >> i) & 1u) CHECK(e.sigma == doctest::Approx(1.0 / (i == 0 ? 1.0 : 2.0)));
  }

  const Cuboid cube({1, 1, 1});
  const auto ex = enumerate_exceptional(cube);
  CHECK_FALSE(ex.empty());
  CHECK(std::is_sorted(ex.begin(), ex.end(), [](auto& x, auto& y) { return x.sigma < y.sigma; }));
  for (const auto& e : ex) {
    CHECK(e.sigma <= 1.0 + 3.0);
    double sa = 0, sb = 0;
    for (double x : e.alpha) sa += x * x;
    for (double x : e.beta) sb += x * x;
    CHECK(std::abs(sa - sb) <= 1e-9 * std::max(1.0, sa));
    if (e.has_linear_factor()) CHECK(e.sigma == doctest::Approx(1.0));
  }
}
