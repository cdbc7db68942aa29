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

#include "steklov/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <tuple>

#include "steklov/error.hpp"
#include "steklov/quadrature.hpp"

namespace steklov {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kQmcPoints = 1 << 15;
constexpr int kQmcReplicates = 16;

GEstimate g_tensor(int p, int q, int nodes) {
  const int dim = p - 1;
  const GaussRule g = gauss_legendre(nodes);
  const double half = kPi / 4.0;
  std::vector<double> s(static_cast<std::size_t>(nodes));
  for (int k = 0; k < nodes; ++k) s[static_cast<std::size_t>(k)] = std::sin(half + half * g.nodes[static_cast<std::size_t>(k)]);
  const double sqrt_q = std::sqrt(static_cast<double>(q));
  auto level = [&](auto&& self, int axis, double prod, double weight) -> double {
    double acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
      const double sk = s[static_cast<std::size_t>(k)];
      const double pr = prod * sk;
      const double wt = weight * std::pow(sk, axis + 1);
      const double v = axis + 1 == dim ? std::atan(sqrt_q * pr) * wt : self(self, axis + 1, pr, wt);
      acc += g.weights[static_cast<std::size_t>(k)] * v;
    }
    return acc * half;
  };
  return {level(level, 0, 1.0, 1.0), 0.0, false};
}

GEstimate g_sampled(int p, int q) {
  const double sqrt_q = std::sqrt(static_cast<double>(q));
  auto f = [sqrt_q](std::span<const double> th) {
    double prod = 1.0, weight = 1.0;
    for (std::size_t k = 0; k < th.size(); ++k) {
      const double sk = std::sin(th[k]);
      prod *= sk;
      weight *= std::pow(sk, static_cast<double>(k + 1));
    }
    return std::atan(sqrt_q * prod) * weight;
  };
  const auto e = qmc_integrate(f, p - 1, 0.0, kPi / 2.0, kQmcPoints, kQmcReplicates,
                               kDefaultQmcSeed ^ (static_cast<std::uint64_t>(p) << 32) ^ static_cast<std::uint64_t>(q));
  return {e.value, e.standard_error, true};
}

// Unit vector on the positive orthant of S^{p-1} from p-1 angles, and the
// surface Jacobian.
double sphere_point(std::span<const double> theta, std::vector<double>& u) {
  const std::size_t p = theta.size() + 1;
  u.resize(p);
  double sprod = 1.0, jac = 1.0;
  for (std::size_t k = 0; k + 1 < p; ++k) {
    u[k] = sprod * std::cos(theta[k]);
    const double s = std::sin(theta[k]);
    if (k + 2 < p) jac *= std::pow(s, static_cast<double>(p - 2 - k));
    sprod *= s;
  }
  u[p - 1] = sprod;
  return jac;
}

std::vector<double> trig_lengths(const Cuboid& c, const Bipartition& b) {
  std::vector<double> a;
  for (int i : b.tau1) a.push_back(c.half_length(i));
  return a;
}

double sum_of_cofactors(std::span<const double> a) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    double prod = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != j) prod *= a[i];
    s += prod;
  }
  return s;
}

// Positive root rho of r^2 + 2 b r + c = 0 along direction u.
double radial_root(std::span<const double> a, std::span<const double> u, double sqrt_q, double sigma) {
  double bsum = 0.0, h = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double A = std::atan(sqrt_q * u[i]);
    bsum += u[i] * A / a[i];
    h += A * A / (a[i] * a[i]);
  }
  const double b = bsum / (sqrt_q * sigma);
  const double c = h / (sqrt_q * sqrt_q * sigma * sigma) - 1.0;
  if (!(c < 0.0)) throw DomainError("E_sigma has no positive radial root; sigma too small");
  return -c / (b + std::sqrt(b * b - c));
}

std::mutex g_cache_mu;
std::map<std::tuple<int, int, int>, GEstimate> g_cache;

}  // namespace

double unit_ball_volume(int k) {
  if (k < 0) throw ArgumentError("unit ball dimension must be nonnegative");
  return std::pow(kPi, k / 2.0) / std::tgamma(k / 2.0 + 1.0);
}

GEstimate g_constant_estimate(int p, int q, int nodes) {
  if (p < 2) throw ArgumentError("G_{p,q} needs p >= 2");
  if (q < 1) throw ArgumentError("G_{p,q} needs q >= 1");
  if (nodes < 2) throw ArgumentError("quadrature needs at least 2 nodes");
  if (p - 1 > kMaxTensorDim) nodes = 0;
  const auto key = std::make_tuple(p, q, nodes);
  {
    std::lock_guard lock(g_cache_mu);
    if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  }
  const GEstimate e = nodes == 0 ? g_sampled(p, q) : g_tensor(p, q, nodes);
  std::lock_guard lock(g_cache_mu);
  g_cache.emplace(key, e);
  return e;
}

double g_constant(int p, int q, int nodes) { return g_constant_estimate(p, q, nodes).value; }

double weyl_c1(int d) {
  if (d < 2) throw ArgumentError("dimension must be at least 2");
  return unit_ball_volume(d - 1) / std::pow(2.0 * kPi, d - 1);
}

WeylConstants weyl_constants(int d, int nodes) {
  if (d < 3) throw ArgumentError("the two-term law needs d >= 3");
  if (d > kMaxDim) throw ArgumentError("dimension out of range");
  WeylConstants w;
  w.d = d;
  w.C1 = weyl_c1(d);
  for (int p = 2; p <= d - 1; ++p) {
    const int q = d - p;
    const GEstimate g = g_constant_estimate(p, q, nodes);
    w.G[{p, q}] = g;
    PConstants cp;
    cp.p = p;
    cp.q = q;
    const double root = std::pow(static_cast<double>(q), p / 2.0);
    cp.c_prime = -(q + 1) * root * g.value / std::pow(kPi, p);
    cp.c_double_prime = -(q + 1) * root * unit_ball_volume(p - 1) / (4.0 * std::pow(2.0 * kPi, p - 1));
    cp.c = cp.c_prime + cp.c_double_prime;
    w.c_p.push_back(cp);
  }
  const double lead = std::pow(2.0, (d - 2) / 2.0) * unit_ball_volume(d - 2) / std::pow(2.0 * kPi, d - 2);
  const double g_top = w.G.at({d - 1, 1}).value;
  w.C2 = lead - 2.0 * g_top / std::pow(kPi, d - 1) - unit_ball_volume(d - 2) / (2.0 * std::pow(2.0 * kPi, d - 2));
  const PConstants& top = w.c_p.back();
  w.C2_assembly = top.c_prime + top.c_double_prime + lead;
  return w;
}

double remainder_exponent(int d) {
  if (d < 2) throw ArgumentError("dimension must be at least 2");
  if (d == 2) return 0.0;
  if (d == 3) return 2.0 / 3.0;
  return d - 2.0 - 1.0 / (d - 1.0);
}

bool esigma_contains(const Cuboid& c, const Bipartition& b, double sigma, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(b.p())) throw ArgumentError("point length must equal p");
  if (!(sigma > 0.0)) throw ArgumentError("sigma must be positive");
  const auto a = trig_lengths(c, b);
  const double sqrt_q = std::sqrt(static_cast<double>(b.q()));
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (x[i] < 0.0) throw ArgumentError("E_sigma membership is tested on the positive orthant");
    norm_sq += (x[i] / a[i]) * (x[i] / a[i]);
  }
  if (!(norm_sq > 0.0)) return true;
  const double norm = std::sqrt(norm_sq);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double y = x[i] * kPi / (2.0 * a[i] * sqrt_q);
    const double A = std::atan(sqrt_q * (x[i] / a[i]) / norm);
    const double t = y + A / (a[i] * sqrt_q * sigma);
    s += t * t;
  }
  return s < 1.0;
}

double esigma_volume(const Cuboid& c, const Bipartition& b, double sigma, int nodes) {
  if (!(sigma > 0.0)) throw ArgumentError("sigma must be positive");
  const int p = b.p();
  const auto a = trig_lengths(c, b);
  const double sqrt_q = std::sqrt(static_cast<double>(b.q()));
  double a_prod = 1.0;
  for (double x : a) a_prod *= x;
  const double scale = std::pow(4.0 * sqrt_q / kPi, p) * a_prod;
  if (p == 1) {
    const std::vector<double> u{1.0};
    return scale * radial_root(a, u, sqrt_q, sigma);
  }
  std::vector<double> u;
  auto f = [&](std::span<const double> theta) {
    const double jac = sphere_point(theta, u);
    return std::pow(radial_root(a, u, sqrt_q, sigma), p) / p * jac;
  };
  return scale * tensor_integrate(f, p - 1, 0.0, kPi / 2.0, nodes);
}

EsigmaExpansion esigma_expansion(const Cuboid& c, const Bipartition& b, int nodes) {
  const int p = b.p();
  const auto a = trig_lengths(c, b);
  const double sqrt_q = std::sqrt(static_cast<double>(b.q()));
  double a_prod = 1.0;
  for (double x : a) a_prod *= x;
  EsigmaExpansion e;
  e.leading = std::pow(2.0 * sqrt_q / kPi, p) * unit_ball_volume(p) * a_prod;
  // For p = 1 the angular integral degenerates to the single direction u = 1.
  const double g = p == 1 ? std::atan(sqrt_q) : g_constant(p, b.q(), nodes);
  e.first_order = std::pow(4.0 * sqrt_q / kPi, p) / sqrt_q * g * sum_of_cofactors(a);
  return e;
}

double hyperplane_overcount_leading(const Cuboid& c, const Bipartition& b) {
  const int p = b.p();
  const auto a = trig_lengths(c, b);
  return std::pow(static_cast<double>(b.q()), p / 2.0) * std::pow(2.0, p) * unit_ball_volume(p - 1) /
         (4.0 * std::pow(2.0 * kPi, p - 1)) * sum_of_cofactors(a);
}

double hyperplane_overcount_direct(const Cuboid& c, const Bipartition& b, double sigma) {
  if (!(sigma > 0.0)) throw ArgumentError("sigma must be positive");
  const int p = b.p();
  const auto a = trig_lengths(c, b);
  double total = 0.0;
  for (std::uint32_t zero = 1; zero + 1 < (std::uint32_t{1} << p); ++zero) {
    std::vector<std::size_t> free_pos;
    std::vector<double> w;
    for (int k = 0; k < p; ++k) {
      if (!((zero >> k) & 1u)) {
        free_pos.push_back(static_cast<std::size_t>(k));
        w.push_back(kPi / (2.0 * a[static_cast<std::size_t>(k)]));
      }
    }
    const int k_zero = p - static_cast<int>(free_pos.size());
    std::vector<double> x(static_cast<std::size_t>(p), 0.0);
    std::int64_t n = 0;
    for_each_box_in_ball(w, b.q() * sigma * sigma, 1, [&](const BoxIndex& sub) {
      for (std::size_t t = 0; t < free_pos.size(); ++t) x[free_pos[t]] = static_cast<double>(sub[t]) / sigma;
      if (esigma_contains(c, b, sigma, x)) ++n;
    });
    total += std::ldexp(static_cast<double>(n), -k_zero);
  }
  return total;
}

std::vector<WeylRow> remainder_table(const Cuboid& c, std::span<const double> sigma_grid, int nodes) {
  std::vector<WeylRow> rows;
  if (sigma_grid.empty()) return rows;
  for (std::size_t i = 0; i < sigma_grid.size(); ++i) {
    if (!(sigma_grid[i] > 0.0) || !std::isfinite(sigma_grid[i]))
      throw ArgumentError("sigma grid values must be positive and finite");
    if (i > 0 && sigma_grid[i] < sigma_grid[i - 1]) throw ArgumentError("sigma grid must be nondecreasing");
  }
  const int d = c.dim();
  const double c1 = weyl_c1(d);
  const double c2 = d >= 3 ? weyl_constants(d, nodes).C2 : 0.0;
  const double area = facet_volume(c, 1);
  const double edges = d >= 3 ? facet_volume(c, 2) : 0.0;
  const double eta = remainder_exponent(d);
  const QuasiCensus census(c, sigma_grid.back());
  rows.reserve(sigma_grid.size());
  for (double s : sigma_grid) {
    WeylRow r;
    r.sigma = s;
    r.N = census.count(s);
    r.main = c1 * area * std::pow(s, d - 1);
    r.second = d >= 3 ? c2 * edges * std::pow(s, d - 2) : 0.0;
    r.R = (static_cast<double>(r.N) - r.main - r.second) / std::pow(s, eta);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace steklov
