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

#include "steklov/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "steklov/error.hpp"

namespace steklov {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kRangeSlack = 1e-12;

enum class Kind { sin, cos, sinh, cosh };

struct Factor {
  Kind kind;
  double rate;
};

double log_add(double x, double y) {
  if (x == kNegInf) return y;
  if (y == kNegInf) return x;
  const double m = std::max(x, y);
  return m + std::log1p(std::exp(-std::abs(x - y)));
}

// sinh(z) - z for 0 <= z < 1 by its Taylor series.
double sinh_minus_id(double z) {
  const double z2 = z * z;
  double term = z * z2 / 6.0, sum = 0.0;
  for (int k = 1; term > 1e-18 * sum || sum == 0.0; ++k) {
    sum += term;
    term *= z2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    if (k > 40) break;
  }
  return sum;
}

// log int_lo^hi cosh^2 or sinh^2 (beta x) dx for 0 <= lo < hi.
double log_hyp_integral_positive(bool is_cosh, double beta, double lo, double hi) {
  const double width = hi - lo;
  if (!(width > 0.0)) return kNegInf;
  if (beta == 0.0) return is_cosh ? std::log(width) : kNegInf;
  const double m = 2.0 * beta * hi;
  if (m < 1.0) {
    const double v = is_cosh ? 0.5 * width + (std::sinh(2.0 * beta * hi) - std::sinh(2.0 * beta * lo)) / (4.0 * beta)
                             : (sinh_minus_id(2.0 * beta * hi) - sinh_minus_id(2.0 * beta * lo)) / (4.0 * beta);
    return v > 0.0 ? std::log(v) : kNegInf;
  }
  // sinh(2 beta hi) - sinh(2 beta lo) = (1 - e^{-2 beta width}) (e^{m} + e^{-2 beta lo}) / 2.
  const double log_diff = std::log(-std::expm1(-2.0 * beta * width)) - std::numbers::ln2 + m +
                          std::log1p(std::exp(-m - 2.0 * beta * lo));
  const double ls = log_diff - std::log(4.0 * beta);
  const double rel = 0.5 * width * std::exp(-ls);
  if (is_cosh) return ls + std::log1p(rel);
  return rel < 1.0 ? ls + std::log1p(-rel) : kNegInf;
}

double log_square_integral(const Factor& f, double lo, double hi) {
  if (!(hi > lo)) return kNegInf;
  const double width = hi - lo;
  switch (f.kind) {
    case Kind::sin:
    case Kind::cos: {
      if (f.rate == 0.0) return f.kind == Kind::cos ? std::log(width) : kNegInf;
      const double osc = std::cos(f.rate * (hi + lo)) * std::sin(f.rate * width) / (2.0 * f.rate);
      const double v = 0.5 * width + (f.kind == Kind::sin ? -osc : osc);
      return v > 0.0 ? std::log(v) : kNegInf;
    }
    case Kind::sinh:
    case Kind::cosh: {
      const bool is_cosh = f.kind == Kind::cosh;
      if (lo >= 0.0) return log_hyp_integral_positive(is_cosh, f.rate, lo, hi);
      if (hi <= 0.0) return log_hyp_integral_positive(is_cosh, f.rate, -hi, -lo);
      return log_add(log_hyp_integral_positive(is_cosh, f.rate, 0.0, -lo),
                     log_hyp_integral_positive(is_cosh, f.rate, 0.0, hi));
    }
  }
  return kNegInf;
}

double log_square_value(const Factor& f, double x) {
  switch (f.kind) {
    case Kind::sin: return 2.0 * std::log(std::abs(std::sin(f.rate * x)));
    case Kind::cos: return 2.0 * std::log(std::abs(std::cos(f.rate * x)));
    case Kind::cosh: {
      const double y = std::abs(f.rate * x);
      return 2.0 * (y + std::log1p(std::exp(-2.0 * y)) - std::numbers::ln2);
    }
    case Kind::sinh: {
      const double y = std::abs(f.rate * x);
      if (y == 0.0) return kNegInf;
      if (y < 1.0) return 2.0 * std::log(std::sinh(y));
      return 2.0 * (y + std::log1p(-std::exp(-2.0 * y)) - std::numbers::ln2);
    }
  }
  return kNegInf;
}

std::vector<Factor> factors_of(const Cuboid& c, const EigenSolution& sol) {
  const auto& b = sol.bipartition;
  if (b.dim() != c.dim()) throw ArgumentError("solution dimension does not match cuboid");
  std::vector<Factor> f(static_cast<std::size_t>(c.dim()));
  for (std::size_t k = 0; k < b.tau1.size(); ++k)
    f[static_cast<std::size_t>(b.tau1[k])] = {(sol.box[k] & 1) ? Kind::cos : Kind::sin, sol.alpha[k]};
  for (std::size_t k = 0; k < b.tau2.size(); ++k) {
    const int j = b.tau2[k];
    f[static_cast<std::size_t>(j)] = {sol.ell_tau2.ell(j) ? Kind::cosh : Kind::sinh, sol.beta[k]};
  }
  return f;
}

struct LogNorms {
  std::vector<double> full;  // log int_{-a}^{a} f_i^2
  std::vector<double> edge;  // log f_i(a)^2
  double total = kNegInf;    // log of the full boundary integral
  double face(int k) const {
    double s = edge[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < full.size(); ++i)
      if (static_cast<int>(i) != k) s += full[i];
    return s;
  }
};

LogNorms log_norms(const Cuboid& c, const std::vector<Factor>& f) {
  LogNorms n;
  const int d = c.dim();
  for (int i = 0; i < d; ++i) {
    const double a = c.half_length(i);
    n.full.push_back(log_square_integral(f[static_cast<std::size_t>(i)], -a, a));
    n.edge.push_back(log_square_value(f[static_cast<std::size_t>(i)], a));
  }
  for (int k = 0; k < d; ++k) n.total = log_add(n.total, std::numbers::ln2 + n.face(k));
  if (!std::isfinite(n.total)) throw DomainError("eigenfunction has no finite nonzero boundary norm");
  return n;
}

void check_patch(const Cuboid& c, const Patch& p) {
  const int d = c.dim();
  if (p.axis < 0 || p.axis >= d) throw ArgumentError("patch axis out of range");
  if (p.side != 1 && p.side != -1) throw ArgumentError("patch side must be +1 or -1");
  if (p.ranges.size() != static_cast<std::size_t>(d)) throw ArgumentError("patch needs one range per coordinate");
  for (int i = 0; i < d; ++i) {
    if (i == p.axis) continue;
    const auto& r = p.ranges[static_cast<std::size_t>(i)];
    const double a = c.half_length(i);
    if (!(r.lo <= r.hi) || r.lo < -a * (1.0 + kRangeSlack) || r.hi > a * (1.0 + kRangeSlack))
      throw ArgumentError("patch range outside the face on coordinate " + std::to_string(i));
  }
}

bool overlaps(const Patch& x, const Patch& y) {
  if (x.axis != y.axis || x.side != y.side) return false;
  for (std::size_t i = 0; i < x.ranges.size(); ++i) {
    if (static_cast<int>(i) == x.axis) continue;
    if (!(std::min(x.ranges[i].hi, y.ranges[i].hi) > std::max(x.ranges[i].lo, y.ranges[i].lo))) return false;
  }
  return true;
}

std::vector<int> component_signs(const Bipartition& b, const FacetPatch& U) {
  if (U.signs.empty()) return std::vector<int>(static_cast<std::size_t>(b.q()), 1);
  if (U.signs.size() != static_cast<std::size_t>(b.q())) throw ArgumentError("component signs need one entry per tau2 coordinate");
  for (int s : U.signs)
    if (s != 1 && s != -1) throw ArgumentError("component signs must be +1 or -1");
  return U.signs;
}

}  // namespace

std::vector<Patch> full_boundary(const Cuboid& c) {
  const int d = c.dim();
  std::vector<Interval> ranges;
  for (int i = 0; i < d; ++i) ranges.push_back({-c.half_length(i), c.half_length(i)});
  std::vector<Patch> out;
  for (int k = 0; k < d; ++k)
    for (int side : {-1, 1}) out.push_back({k, side, ranges});
  return out;
}

double boundary_mass(const Cuboid& c, const EigenSolution& sol, const std::vector<Patch>& region) {
  for (const auto& p : region) check_patch(c, p);
  for (std::size_t x = 0; x < region.size(); ++x)
    for (std::size_t y = x + 1; y < region.size(); ++y)
      if (overlaps(region[x], region[y])) throw ArgumentError("region patches overlap");
  const auto f = factors_of(c, sol);
  const LogNorms n = log_norms(c, f);
  double mass = 0.0;
  for (const auto& p : region) {
    double s = n.edge[static_cast<std::size_t>(p.axis)];
    for (int i = 0; i < c.dim(); ++i) {
      if (i == p.axis) continue;
      const auto& r = p.ranges[static_cast<std::size_t>(i)];
      const double a = c.half_length(i);
      s += log_square_integral(f[static_cast<std::size_t>(i)], std::max(r.lo, -a), std::min(r.hi, a));
    }
    mass += std::exp(s - n.total);
  }
  return mass;
}

std::vector<Patch> collar_patches(const Cuboid& c, const Bipartition& b, const FacetPatch& U, double eps) {
  const int d = c.dim();
  if (b.dim() != d) throw ArgumentError("bipartition dimension does not match cuboid");
  if (U.ranges.size() != static_cast<std::size_t>(b.p())) throw ArgumentError("U needs one range per tau1 coordinate");
  const auto signs = component_signs(b, U);
  if (!(eps > 0.0)) throw ArgumentError("epsilon must be positive");
  for (int j : b.tau2)
    if (!(eps < c.half_length(j))) throw ArgumentError("epsilon must be below every hyperbolic half length");

  std::vector<Interval> ranges(static_cast<std::size_t>(d));
  for (std::size_t k = 0; k < b.tau1.size(); ++k) {
    const int i = b.tau1[k];
    const double a = c.half_length(i);
    const auto& r = U.ranges[k];
    if (!(r.lo <= r.hi) || r.lo < -a * (1.0 + kRangeSlack) || r.hi > a * (1.0 + kRangeSlack))
      throw ArgumentError("U range outside the facet on coordinate " + std::to_string(i));
    ranges[static_cast<std::size_t>(i)] = {std::max(r.lo, -a), std::min(r.hi, a)};
  }
  for (std::size_t k = 0; k < b.tau2.size(); ++k) {
    const int j = b.tau2[k];
    const double a = c.half_length(j);
    ranges[static_cast<std::size_t>(j)] = signs[k] > 0 ? Interval{a - eps, a} : Interval{-a, -a + eps};
  }
  std::vector<Patch> out;
  for (std::size_t k = 0; k < b.tau2.size(); ++k) out.push_back({b.tau2[k], signs[k], ranges});
  for (int i : b.tau1) {
    const double a = c.half_length(i);
    const auto& r = ranges[static_cast<std::size_t>(i)];
    if (r.lo <= -a) out.push_back({i, -1, ranges});
    if (r.hi >= a) out.push_back({i, 1, ranges});
  }
  return out;
}

double off_collar_mass(const Cuboid& c, const EigenSolution& sol, double eps) {
  const auto& b = sol.bipartition;
  for (int j : b.tau2)
    if (!(eps > 0.0) || !(eps < c.half_length(j))) throw ArgumentError("epsilon must lie in (0, min hyperbolic half length)");
  const auto f = factors_of(c, sol);
  const LogNorms n = log_norms(c, f);
  // log of the fraction of int f_j^2 lying in |x_j| <= a_j - eps.
  std::vector<double> inner(static_cast<std::size_t>(c.dim()), kNegInf);
  for (int j : b.tau2) {
    const double a = c.half_length(j);
    inner[static_cast<std::size_t>(j)] =
        log_square_integral(f[static_cast<std::size_t>(j)], -(a - eps), a - eps) - n.full[static_cast<std::size_t>(j)];
  }
  double mass = 0.0;
  for (int k = 0; k < c.dim(); ++k) {
    double log_keep = 0.0;  // log of the fraction inside the collar
    for (int j : b.tau2)
      if (j != k) log_keep += std::log1p(-std::exp(inner[static_cast<std::size_t>(j)]));
    const double outside = -std::expm1(log_keep);
    mass += 2.0 * std::exp(n.face(k) - n.total) * outside;
  }
  return mass;
}

double target_ratio(const Cuboid& c, const Bipartition& b, const FacetPatch& U) {
  if (b.dim() != c.dim()) throw ArgumentError("bipartition dimension does not match cuboid");
  if (U.ranges.size() != static_cast<std::size_t>(b.p())) throw ArgumentError("U needs one range per tau1 coordinate");
  component_signs(b, U);
  double r = std::ldexp(1.0, -b.q());
  for (std::size_t k = 0; k < b.tau1.size(); ++k) {
    const double a = c.half_length(b.tau1[k]);
    const auto& u = U.ranges[k];
    if (!(u.lo <= u.hi) || u.lo < -a * (1.0 + kRangeSlack) || u.hi > a * (1.0 + kRangeSlack))
      throw ArgumentError("U range outside the facet on coordinate " + std::to_string(b.tau1[k]));
    r *= (std::min(u.hi, a) - std::max(u.lo, -a)) / (2.0 * a);
  }
  return r;
}

ConcentrationResult concentration_sequence(const Cuboid& c, const Bipartition& b, const FacetPatch& U,
                                           double eps, int k_max, int k_min) {
  if (k_min < 1 || k_max < k_min) throw ArgumentError("need 1 <= k_min <= k_max");
  const auto patches = collar_patches(c, b, U, eps);
  const double target = target_ratio(c, b, U);
  SignPattern ell;
  for (int j : b.tau2) ell.set(j, 1);
  ConcentrationResult out;
  for (int k = k_min; k <= k_max; ++k) {
    const BoxIndex box(static_cast<std::size_t>(b.p()), 2 * static_cast<std::int64_t>(k));
    try {
      const auto sol = solve_box(c, b, box, ell);
      if (!sol) {
        out.diagnostic = "no solution in box for k = " + std::to_string(k);
        break;
      }
      MassReport r;
      r.k = k;
      r.sigma = sol->sigma;
      r.mass_in_U_eps = boundary_mass(c, *sol, patches);
      r.target_ratio = target;
      r.epsilon = eps;
      r.off_collar_mass = off_collar_mass(c, *sol, eps);
      out.reports.push_back(r);
    } catch (const std::exception& e) {
      out.diagnostic = "k = " + std::to_string(k) + ": " + e.what();
      break;
    }
  }
  return out;
}

}  // namespace steklov
