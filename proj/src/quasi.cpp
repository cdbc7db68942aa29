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

#include "steklov/quasi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steklov/error.hpp"
#include "steklov/parallel.hpp"

namespace steklov {
namespace {

void check_box(const Bipartition& b, const BoxIndex& box) {
  if (box.size() != static_cast<std::size_t>(b.p())) throw ArgumentError("box length must equal p");
  for (auto m : box)
    if (m < 1) throw ArgumentError("approximate eigenvalues need strictly positive box entries");
}

double sum_alpha_tilde_sq(std::span<const double> a, std::span<const std::int64_t> box, double sqrt_q) {
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < box.size(); ++i) {
    const double w = static_cast<double>(box[i]) / a[i];
    norm_sq += w * w;
  }
  const double norm = std::sqrt(norm_sq);
  double s = 0.0;
  for (std::size_t i = 0; i < box.size(); ++i) {
    const double m = static_cast<double>(box[i]);
    const double x = (m * std::numbers::pi / 2.0 + std::atan2(sqrt_q * m / a[i], norm)) / a[i];
    s += x * x;
  }
  return s;
}

// Half lengths along tau1, in tau1 order.
std::vector<double> trig_lengths(const Cuboid& c, const Bipartition& b) {
  std::vector<double> a;
  for (int i : b.tau1) a.push_back(c.half_length(i));
  return a;
}

// Visits every strictly positive box with sum alpha_tilde^2 < limit, passing
// the box and its sum. The last coordinate runs up to the first failing
// entry; sum alpha_tilde^2 is increasing in each entry.
template <class Visitor>
void for_each_quasi_box(std::span<const double> a, double sqrt_q, double limit, Visitor&& visit) {
  const std::size_t p = a.size();
  std::vector<double> w(p);
  for (std::size_t i = 0; i < p; ++i) w[i] = std::numbers::pi / (2.0 * a[i]);
  BoxIndex box(p, 1);
  auto last_row = [&](const BoxIndex& prefix) {
    std::copy(prefix.begin(), prefix.end(), box.begin());
    for (std::int64_t m = 1;; ++m) {
      box[p - 1] = m;
      const double s = sum_alpha_tilde_sq(a, box, sqrt_q);
      if (!(s < limit)) break;
      visit(static_cast<const BoxIndex&>(box), s);
    }
  };
  if (p == 1) {
    last_row(BoxIndex{});
    return;
  }
  const double budget = limit - w[p - 1] * w[p - 1];
  if (!(budget > 0.0)) return;
  for_each_box_in_ball(std::span<const double>(w.data(), p - 1), budget, 1, last_row);
}

// Number of entries m >= 1 in the last coordinate with sum < limit.
std::int64_t last_row_count(std::span<const double> a, double sqrt_q, double limit, BoxIndex& box) {
  const std::size_t p = a.size();
  const double wl = std::numbers::pi / (2.0 * a[p - 1]);
  double corner = 0.0;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    const double x = static_cast<double>(box[i]) * std::numbers::pi / (2.0 * a[i]);
    corner += x * x;
  }
  const double rem = limit - corner;
  if (!(rem > 0.0)) return 0;
  // The corner bound alpha_tilde > m w gives an entry that certainly fails.
  std::int64_t lo = 0;
  std::int64_t hi = static_cast<std::int64_t>(std::floor(std::sqrt(rem) / wl)) + 1;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    box[p - 1] = mid;
    if (sum_alpha_tilde_sq(a, box, sqrt_q) < limit) lo = mid;
    else hi = mid;
  }
  return lo;
}

std::int64_t count_bipartition_pruned(const Cuboid& c, const Bipartition& b, double sigma) {
  const auto a = trig_lengths(c, b);
  const double sqrt_q = std::sqrt(static_cast<double>(b.q()));
  const double limit = b.q() * sigma * sigma;
  const std::size_t p = a.size();
  BoxIndex box(p, 1);
  if (p == 1) return last_row_count(a, sqrt_q, limit, box);
  std::vector<double> w(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) w[i] = std::numbers::pi / (2.0 * a[i]);
  const double wl = std::numbers::pi / (2.0 * a[p - 1]);
  std::int64_t n = 0;
  for_each_box_in_ball(w, limit - wl * wl, 1, [&](const BoxIndex& prefix) {
    std::copy(prefix.begin(), prefix.end(), box.begin());
    n += last_row_count(a, sqrt_q, limit, box);
  });
  return n;
}

std::int64_t count_bipartition_filtered(const Cuboid& c, const Bipartition& b, double sigma) {
  const double limit = b.q() * sigma * sigma;
  const auto a = trig_lengths(c, b);
  const double sqrt_q = std::sqrt(static_cast<double>(b.q()));
  std::int64_t n = 0;
  for (const auto& box : boxes_within(c, b, sigma, default_margin(c)))
    if (sum_alpha_tilde_sq(a, box, sqrt_q) < limit) ++n;
  return n;
}

}  // namespace

std::vector<double> alpha_tilde(const Cuboid& c, const Bipartition& b, const BoxIndex& box) {
  if (b.dim() != c.dim()) throw ArgumentError("bipartition dimension does not match cuboid");
  check_box(b, box);
  const auto a = trig_lengths(c, b);
  const double sqrt_q = std::sqrt(static_cast<double>(b.q()));
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < box.size(); ++i) {
    const double w = static_cast<double>(box[i]) / a[i];
    norm_sq += w * w;
  }
  const double norm = std::sqrt(norm_sq);
  std::vector<double> out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    const double m = static_cast<double>(box[i]);
    out.push_back((m * std::numbers::pi / 2.0 + std::atan2(sqrt_q * m / a[i], norm)) / a[i]);
  }
  return out;
}

double sigma_tilde(const Cuboid& c, const Bipartition& b, const BoxIndex& box) {
  double s = 0.0;
  for (double x : alpha_tilde(c, b, box)) s += x * x;
  return std::sqrt(s / b.q());
}

std::int64_t count_p(const Cuboid& c, int p, double sigma, CountMode mode) {
  const int d = c.dim();
  if (p < 1 || p > d - 1) throw ArgumentError("p must satisfy 1 <= p <= d-1");
  if (!(sigma > 0.0)) return 0;
  std::int64_t n = 0;
  for (const auto& b : bipartitions(d, p)) {
    const std::int64_t k = mode == CountMode::pruned ? count_bipartition_pruned(c, b, sigma)
                                                     : count_bipartition_filtered(c, b, sigma);
    n += k << b.q();
  }
  return n;
}

std::int64_t count_total(const Cuboid& c, double sigma, CountMode mode) {
  if (!(sigma > 0.0)) throw ArgumentError("sigma must be positive");
  std::int64_t n = 1;
  for (int p = 1; p < c.dim(); ++p) n += count_p(c, p, sigma, mode);
  return n;
}

std::vector<QuasiEigenvalue> quasi_spectrum(const Cuboid& c, double sigma_max) {
  if (!(sigma_max > 0.0)) throw ArgumentError("sigma_max must be positive");
  std::vector<QuasiEigenvalue> out;
  for (int p = 1; p < c.dim(); ++p) {
    for (const auto& b : bipartitions(c.dim(), p)) {
      const auto a = trig_lengths(c, b);
      const double sqrt_q = std::sqrt(static_cast<double>(b.q()));
      for_each_quasi_box(a, sqrt_q, b.q() * sigma_max * sigma_max, [&](const BoxIndex& box, double s) {
        QuasiEigenvalue e;
        e.sigma_tilde = std::sqrt(s / b.q());
        if (!(e.sigma_tilde < sigma_max)) return;
        e.alpha_tilde = alpha_tilde(c, b, box);
        e.box = box;
        e.bipartition = b;
        e.multiplicity = std::int64_t{1} << b.q();
        out.push_back(std::move(e));
      });
    }
  }
  std::sort(out.begin(), out.end(), [](const QuasiEigenvalue& x, const QuasiEigenvalue& y) {
    if (x.sigma_tilde != y.sigma_tilde) return x.sigma_tilde < y.sigma_tilde;
    const auto mx = x.bipartition.trig_mask(), my = y.bipartition.trig_mask();
    if (mx != my) return mx < my;
    return x.box < y.box;
  });
  return out;
}

QuasiCensus::QuasiCensus(const Cuboid& c, double sigma_ceiling) : ceiling_(sigma_ceiling) {
  if (!(sigma_ceiling > 0.0) || !std::isfinite(sigma_ceiling))
    throw ArgumentError("census ceiling must be positive and finite");
  std::vector<Bipartition> parts;
  for (int p = 1; p < c.dim(); ++p)
    for (auto& b : bipartitions(c.dim(), p)) parts.push_back(std::move(b));

  std::vector<std::vector<std::pair<double, std::int64_t>>> slots(parts.size());
  parallel_for(parts.size(), [&](std::size_t t) {
    const auto& b = parts[t];
    const auto a = trig_lengths(c, b);
    const double sqrt_q = std::sqrt(static_cast<double>(b.q()));
    const std::int64_t weight = std::int64_t{1} << b.q();
    for_each_quasi_box(a, sqrt_q, b.q() * sigma_ceiling * sigma_ceiling, [&](const BoxIndex&, double s) {
      const double v = std::sqrt(s / b.q());
      if (v < sigma_ceiling) slots[t].emplace_back(v, weight);
    });
  });
  std::vector<std::pair<double, std::int64_t>> all;
  for (auto& s : slots) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  values_.reserve(all.size());
  prefix_.reserve(all.size() + 1);
  prefix_.push_back(0);
  for (const auto& [v, wgt] : all) {
    values_.push_back(v);
    prefix_.push_back(prefix_.back() + wgt);
  }
}

std::int64_t QuasiCensus::count(double sigma) const {
  if (!(sigma > 0.0)) throw ArgumentError("sigma must be positive");
  if (sigma > ceiling_) throw ArgumentError("sigma exceeds the census ceiling");
  const auto k = std::lower_bound(values_.begin(), values_.end(), sigma) - values_.begin();
  return 1 + prefix_[static_cast<std::size_t>(k)];
}

}  // namespace steklov
