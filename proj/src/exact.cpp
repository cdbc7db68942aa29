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

#include "steklov/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "steklov/error.hpp"
#include "steklov/factors1d.hpp"
#include "steklov/parallel.hpp"
#include "steklov/roots.hpp"

namespace steklov {
namespace {

constexpr double kSigmaFloor = 1e-9;
constexpr double kLinearHarmonicityTol = 1e-9;

struct HypAxis {
  double a;
  int ell;
};

// The per-box reduced system: alpha_i(sigma) on each trigonometric branch,
// beta_j(sigma) on each hyperbolic axis.
struct ReducedSystem {
  std::vector<TrigBranch> trig;
  std::vector<HypAxis> hyp;

  ReducedSystem(const Cuboid& c, const Bipartition& b, const BoxIndex& box, SignPattern ell) {
    if (box.size() != static_cast<std::size_t>(b.p())) throw ArgumentError("box length must equal p");
    for (std::size_t k = 0; k < box.size(); ++k) {
      if (box[k] < 0) throw ArgumentError("box entries must be nonnegative");
      trig.push_back({c.half_length(b.tau1[k]), box[k]});
    }
    for (int j : b.tau2) hyp.push_back({c.half_length(j), ell.ell(j)});
  }

  // Smallest sigma at which every beta is defined.
  double hyp_floor() const {
    double f = 0.0;
    for (const auto& h : hyp)
      if (h.ell == 0) f = std::max(f, 1.0 / h.a);
    return f;
  }

  // Largest sigma reachable by every alpha (box 0 branches stop at 1/a).
  double trig_cap() const {
    double cap = std::numeric_limits<double>::infinity();
    for (const auto& t : trig) cap = std::min(cap, t.sup());
    return cap;
  }

  static double alpha_at(const TrigBranch& t, double sigma) {
    if (t.box == 0 && sigma >= t.sup()) return 0.0;
    return invert_trig(t, sigma);
  }

  void rates(double sigma, std::vector<double>& alpha, std::vector<double>& beta) const {
    alpha.resize(trig.size());
    beta.resize(hyp.size());
    for (std::size_t i = 0; i < trig.size(); ++i) alpha[i] = alpha_at(trig[i], sigma);
    for (std::size_t j = 0; j < hyp.size(); ++j) beta[j] = invert_hyp(hyp[j].a, hyp[j].ell, sigma);
  }

  // {F/S, F'/S} with S = sum alpha^2 + sum beta^2; the scaling keeps the sign
  // and the root while making the stopping tolerance relative.
  std::pair<double, double> normalized(double sigma) const {
    double sa = 0.0, sb = 0.0, da = 0.0, db = 0.0;
    for (const auto& t : trig) {
      const double x = alpha_at(t, sigma);
      sa += x * x;
      da += x > 0.0 ? 2.0 * x / t.derivative(x) : std::numeric_limits<double>::quiet_NaN();
    }
    for (const auto& h : hyp) {
      const double x = invert_hyp(h.a, h.ell, sigma);
      sb += x * x;
      const double dh = hyp_factor_derivative(h.a, h.ell, x);
      db += dh > 0.0 ? 2.0 * x / dh : std::numeric_limits<double>::quiet_NaN();
    }
    const double s = sa + sb;
    if (!(s > 0.0)) return {0.0, std::numeric_limits<double>::quiet_NaN()};
    return {(sa - sb) / s, (da - db) / s};
  }
};

bool nearly_equal(double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(x, y); }

CoordMask mask_of(const std::vector<int>& idx) {
  CoordMask m = 0;
  for (int i : idx) m |= CoordMask{1} << i;
  return m;
}

// Sign patterns over the coordinates of `mask`, in increasing bit order.
std::vector<SignPattern> sign_patterns(CoordMask mask) {
  std::vector<int> coords;
  for (int i = 0; i < kMaxDim; ++i)
    if ((mask >> i) & 1u) coords.push_back(i);
  std::vector<SignPattern> out;
  const std::uint64_t n = std::uint64_t{1} << coords.size();
  for (std::uint64_t k = 0; k < n; ++k) {
    SignPattern s;
    for (std::size_t t = 0; t < coords.size(); ++t) s.set(coords[t], static_cast<int>((k >> t) & 1u));
    out.push_back(s);
  }
  return out;
}

void append_linear_family(const Cuboid& c, CoordMask linear, std::vector<ExceptionalEigenvalue>& out) {
  const int d = c.dim();
  const int first = std::countr_zero(linear);
  const double sigma = 1.0 / c.half_length(first);
  const CoordMask all = (d == kMaxDim) ? ~CoordMask{0} : ((CoordMask{1} << d) - 1);
  const CoordMask rest = all & ~linear;
  if (rest == 0) {
    ExceptionalEigenvalue e;
    e.sigma = sigma;
    e.linear_mask = linear;
    out.push_back(std::move(e));
    return;
  }
  if (mask_size(rest) < 2) return;
  // Every nonempty proper subset of the remaining coordinates is a candidate
  // trigonometric set.
  for (CoordMask trig = (rest - 1) & rest; trig != 0; trig = (trig - 1) & rest) {
    const CoordMask hyp = rest & ~trig;
    if (hyp == 0) continue;
    std::vector<int> t_idx, h_idx;
    for (int i = 0; i < d; ++i) {
      if ((trig >> i) & 1u) t_idx.push_back(i);
      if ((hyp >> i) & 1u) h_idx.push_back(i);
    }
    for (SignPattern ell : sign_patterns(hyp)) {
      std::vector<double> beta;
      double budget = 0.0;
      bool feasible = true;
      for (int j : h_idx) {
        const double a = c.half_length(j);
        if (ell.ell(j) == 0 && !(sigma > 1.0 / a && !nearly_equal(sigma, 1.0 / a))) {
          feasible = false;
          break;
        }
        const double b = invert_hyp(a, ell.ell(j), sigma);
        beta.push_back(b);
        budget += b * b;
      }
      if (!feasible || !(budget > 0.0)) continue;
      std::vector<double> w;
      for (int i : t_idx) w.push_back(std::numbers::pi / (2.0 * c.half_length(i)));
      for_each_box_in_ball(w, budget, 0, [&](const BoxIndex& box) {
        std::vector<double> alpha;
        double sa = 0.0;
        for (std::size_t k = 0; k < box.size(); ++k) {
          const TrigBranch br{c.half_length(t_idx[k]), box[k]};
          if (!(sigma < br.sup())) return;
          const double x = invert_trig(br, sigma);
          alpha.push_back(x);
          sa += x * x;
        }
        if (std::abs(sa - budget) > kLinearHarmonicityTol * budget) return;
        ExceptionalEigenvalue e;
        e.sigma = sigma;
        e.linear_mask = linear;
        e.trig_mask = trig;
        e.hyp_mask = hyp;
        e.box = box;
        SignPattern full = ell;
        for (std::size_t k = 0; k < box.size(); ++k) full.set(t_idx[k], static_cast<int>(box[k] & 1));
        e.ell = full;
        e.alpha = std::move(alpha);
        e.beta = beta;
        out.push_back(std::move(e));
      });
    }
  }
}

void append_zero_boxes(const Cuboid& c, const Bipartition& b, std::vector<ExceptionalEigenvalue>& out) {
  const int p = b.p();
  const auto ells = sign_patterns(mask_of(b.tau2));
  for (std::uint32_t zero = 1; zero < (std::uint32_t{1} << p); ++zero) {
    double cap = std::numeric_limits<double>::infinity();
    std::vector<int> free_pos;
    std::vector<double> w;
    for (int k = 0; k < p; ++k) {
      const double a = c.half_length(b.tau1[k]);
      if ((zero >> k) & 1u) {
        cap = std::min(cap, 1.0 / a);
      } else {
        free_pos.push_back(k);
        w.push_back(std::numbers::pi / (2.0 * a));
      }
    }
    double budget = 0.0;
    for (int j : b.tau2) {
      const double x = invert_hyp(c.half_length(j), 1, cap);
      budget += x * x;
    }
    auto try_box = [&](const BoxIndex& box) {
      for (SignPattern ell : ells) {
        auto sol = solve_box(c, b, box, ell);
        if (!sol) continue;
        ExceptionalEigenvalue e;
        e.sigma = sol->sigma;
        e.trig_mask = b.trig_mask();
        e.hyp_mask = mask_of(b.tau2);
        e.box = box;
        SignPattern full = ell;
        for (int k = 0; k < p; ++k) full.set(b.tau1[k], static_cast<int>(box[k] & 1));
        e.ell = full;
        e.alpha = std::move(sol->alpha);
        e.beta = std::move(sol->beta);
        out.push_back(std::move(e));
      }
    };
    BoxIndex box(static_cast<std::size_t>(p), 0);
    if (free_pos.empty()) {
      try_box(box);
      continue;
    }
    for_each_box_in_ball(w, budget, 1, [&](const BoxIndex& sub) {
      for (std::size_t t = 0; t < free_pos.size(); ++t) box[free_pos[t]] = sub[t];
      try_box(box);
    });
  }
}

bool record_less(const EigenvalueRecord& x, const EigenvalueRecord& y) {
  if (x.sigma != y.sigma) return x.sigma < y.sigma;
  if (x.tau_mask != y.tau_mask) return x.tau_mask < y.tau_mask;
  if (x.box != y.box) return x.box < y.box;
  if (x.ell_tau2_mask != y.ell_tau2_mask) return x.ell_tau2_mask < y.ell_tau2_mask;
  return x.linear_mask < y.linear_mask;
}

}  // namespace

double compatibility_gap(const Cuboid& c, const Bipartition& b, const BoxIndex& box,
                         SignPattern ell_tau2, double sigma) {
  const ReducedSystem sys(c, b, box, ell_tau2);
  std::vector<double> alpha, beta;
  sys.rates(sigma, alpha, beta);
  double f = 0.0;
  for (double x : alpha) f += x * x;
  for (double x : beta) f -= x * x;
  return f;
}

std::optional<EigenSolution> solve_box(const Cuboid& c, const Bipartition& b, const BoxIndex& box,
                                       SignPattern ell_tau2) {
  if (b.dim() != c.dim()) throw ArgumentError("bipartition dimension does not match cuboid");
  const SignPattern ell = ell_tau2.restricted(mask_of(b.tau2));
  const ReducedSystem sys(c, b, box, ell);
  auto fdf = [&](double s) { return sys.normalized(s); };

  const double lo = std::max(sys.hyp_floor(), kSigmaFloor);
  const double cap = sys.trig_cap();
  if (!(lo < cap)) return std::nullopt;
  if (!(fdf(lo).first > 0.0)) return std::nullopt;

  double hi = cap;
  if (std::isfinite(cap)) {
    if (!(fdf(cap).first < 0.0)) return std::nullopt;
  } else {
    double corner = 0.0;
    for (const auto& t : sys.trig) corner += t.right() * t.right();
    hi = std::max(2.0 * lo, std::sqrt(corner / b.q()));
    int grow = 0;
    while (!(fdf(hi).first < 0.0)) {
      if (++grow > 200) throw ConvergenceError("solve_box: no upper bracket", lo, hi);
      hi *= 2.0;
    }
  }
  RootOptions opt;
  opt.coarse_width = 1e-3 * std::max(1.0, lo);
  opt.f_tol = 2e-16;
  EigenSolution s;
  s.sigma = solve_bracketed(fdf, lo, hi, opt, "solve_box");
  sys.rates(s.sigma, s.alpha, s.beta);
  s.box = box;
  s.ell_tau2 = ell;
  s.bipartition = b;
  return s;
}

Residuals residuals(const Cuboid& c, const EigenSolution& s) {
  const auto& b = s.bipartition;
  Residuals r;
  double sa = 0.0, sb = 0.0;
  for (double x : s.alpha) sa += x * x;
  for (double x : s.beta) sb += x * x;
  r.harmonicity = std::abs(sa - sb) / std::max(sa, std::numeric_limits<double>::min());
  const double scale = std::max(s.sigma, std::numeric_limits<double>::min());
  for (std::size_t k = 0; k < s.alpha.size(); ++k) {
    const TrigBranch br{c.half_length(b.tau1[k]), s.box[k]};
    r.compatibility = std::max(r.compatibility, std::abs(br.value(s.alpha[k]) - s.sigma) / scale);
  }
  for (std::size_t k = 0; k < s.beta.size(); ++k) {
    const int j = b.tau2[k];
    const double h = hyp_factor(c.half_length(j), s.ell_tau2.ell(j), s.beta[k]);
    r.compatibility = std::max(r.compatibility, std::abs(h - s.sigma) / scale);
  }
  return r;
}

std::vector<ExceptionalEigenvalue> enumerate_exceptional(const Cuboid& c) {
  const int d = c.dim();
  std::vector<ExceptionalEigenvalue> out;
  const CoordMask all = (d == kMaxDim) ? ~CoordMask{0} : ((CoordMask{1} << d) - 1);
  for (CoordMask linear = 1; linear != 0 && linear <= all; ++linear) {
    if ((linear & ~all) != 0) continue;
    const double a0 = c.half_length(std::countr_zero(linear));
    bool equal = true;
    for (int i = 0; i < d && equal; ++i)
      if ((linear >> i) & 1u) equal = nearly_equal(c.half_length(i), a0);
    if (equal) append_linear_family(c, linear, out);
    if (linear == all) break;
  }
  for (int p = 1; p < d; ++p)
    for (const auto& b : bipartitions(d, p)) append_zero_boxes(c, b, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.sigma < y.sigma; });
  return out;
}

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::constant: return "constant";
    case Family::regular: return "regular";
    case Family::zero_box: return "zero_box";
    case Family::linear: return "linear";
  }
  return "unknown";
}

std::vector<EigenvalueRecord> spectrum_exact(const Cuboid& c, double sigma_max, const ExactOptions& opt) {
  if (!(sigma_max > 0.0) || !std::isfinite(sigma_max)) throw ArgumentError("sigma_max must be positive and finite");
  const double margin = opt.margin < 0.0 ? default_margin(c) : opt.margin;
  const int d = c.dim();

  std::vector<EigenvalueRecord> out;
  EigenvalueRecord zero;
  zero.family = Family::constant;
  out.push_back(zero);

  struct Task {
    const Bipartition* b;
    BoxIndex box;
  };
  std::vector<Bipartition> parts;
  for (int p = 1; p < d; ++p)
    for (auto& b : bipartitions(d, p)) parts.push_back(std::move(b));
  std::vector<Task> tasks;
  for (const auto& b : parts)
    for (auto& box : boxes_within(c, b, sigma_max, margin)) tasks.push_back({&b, std::move(box)});

  std::vector<std::vector<EigenvalueRecord>> slots(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t) {
    const auto& b = *tasks[t].b;
    for (SignPattern ell : sign_patterns(mask_of(b.tau2))) {
      auto sol = solve_box(c, b, tasks[t].box, ell);
      if (!sol || !(sol->sigma < sigma_max)) continue;
      EigenvalueRecord r;
      r.sigma = sol->sigma;
      r.family = Family::regular;
      r.p = b.p();
      r.tau_mask = b.trig_mask();
      r.box = tasks[t].box;
      r.ell_tau2_mask = ell.bits;
      r.alpha = std::move(sol->alpha);
      r.beta = std::move(sol->beta);
      slots[t].push_back(std::move(r));
    }
  });
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));

  for (auto& e : enumerate_exceptional(c)) {
    if (!(e.sigma < sigma_max)) continue;
    EigenvalueRecord r;
    r.sigma = e.sigma;
    r.family = e.has_linear_factor() ? Family::linear : Family::zero_box;
    r.p = mask_size(e.trig_mask);
    r.tau_mask = e.trig_mask;
    r.linear_mask = e.linear_mask;
    r.box = std::move(e.box);
    r.ell_tau2_mask = e.ell.restricted(e.hyp_mask).bits;
    r.alpha = std::move(e.alpha);
    r.beta = std::move(e.beta);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

std::vector<Cluster> group_clusters(const std::vector<EigenvalueRecord>& sorted, double rel_gap) {
  std::vector<Cluster> out;
  for (const auto& r : sorted) {
    if (!out.empty() && r.sigma - out.back().sigma_max <= rel_gap * r.sigma) {
      out.back().sigma_max = r.sigma;
      out.back().multiplicity += r.multiplicity;
    } else {
      out.push_back({r.sigma, r.sigma, r.multiplicity});
    }
  }
  return out;
}

long long count_below(const std::vector<EigenvalueRecord>& sorted, double sigma) {
  long long n = 0;
  for (const auto& r : sorted) {
    if (!(r.sigma < sigma)) break;
    n += r.multiplicity;
  }
  return n;
}

}  // namespace steklov
