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

#include "steklov/steklov.h"

#include <cmath>
#include <exception>
#include <memory>
#include <span>
#include <new>
#include <string>
#include <vector>

#include "steklov/concentration.hpp"
#include "steklov/error.hpp"
#include "steklov/exact.hpp"
#include "steklov/extremal.hpp"
#include "steklov/quasi.hpp"
#include "steklov/weyl.hpp"

struct steklov_cuboid {
  steklov::Cuboid value;
};

struct steklov_spectrum {
  std::vector<steklov_eigenvalue> rows;
  std::vector<steklov::BoxIndex> boxes;
};

struct steklov_weyl_table {
  std::vector<steklov::WeylRow> rows;
};

struct steklov_constants {
  steklov::WeylConstants value;
};

namespace {

thread_local std::string last_error;

steklov_status fail(steklov_status s, const char* what) {
  last_error = what;
  return s;
}

template <class F>
steklov_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return STEKLOV_OK;
  } catch (const steklov::ArgumentError& e) {
    return fail(STEKLOV_ERR_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(STEKLOV_ERR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(STEKLOV_ERR_ARGUMENT, e.what());
  } catch (const steklov::DomainError& e) {
    return fail(STEKLOV_ERR_NUMERICAL, e.what());
  } catch (const steklov::ConvergenceError& e) {
    return fail(STEKLOV_ERR_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(STEKLOV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(STEKLOV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(STEKLOV_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw steklov::ArgumentError(what);
}

steklov_family to_c(steklov::Family f) {
  switch (f) {
    case steklov::Family::constant: return STEKLOV_FAMILY_CONSTANT;
    case steklov::Family::regular: return STEKLOV_FAMILY_REGULAR;
    case steklov::Family::zero_box: return STEKLOV_FAMILY_ZERO_BOX;
    case steklov::Family::linear: return STEKLOV_FAMILY_LINEAR;
  }
  return STEKLOV_FAMILY_REGULAR;
}

}  // namespace

extern "C" {

const char* steklov_version(void) { return "1.0.0"; }

const char* steklov_last_error(void) { return last_error.c_str(); }

steklov_status steklov_cuboid_create(const double* half_lengths, size_t dim, steklov_cuboid** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    require(half_lengths != nullptr, "half_lengths is null");
    *out = new steklov_cuboid{steklov::Cuboid(std::vector<double>(half_lengths, half_lengths + dim))};
  });
}

void steklov_cuboid_destroy(steklov_cuboid* c) { delete c; }

size_t steklov_cuboid_dim(const steklov_cuboid* c) { return c ? static_cast<size_t>(c->value.dim()) : 0; }

steklov_status steklov_facet_volume(const steklov_cuboid* c, int codim, double* out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = steklov::facet_volume(c->value, codim);
  });
}

steklov_status steklov_spectrum_compute(const steklov_cuboid* c, double sigma_max, steklov_method method,
                                        steklov_spectrum** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = nullptr;
    require(sigma_max > 0.0 && std::isfinite(sigma_max), "sigma_max must be positive and finite");
    auto s = std::make_unique<steklov_spectrum>();
    if (method == STEKLOV_METHOD_EXACT) {
      for (auto& r : steklov::spectrum_exact(c->value, sigma_max)) {
        s->rows.push_back({r.sigma, STEKLOV_METHOD_EXACT, to_c(r.family), r.p, r.tau_mask, r.ell_tau2_mask,
                           r.linear_mask, r.multiplicity, r.box.size()});
        s->boxes.push_back(std::move(r.box));
      }
    } else if (method == STEKLOV_METHOD_QUASI) {
      s->rows.push_back({0.0, STEKLOV_METHOD_QUASI, STEKLOV_FAMILY_CONSTANT, 0, 0, 0, 0, 1, 0});
      s->boxes.emplace_back();
      for (auto& e : steklov::quasi_spectrum(c->value, sigma_max)) {
        s->rows.push_back({e.sigma_tilde, STEKLOV_METHOD_QUASI, STEKLOV_FAMILY_QUASI, e.bipartition.p(),
                           e.bipartition.trig_mask(), 0, 0, e.multiplicity, e.box.size()});
        s->boxes.push_back(std::move(e.box));
      }
    } else {
      throw steklov::ArgumentError("unknown method");
    }
    *out = s.release();
  });
}

size_t steklov_spectrum_size(const steklov_spectrum* s) { return s ? s->rows.size() : 0; }

steklov_status steklov_spectrum_get(const steklov_spectrum* s, size_t index, steklov_eigenvalue* out) {
  return guarded([&] {
    require(s && out, "null argument");
    require(index < s->rows.size(), "index out of range");
    *out = s->rows[index];
  });
}

steklov_status steklov_spectrum_box(const steklov_spectrum* s, size_t index, int64_t* box, size_t capacity) {
  return guarded([&] {
    require(s != nullptr, "null argument");
    require(index < s->rows.size(), "index out of range");
    const auto& b = s->boxes[index];
    require(box != nullptr || b.empty() || capacity == 0, "box buffer is null");
    for (size_t i = 0; i < b.size() && i < capacity; ++i) box[i] = b[i];
  });
}

void steklov_spectrum_destroy(steklov_spectrum* s) { delete s; }

steklov_status steklov_count_total(const steklov_cuboid* c, double sigma, int64_t* out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = steklov::count_total(c->value, sigma);
  });
}

steklov_status steklov_weyl_table_compute(const steklov_cuboid* c, const double* grid, size_t n, int nodes,
                                          steklov_weyl_table** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = nullptr;
    require(grid != nullptr || n == 0, "grid is null");
    auto t = std::make_unique<steklov_weyl_table>();
    t->rows = steklov::remainder_table(c->value, std::span<const double>(grid, n), nodes);
    *out = t.release();
  });
}

size_t steklov_weyl_table_size(const steklov_weyl_table* t) { return t ? t->rows.size() : 0; }

steklov_status steklov_weyl_table_get(const steklov_weyl_table* t, size_t index, steklov_weyl_row* out) {
  return guarded([&] {
    require(t && out, "null argument");
    require(index < t->rows.size(), "index out of range");
    const auto& r = t->rows[index];
    *out = {r.sigma, r.N, r.main, r.second, r.R};
  });
}

void steklov_weyl_table_destroy(steklov_weyl_table* t) { delete t; }

steklov_status steklov_g_constant(int p, int q, int nodes, double* value, double* standard_error) {
  return guarded([&] {
    require(value != nullptr, "null argument");
    const auto e = steklov::g_constant_estimate(p, q, nodes);
    *value = e.value;
    if (standard_error) *standard_error = e.standard_error;
  });
}

steklov_status steklov_remainder_exponent(int d, double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = steklov::remainder_exponent(d);
  });
}

steklov_status steklov_constants_compute(int d, int nodes, steklov_constants** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    *out = new steklov_constants{steklov::weyl_constants(d, nodes)};
  });
}

steklov_status steklov_constants_summary_get(const steklov_constants* k, steklov_constants_summary* out) {
  return guarded([&] {
    require(k && out, "null argument");
    *out = {k->value.d, k->value.C1, k->value.C2, k->value.C2_assembly, k->value.c_p.size()};
  });
}

steklov_status steklov_constants_p_get(const steklov_constants* k, size_t index, steklov_p_constants* out) {
  return guarded([&] {
    require(k && out, "null argument");
    require(index < k->value.c_p.size(), "index out of range");
    const auto& c = k->value.c_p[index];
    const auto& g = k->value.G.at({c.p, c.q});
    *out = {c.p, c.q, c.c_prime, c.c_double_prime, c.c, g.value, g.standard_error, g.sampled ? 1 : 0};
  });
}

void steklov_constants_destroy(steklov_constants* k) { delete k; }

steklov_status steklov_sigma1(const steklov_cuboid* c, double* sigma1, double* alpha, int* longest_axis,
                              double* beta, size_t beta_capacity) {
  return guarded([&] {
    require(c && sigma1, "null argument");
    const auto r = steklov::sigma1(c->value);
    *sigma1 = r.sigma1;
    if (alpha) *alpha = r.alpha;
    if (longest_axis) *longest_axis = r.longest_axis;
    if (beta)
      for (size_t i = 0; i < r.beta.size() && i < beta_capacity; ++i) beta[i] = r.beta[i];
  });
}

steklov_status steklov_isoperimetric(const steklov_cuboid* c, steklov_constraint constraint,
                                     steklov_iso_report* out) {
  return guarded([&] {
    require(c && out, "null argument");
    require(constraint == STEKLOV_CONSTRAINT_VOLUME || constraint == STEKLOV_CONSTRAINT_AREA,
            "unknown constraint");
    const auto r = steklov::isoperimetric_check(
        c->value, constraint == STEKLOV_CONSTRAINT_VOLUME ? steklov::Constraint::volume : steklov::Constraint::area);
    *out = {r.sigma1_cuboid, r.sigma1_cube, r.cube_half_length, r.margin, r.aspect_deviation, r.is_cube ? 1 : 0};
  });
}

steklov_status steklov_invert_rectangle(double L, double sigma1, double* a1, double* a2) {
  return guarded([&] {
    require(a1 && a2, "null argument");
    const auto r = steklov::invert_rectangle(L, sigma1);
    *a1 = r.a1;
    *a2 = r.a2;
  });
}

steklov_status steklov_concentration_sequence(const steklov_cuboid* c, uint32_t trig_mask, const double* u_lo,
                                              const double* u_hi, const int* signs, double epsilon, int k_min,
                                              int k_max, steklov_mass_report* reports, size_t capacity,
                                              size_t* count) {
  steklov::ConcentrationResult result;
  const steklov_status st = guarded([&] {
    require(c && u_lo && u_hi && count, "null argument");
    *count = 0;
    const auto b = steklov::Bipartition::from_mask(c->value.dim(), trig_mask);
    steklov::FacetPatch U;
    for (int k = 0; k < b.p(); ++k) U.ranges.push_back({u_lo[k], u_hi[k]});
    if (signs) U.signs.assign(signs, signs + b.q());
    result = steklov::concentration_sequence(c->value, b, U, epsilon, k_max, k_min);
    require(reports != nullptr || result.reports.empty() || capacity == 0, "reports buffer is null");
    for (const auto& r : result.reports) {
      if (*count >= capacity) break;
      reports[(*count)++] = {r.k, r.sigma, r.mass_in_U_eps, r.target_ratio, r.epsilon, r.off_collar_mass};
    }
  });
  if (st != STEKLOV_OK) return st;
  if (!result.diagnostic.empty()) {
    last_error = result.diagnostic;
    if (result.reports.empty()) return STEKLOV_ERR_NUMERICAL;
  }
  return STEKLOV_OK;
}

}  // extern "C"
