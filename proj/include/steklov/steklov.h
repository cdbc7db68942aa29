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

#ifndef STEKLOV_STEKLOV_H
#define STEKLOV_STEKLOV_H

/*
 * C interface to the Steklov cuboid library.
 *
 * Every function returns a steklov_status. On failure the message of the most
 * recent error on the calling thread is available from steklov_last_error().
 * Objects are opaque handles released with the matching *_destroy function;
 * destroy functions accept NULL. Coordinates are 0-based.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STEKLOV_BUILDING_LIBRARY)
#    define STEKLOV_API __declspec(dllexport)
#  else
#    define STEKLOV_API __declspec(dllimport)
#  endif
#elif defined(STEKLOV_BUILDING_LIBRARY)
#  define STEKLOV_API __attribute__((visibility("default")))
#else
#  define STEKLOV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum steklov_status {
  STEKLOV_OK = 0,
  STEKLOV_ERR_ARGUMENT = 1,  /* invalid input */
  STEKLOV_ERR_NUMERICAL = 2, /* no solution, pole, or non-convergence */
  STEKLOV_ERR_IO = 3,
  STEKLOV_ERR_INTERNAL = 4
} steklov_status;

typedef enum steklov_method { STEKLOV_METHOD_EXACT = 0, STEKLOV_METHOD_QUASI = 1 } steklov_method;

typedef enum steklov_family {
  STEKLOV_FAMILY_CONSTANT = 0, /* sigma_0 = 0 */
  STEKLOV_FAMILY_REGULAR = 1,  /* strictly positive box */
  STEKLOV_FAMILY_ZERO_BOX = 2, /* box touching a coordinate hyperplane */
  STEKLOV_FAMILY_LINEAR = 3,   /* eigenfunction with linear factors */
  STEKLOV_FAMILY_QUASI = 4     /* approximate eigenvalue of a cluster */
} steklov_family;

typedef enum steklov_constraint { STEKLOV_CONSTRAINT_VOLUME = 0, STEKLOV_CONSTRAINT_AREA = 1 } steklov_constraint;

typedef struct steklov_cuboid steklov_cuboid;
typedef struct steklov_spectrum steklov_spectrum;
typedef struct steklov_weyl_table steklov_weyl_table;
typedef struct steklov_constants steklov_constants;

STEKLOV_API const char* steklov_version(void);
STEKLOV_API const char* steklov_last_error(void);

/* Cuboid (-a_1, a_1) x ... x (-a_d, a_d), 2 <= d <= 32. */
STEKLOV_API steklov_status steklov_cuboid_create(const double* half_lengths, size_t dim, steklov_cuboid** out);
STEKLOV_API void steklov_cuboid_destroy(steklov_cuboid* c);
STEKLOV_API size_t steklov_cuboid_dim(const steklov_cuboid* c);

/* Vol_{d-codim} of the union of codimension-codim facets. */
STEKLOV_API steklov_status steklov_facet_volume(const steklov_cuboid* c, int codim, double* out);

typedef struct steklov_eigenvalue {
  double sigma;
  steklov_method method;
  steklov_family family;
  int p;
  uint32_t tau_mask;      /* bit i set: coordinate i trigonometric */
  uint32_t ell_tau2_mask; /* bit j set: cosh on hyperbolic coordinate j */
  uint32_t linear_mask;   /* bit i set: linear factor x_i */
  int64_t multiplicity;
  size_t box_len;
} steklov_eigenvalue;

/* Eigenvalues strictly below sigma_max, ascending. Exact mode lists each
 * eigenvalue once; quasi mode lists one row per cluster with multiplicity
 * 2^q. Both include sigma_0 = 0. */
STEKLOV_API steklov_status steklov_spectrum_compute(const steklov_cuboid* c, double sigma_max,
                                                    steklov_method method, steklov_spectrum** out);
STEKLOV_API size_t steklov_spectrum_size(const steklov_spectrum* s);
STEKLOV_API steklov_status steklov_spectrum_get(const steklov_spectrum* s, size_t index, steklov_eigenvalue* out);
/* Copies min(box_len, capacity) entries of the box index. */
STEKLOV_API steklov_status steklov_spectrum_box(const steklov_spectrum* s, size_t index, int64_t* box,
                                                size_t capacity);
STEKLOV_API void steklov_spectrum_destroy(steklov_spectrum* s);

/* 1 + number of approximate eigenvalues below sigma, with multiplicity. */
STEKLOV_API steklov_status steklov_count_total(const steklov_cuboid* c, double sigma, int64_t* out);

typedef struct steklov_weyl_row {
  double sigma;
  int64_t N;
  double main;
  double second;
  double R;
} steklov_weyl_row;

/* grid must be positive and nondecreasing; n may be 0. */
STEKLOV_API steklov_status steklov_weyl_table_compute(const steklov_cuboid* c, const double* grid, size_t n,
                                                      int nodes, steklov_weyl_table** out);
STEKLOV_API size_t steklov_weyl_table_size(const steklov_weyl_table* t);
STEKLOV_API steklov_status steklov_weyl_table_get(const steklov_weyl_table* t, size_t index, steklov_weyl_row* out);
STEKLOV_API void steklov_weyl_table_destroy(steklov_weyl_table* t);

STEKLOV_API steklov_status steklov_g_constant(int p, int q, int nodes, double* value, double* standard_error);
STEKLOV_API steklov_status steklov_remainder_exponent(int d, double* out);

typedef struct steklov_constants_summary {
  int d;
  double C1;
  double C2;
  double C2_assembly;
  size_t num_p; /* entries for p = 2 .. d-1 */
} steklov_constants_summary;

typedef struct steklov_p_constants {
  int p;
  int q;
  double c_prime;
  double c_double_prime;
  double c;
  double G;
  double G_standard_error;
  int G_sampled;
} steklov_p_constants;

STEKLOV_API steklov_status steklov_constants_compute(int d, int nodes, steklov_constants** out);
STEKLOV_API steklov_status steklov_constants_summary_get(const steklov_constants* k, steklov_constants_summary* out);
STEKLOV_API steklov_status steklov_constants_p_get(const steklov_constants* k, size_t index, steklov_p_constants* out);
STEKLOV_API void steklov_constants_destroy(steklov_constants* k);

/* First nonzero eigenvalue. beta receives up to beta_capacity rates for the
 * axes other than the longest one. */
STEKLOV_API steklov_status steklov_sigma1(const steklov_cuboid* c, double* sigma1, double* alpha, int* longest_axis,
                                          double* beta, size_t beta_capacity);

typedef struct steklov_iso_report {
  double sigma1_cuboid;
  double sigma1_cube;
  double cube_half_length;
  double margin;
  double aspect_deviation;
  int is_cube;
} steklov_iso_report;

STEKLOV_API steklov_status steklov_isoperimetric(const steklov_cuboid* c, steklov_constraint constraint,
                                                 steklov_iso_report* out);

/* Half sides a1 <= a2 with a1 + a2 = L and first eigenvalue sigma1. */
STEKLOV_API steklov_status steklov_invert_rectangle(double L, double sigma1, double* a1, double* a2);

typedef struct steklov_mass_report {
  int k;
  double sigma;
  double mass;
  double target;
  double epsilon;
  double off_collar;
} steklov_mass_report;

/* U is the box [u_lo[i], u_hi[i]] over the trigonometric coordinates (in
 * increasing order) on the component x_j = signs[j] a_j of X_tau; signs has q
 * entries of +1/-1 or is NULL for all +1. Writes reports for k_min..k_max
 * into `reports` (capacity entries) and the number written to *count. A
 * sequence truncated by a solver failure still returns STEKLOV_OK when at
 * least one report was produced; steklov_last_error() then holds the reason. */
STEKLOV_API steklov_status steklov_concentration_sequence(const steklov_cuboid* c, uint32_t trig_mask,
                                                          const double* u_lo, const double* u_hi, const int* signs,
                                                          double epsilon, int k_min, int k_max,
                                                          steklov_mass_report* reports, size_t capacity,
                                                          size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* STEKLOV_STEKLOV_H */
