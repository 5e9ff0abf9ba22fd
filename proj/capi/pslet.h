/* Copyright 2026 The pslet Authors
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef PSLET_H_
#define PSLET_H_

#include <stddef.h>

#if defined(_WIN32)
#define PSLET_API __declspec(dllexport)
#else
#define PSLET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns one of these. PSLET_OK is zero. */
typedef enum pslet_status {
  PSLET_OK = 0,
  PSLET_INVALID_ARGUMENT = 1,
  PSLET_INVALID_CONFIG = 2,
  PSLET_NON_POSITIVE_RADIUS = 3,
  PSLET_ORDER_TOO_LARGE = 4,
  PSLET_INVALID_CHARGE = 5,
  PSLET_IMAGINARY_FREQUENCY = 6,
  PSLET_ZERO_FORCE = 7,
  PSLET_BOUND_STATE_NOT_FOUND = 8,
  PSLET_AMBIGUOUS_ROOT = 9,
  PSLET_DERIVATIVE_UNAVAILABLE = 10,
  PSLET_HIERARCHY_BREAKDOWN = 11,
  PSLET_ORDER_UNSUPPORTED = 12,
  PSLET_GRID_TOO_COARSE = 13,
  PSLET_INSUFFICIENT_COEFFICIENTS = 14,
  PSLET_NO_BOUND_STATE = 15,
  PSLET_GRID_INSUFFICIENT = 16,
  PSLET_INTERNAL = 99
} pslet_status;

/* Symbolic name of a status, e.g. "BoundStateNotFound". */
PSLET_API const char* pslet_status_name(int status);

/* Message of the last failure on the calling thread; "" after success. */
PSLET_API const char* pslet_last_error(void);

PSLET_API const char* pslet_version(void);

typedef enum pslet_units { PSLET_UNITS_SCALED = 0, PSLET_UNITS_DIMENSIONAL = 1 } pslet_units;

typedef enum pslet_energy_unit {
  PSLET_HARTREE = 0,
  PSLET_EV = 1,
  PSLET_KEV = 2
} pslet_energy_unit;

typedef enum pslet_table_id { PSLET_T1 = 0, PSLET_T2 = 1, PSLET_T3 = 2, PSLET_T4 = 3 } pslet_table_id;

typedef enum pslet_screening_mode {
  PSLET_SCREENING_DIMENSIONAL = 0,
  PSLET_SCREENING_SCALED = 1
} pslet_screening_mode;

/* ---- potentials ---------------------------------------------------------- */

typedef struct pslet_potential pslet_potential;

/* d^n V / dr^n at r in double precision. */
typedef double (*pslet_derivative_fn)(double r, int order, void* user);
/* V(r) only; derivatives come from finite differences at reduced precision. */
typedef double (*pslet_value_fn)(double r, void* user);

PSLET_API int pslet_potential_coulomb(double charge, pslet_potential** out);
PSLET_API int pslet_potential_yukawa(double charge, double screening, pslet_potential** out);
/* `user` must outlive the handle and every solution built from it. */
PSLET_API int pslet_potential_custom(pslet_derivative_fn fn, void* user, pslet_potential** out);
PSLET_API int pslet_potential_from_values(pslet_value_fn fn, void* user, pslet_potential** out);
PSLET_API int pslet_potential_derivative(const pslet_potential* p, double r, int order,
                                         double* out);
PSLET_API void pslet_potential_free(pslet_potential* p);

/* alpha(Z) = alpha0 Z^(1/3) (1 - 1/Z)^(2/3); the scaled mode divides by Z. */
PSLET_API int pslet_screening_alpha(double charge, double alpha0, int mode, double* out);

PSLET_API double pslet_convert_units(double hartree, int unit);

/* ---- solves -------------------------------------------------------------- */

typedef struct pslet_problem {
  int units;          /* pslet_units */
  int charge;         /* dimensional mode */
  double alpha_prime; /* scaled mode */
  int l;
  int n_r;
  double screening_alpha0;
} pslet_problem;

typedef struct pslet_options {
  int terms; /* E^(-2) ... E^(terms-3) */
  unsigned digits;
  int pade_n;
  int pade_m;
  int derivative_cap;
} pslet_options;

PSLET_API void pslet_problem_init(pslet_problem* problem);
PSLET_API void pslet_options_init(pslet_options* options);

typedef struct pslet_solution pslet_solution;

PSLET_API int pslet_solve(const pslet_problem* problem, const pslet_options* options,
                          pslet_solution** out);
/* Solve with an arbitrary potential; options may be NULL for defaults. */
PSLET_API int pslet_solve_potential(const pslet_potential* potential, int l, int n_r,
                                    const pslet_options* options, pslet_solution** out);
PSLET_API void pslet_solution_free(pslet_solution* s);

typedef struct pslet_orbit {
  double r0;
  double w;
  double beta;
  double lbar;
  double q;
  double e_m2;
  double e_m1;
} pslet_orbit;

PSLET_API int pslet_solution_orbit(const pslet_solution* s, pslet_orbit* out);

typedef struct pslet_energy {
  double partial_sum;
  double best; /* selected Pade entry, or partial_sum without one */
  double refinement;
  double uncertainty;
  int agreement_digits;
  int has_pade;
  int has_refinement;
  int has_stability;
  int low_confidence;
  int reduced_precision;
} pslet_energy;

PSLET_API int pslet_solution_energy(const pslet_solution* s, pslet_energy* out);

/* Number of series coefficients E^(-2) ... */
PSLET_API size_t pslet_solution_terms(const pslet_solution* s);
/* Copies min(capacity, terms) coefficients starting at E^(-2). */
PSLET_API size_t pslet_solution_coefficients(const pslet_solution* s, double* buffer,
                                             size_t capacity);
/* E^(n) to `significant` digits as a NUL-terminated decimal string. Returns
 * PSLET_INVALID_ARGUMENT when the buffer is too small. */
PSLET_API int pslet_solution_coefficient_string(const pslet_solution* s, int n, int significant,
                                                char* buffer, size_t capacity);

/* Pade entry [n, m]; flags bit 0 = degenerate, bit 1 = reduced rank. */
PSLET_API int pslet_solution_pade(const pslet_solution* s, int n, int m, double* value,
                                  int* flags);

/* psi(r) from the Riccati flux on the given radii. */
PSLET_API int pslet_solution_wavefunction(const pslet_solution* s, const double* radii,
                                          size_t count, int normalize, double* out);

/* ---- oracle -------------------------------------------------------------- */

typedef struct pslet_grid {
  double r_min;
  double r_max;
  int points;
  int log_spacing;
} pslet_grid;

/* Defaults sized for an energy guess; guess 0 gives the fixed defaults. */
PSLET_API void pslet_grid_init(pslet_grid* grid, double energy_guess);

typedef struct pslet_oracle_result pslet_oracle_result;

PSLET_API int pslet_oracle(const pslet_potential* potential, int l, int n_r,
                           const pslet_grid* grid, pslet_oracle_result** out);
/* Scaled Yukawa problem on the default grid; points <= 0 keeps 20000. */
PSLET_API int pslet_oracle_scaled(double alpha_prime, int l, int n_r, int points,
                                  pslet_oracle_result** out);

typedef struct pslet_oracle_summary {
  double eigenvalue;
  int nodes;
  double mismatch;
  int iterations;
  double kinetic;
  double tail_decay;
} pslet_oracle_summary;

PSLET_API int pslet_oracle_summary_get(const pslet_oracle_result* r, pslet_oracle_summary* out);
PSLET_API size_t pslet_oracle_size(const pslet_oracle_result* r);
/* Copies min(capacity, size) radii and normalized u(r) values. */
PSLET_API size_t pslet_oracle_samples(const pslet_oracle_result* r, double* radii, double* u,
                                      size_t capacity);
PSLET_API void pslet_oracle_free(pslet_oracle_result* r);

/* ---- table runs ---------------------------------------------------------- */

typedef struct pslet_run_config {
  int table; /* pslet_table_id */
  pslet_options solve;
  double tolerance;
  int grid_points;
  int workers; /* 0 picks hardware concurrency */
} pslet_run_config;

PSLET_API void pslet_run_config_init(pslet_run_config* config);
PSLET_API int pslet_parse_table_id(const char* text, int* out);
PSLET_API const char* pslet_table_name(int table);
PSLET_API int pslet_table_unit(int table);

/* One row. Energies in hartree except `converted` and `reference`, which are
 * in `unit`. Strings stay valid until the owning handle is freed. */
typedef struct pslet_record {
  int units;
  int charge;
  double alpha_prime;
  int l;
  int n_r;
  double r0;
  double w;
  double beta;
  double lbar;
  double partial_sum;
  double pade_best;
  double pade_refinement;
  double uncertainty;
  int agreement_digits;
  int low_confidence;
  int unit;
  double converted;
  double reference;
  double oracle;
  double oracle_difference;
  int oracle_agreement_digits;
  int pass;
  int has_pade;
  int has_refinement;
  int has_reference;
  int has_oracle;
  const char* error; /* "" on success */
} pslet_record;

typedef struct pslet_table pslet_table;

PSLET_API int pslet_table_run(const pslet_run_config* config, pslet_table** out);
/* Table run plus oracle eigenvalues (T3 and T4 only). */
PSLET_API int pslet_table_compare(const pslet_run_config* config, pslet_table** out);
PSLET_API size_t pslet_table_size(const pslet_table* t);
PSLET_API int pslet_table_record(const pslet_table* t, size_t index, pslet_record* out);
PSLET_API void pslet_table_free(pslet_table* t);

/* Record for a single solve in the given unit; `error` is always "". */
PSLET_API int pslet_solution_record(const pslet_solution* s, int unit, pslet_record* out);

#ifdef __cplusplus
}
#endif

#endif /* PSLET_H_ */
