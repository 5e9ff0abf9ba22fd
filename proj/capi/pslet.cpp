// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "pslet.h"

#include "pslet/errors.hpp"
#include "pslet/oracle.hpp"
#include "pslet/solver.hpp"
#include "pslet/tables.hpp"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

struct pslet_potential {
  pslet::PotentialModel model;
};

struct pslet_solution {
  pslet::ProblemSpec spec;
  pslet::Solution solution;
};

struct pslet_oracle_result {
  pslet::OracleResult result;
};

struct pslet_table {
  std::vector<pslet::EnergyRecord> records;
};

namespace {

thread_local std::string g_last_error;

constexpr const char* kVersion = "1.0.0";

int fail(int status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
int guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return PSLET_OK;
  } catch (const pslet::Error& e) {
    return fail(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PSLET_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PSLET_INTERNAL, e.what());
  }
}

#define PSLET_REQUIRE(cond, what)                                  \
  do {                                                             \
    if (!(cond)) return fail(PSLET_INVALID_ARGUMENT, what);        \
  } while (0)

pslet::SolveOptions to_options(const pslet_options* o) {
  pslet::SolveOptions s;
  if (o == nullptr) return s;
  s.terms = o->terms;
  s.digits = o->digits;
  s.pade = {o->pade_n, o->pade_m};
  s.derivative_cap = o->derivative_cap;
  return s;
}

pslet::EnergyUnit to_unit(int unit) {
  switch (unit) {
    case PSLET_HARTREE: return pslet::EnergyUnit::Hartree;
    case PSLET_EV: return pslet::EnergyUnit::eV;
    case PSLET_KEV: return pslet::EnergyUnit::keV;
    default: throw pslet::Error(pslet::ErrorCode::InvalidArgument, "unknown energy unit");
  }
}

pslet::TableId to_table(int table) {
  if (table < PSLET_T1 || table > PSLET_T4) {
    throw pslet::Error(pslet::ErrorCode::InvalidArgument, "unknown table id");
  }
  return static_cast<pslet::TableId>(table);
}

pslet::RunConfig to_run_config(const pslet_run_config* c) {
  pslet::RunConfig r;
  r.table = to_table(c->table);
  r.solve = to_options(&c->solve);
  r.tolerance = c->tolerance;
  r.grid_points = c->grid_points;
  r.workers = c->workers;
  return r;
}

void fill_record(const pslet::EnergyRecord& r, pslet_record* out) {
  *out = pslet_record{};
  out->units = r.units == pslet::UnitMode::Dimensional ? PSLET_UNITS_DIMENSIONAL
                                                       : PSLET_UNITS_SCALED;
  out->charge = r.charge;
  out->alpha_prime = r.alpha_prime;
  out->l = r.l;
  out->n_r = r.n_r;
  out->r0 = r.r0;
  out->w = r.w;
  out->beta = r.beta;
  out->lbar = r.lbar;
  out->partial_sum = r.partial_sum;
  out->has_pade = r.pade_best.has_value();
  out->pade_best = r.pade_best.value_or(0.0);
  out->has_refinement = r.pade_refinement.has_value();
  out->pade_refinement = r.pade_refinement.value_or(0.0);
  out->uncertainty = r.uncertainty;
  out->agreement_digits = r.agreement_digits;
  out->low_confidence = r.low_confidence;
  out->unit = static_cast<int>(r.unit);
  out->converted = r.converted;
  out->has_reference = r.reference.has_value();
  out->reference = r.reference.value_or(0.0);
  out->has_oracle = r.oracle.has_value();
  out->oracle = r.oracle.value_or(0.0);
  out->oracle_difference = r.oracle_difference.value_or(0.0);
  out->oracle_agreement_digits = r.oracle_agreement_digits.value_or(0);
  out->pass = r.pass.value_or(false);
  out->error = r.error.c_str();
}

}  // namespace

extern "C" {

const char* pslet_status_name(int status) {
  if (status == PSLET_OK) return "Ok";
  if (status == PSLET_INTERNAL) return "Internal";
  if (status >= PSLET_INVALID_ARGUMENT && status <= PSLET_GRID_INSUFFICIENT) {
    return pslet::to_string(static_cast<pslet::ErrorCode>(status));
  }
  return "Unknown";
}

const char* pslet_last_error(void) { return g_last_error.c_str(); }

const char* pslet_version(void) { return kVersion; }

int pslet_potential_coulomb(double charge, pslet_potential** out) {
  PSLET_REQUIRE(out != nullptr, "null output handle");
  return guarded([&] {
    pslet::PrecisionScope scope(pslet::kDefaultDigits);
    *out = new pslet_potential{pslet::PotentialModel::coulomb(pslet::decimal(charge))};
  });
}

int pslet_potential_yukawa(double charge, double screening, pslet_potential** out) {
  PSLET_REQUIRE(out != nullptr, "null output handle");
  return guarded([&] {
    pslet::PrecisionScope scope(pslet::kDefaultDigits);
    *out = new pslet_potential{
        pslet::PotentialModel::yukawa(pslet::decimal(charge), pslet::decimal(screening))};
  });
}

int pslet_potential_custom(pslet_derivative_fn fn, void* user, pslet_potential** out) {
  PSLET_REQUIRE(out != nullptr && fn != nullptr, "null callback or output handle");
  return guarded([&] {
    auto derivative = [fn, user](const pslet::Real& r, int n) {
      return pslet::Real(fn(pslet::to_double(r), n, user));
    };
    *out = new pslet_potential{pslet::PotentialModel::custom(derivative)};
  });
}

int pslet_potential_from_values(pslet_value_fn fn, void* user, pslet_potential** out) {
  PSLET_REQUIRE(out != nullptr && fn != nullptr, "null callback or output handle");
  return guarded([&] {
    auto value = [fn, user](const pslet::Real& r) {
      return pslet::Real(fn(pslet::to_double(r), user));
    };
    *out = new pslet_potential{pslet::PotentialModel::custom_from_values(value)};
  });
}

int pslet_potential_derivative(const pslet_potential* p, double r, int order, double* out) {
  PSLET_REQUIRE(p != nullptr && out != nullptr, "null handle");
  return guarded([&] {
    pslet::PrecisionScope scope(pslet::kDefaultDigits);
    *out = pslet::to_double(p->model.derivative(pslet::decimal(r), order));
  });
}

void pslet_potential_free(pslet_potential* p) { delete p; }

int pslet_screening_alpha(double charge, double alpha0, int mode, double* out) {
  PSLET_REQUIRE(out != nullptr, "null output");
  PSLET_REQUIRE(mode == PSLET_SCREENING_DIMENSIONAL || mode == PSLET_SCREENING_SCALED,
                "unknown screening mode");
  return guarded([&] {
    pslet::PrecisionScope scope(pslet::kDefaultDigits);
    pslet::ScreeningRule rule;
    rule.alpha0 = alpha0;
    rule.mode = mode == PSLET_SCREENING_SCALED ? pslet::ScreeningMode::Scaled
                                               : pslet::ScreeningMode::Dimensional;
    *out = pslet::to_double(pslet::screening_alpha(rule, charge));
  });
}

double pslet_convert_units(double hartree, int unit) {
  switch (unit) {
    case PSLET_EV: return pslet::convert_units(hartree, pslet::EnergyUnit::eV);
    case PSLET_KEV: return pslet::convert_units(hartree, pslet::EnergyUnit::keV);
    default: return hartree;
  }
}

void pslet_problem_init(pslet_problem* problem) {
  if (problem == nullptr) return;
  *problem = pslet_problem{};
  problem->units = PSLET_UNITS_SCALED;
  problem->charge = 1;
  problem->screening_alpha0 = pslet::ScreeningRule{}.alpha0;
}

void pslet_options_init(pslet_options* options) {
  if (options == nullptr) return;
  const pslet::SolveOptions d;
  options->terms = d.terms;
  options->digits = d.digits;
  options->pade_n = d.pade.n;
  options->pade_m = d.pade.m;
  options->derivative_cap = d.derivative_cap;
}

int pslet_solve(const pslet_problem* problem, const pslet_options* options,
                pslet_solution** out) {
  PSLET_REQUIRE(problem != nullptr && out != nullptr, "null problem or output handle");
  *out = nullptr;
  return guarded([&] {
    auto s = std::make_unique<pslet_solution>();
    s->spec.units = problem->units == PSLET_UNITS_DIMENSIONAL ? pslet::UnitMode::Dimensional
                                                              : pslet::UnitMode::Scaled;
    s->spec.charge = problem->charge;
    s->spec.alpha_prime = problem->alpha_prime;
    s->spec.l = problem->l;
    s->spec.n_r = problem->n_r;
    s->spec.rule.alpha0 = problem->screening_alpha0;
    s->solution = pslet::solve(s->spec, to_options(options));
    *out = s.release();
  });
}

int pslet_solve_potential(const pslet_potential* potential, int l, int n_r,
                          const pslet_options* options, pslet_solution** out) {
  PSLET_REQUIRE(potential != nullptr && out != nullptr, "null potential or output handle");
  *out = nullptr;
  return guarded([&] {
    auto s = std::make_unique<pslet_solution>();
    s->spec.l = l;
    s->spec.n_r = n_r;
    s->spec.custom = potential->model;
    s->solution = pslet::solve(s->spec, to_options(options));
    *out = s.release();
  });
}

void pslet_solution_free(pslet_solution* s) { delete s; }

int pslet_solution_orbit(const pslet_solution* s, pslet_orbit* out) {
  PSLET_REQUIRE(s != nullptr && out != nullptr, "null handle");
  return guarded([&] {
    const pslet::OrbitConfig& o = s->solution.orbit;
    out->r0 = pslet::to_double(o.r0);
    out->w = pslet::to_double(o.w);
    out->beta = pslet::to_double(o.beta);
    out->lbar = pslet::to_double(o.lbar);
    out->q = pslet::to_double(o.q);
    out->e_m2 = pslet::to_double(o.e_m2);
    out->e_m1 = pslet::to_double(o.e_m1);
  });
}

int pslet_solution_energy(const pslet_solution* s, pslet_energy* out) {
  PSLET_REQUIRE(s != nullptr && out != nullptr, "null handle");
  return guarded([&] {
    const pslet::Solution& sol = s->solution;
    *out = pslet_energy{};
    out->partial_sum = pslet::to_double(sol.series.partial_sum);
    out->best = pslet::to_double(sol.best_energy());
    out->has_pade = sol.pade.has_value();
    if (sol.pade) {
      out->uncertainty = pslet::to_double(sol.pade->uncertainty);
      out->has_refinement = sol.pade->refinement.has_value();
      if (sol.pade->refinement) out->refinement = pslet::to_double(*sol.pade->refinement);
    }
    out->has_stability = sol.stability.has_value();
    if (sol.stability) out->agreement_digits = sol.stability->agreement_digits;
    out->low_confidence = sol.low_confidence();
    out->reduced_precision = sol.series.reduced_precision;
  });
}

size_t pslet_solution_terms(const pslet_solution* s) {
  return s == nullptr ? 0 : static_cast<size_t>(s->solution.series.terms());
}

size_t pslet_solution_coefficients(const pslet_solution* s, double* buffer, size_t capacity) {
  if (s == nullptr || buffer == nullptr) return 0;
  const auto& c = s->solution.series.coefficients;
  const size_t n = std::min(capacity, c.size());
  for (size_t i = 0; i < n; ++i) buffer[i] = pslet::to_double(c[i]);
  return n;
}

int pslet_solution_coefficient_string(const pslet_solution* s, int n, int significant,
                                      char* buffer, size_t capacity) {
  PSLET_REQUIRE(s != nullptr && buffer != nullptr, "null handle or buffer");
  PSLET_REQUIRE(n >= -2 && n + 2 < s->solution.series.terms(), "coefficient index out of range");
  PSLET_REQUIRE(significant > 0, "significant digits must be positive");
  return guarded([&] {
    pslet::PrecisionScope scope(s->solution.digits);
    const std::string text = pslet::to_string(s->solution.series.coefficient(n), significant);
    if (text.size() + 1 > capacity) {
      throw pslet::Error(pslet::ErrorCode::InvalidArgument, "buffer too small");
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
  });
}

int pslet_solution_pade(const pslet_solution* s, int n, int m, double* value, int* flags) {
  PSLET_REQUIRE(s != nullptr && value != nullptr, "null handle");
  PSLET_REQUIRE(s->solution.pade.has_value(), "solution has no Pade table");
  const pslet::PadeEntry* e = s->solution.pade->find({n, m});
  if (e == nullptr) return fail(PSLET_INSUFFICIENT_COEFFICIENTS, "Pade entry not in table");
  return guarded([&] {
    *value = pslet::to_double(e->value);
    if (flags != nullptr) *flags = (e->degenerate ? 1 : 0) | (e->reduced_rank ? 2 : 0);
  });
}

int pslet_solution_wavefunction(const pslet_solution* s, const double* radii, size_t count,
                                int normalize, double* out) {
  PSLET_REQUIRE(s != nullptr && radii != nullptr && out != nullptr, "null handle or buffer");
  return guarded([&] {
    pslet::PrecisionScope scope(s->solution.digits);
    pslet::WavefunctionOptions opts;
    opts.normalize = normalize != 0;
    const std::vector<double> psi = pslet::reconstruct_wavefunction(
        s->solution.riccati, s->solution.orbit, std::span<const double>(radii, count), opts);
    std::copy(psi.begin(), psi.end(), out);
  });
}

void pslet_grid_init(pslet_grid* grid, double energy_guess) {
  if (grid == nullptr) return;
  const pslet::RadialGrid g = energy_guess == 0.0 ? pslet::RadialGrid{}
                                                  : pslet::RadialGrid::default_for(energy_guess);
  grid->r_min = g.r_min;
  grid->r_max = g.r_max;
  grid->points = g.points;
  grid->log_spacing = g.spacing == pslet::GridSpacing::Log;
}

int pslet_oracle(const pslet_potential* potential, int l, int n_r, const pslet_grid* grid,
                 pslet_oracle_result** out) {
  PSLET_REQUIRE(potential != nullptr && grid != nullptr && out != nullptr, "null handle");
  *out = nullptr;
  return guarded([&] {
    pslet::RadialGrid g;
    g.r_min = grid->r_min;
    g.r_max = grid->r_max;
    g.points = grid->points;
    g.spacing = grid->log_spacing ? pslet::GridSpacing::Log : pslet::GridSpacing::Uniform;
    *out = new pslet_oracle_result{pslet::oracle_eigenvalue(potential->model, l, n_r, g)};
  });
}

int pslet_oracle_scaled(double alpha_prime, int l, int n_r, int points,
                        pslet_oracle_result** out) {
  PSLET_REQUIRE(out != nullptr, "null output handle");
  *out = nullptr;
  return guarded([&] {
    const int n = points > 0 ? points : pslet::RadialGrid{}.points;
    *out = new pslet_oracle_result{pslet::scaled_oracle(alpha_prime, l, n_r, n)};
  });
}

int pslet_oracle_summary_get(const pslet_oracle_result* r, pslet_oracle_summary* out) {
  PSLET_REQUIRE(r != nullptr && out != nullptr, "null handle");
  out->eigenvalue = r->result.eigenvalue;
  out->nodes = r->result.nodes;
  out->mismatch = r->result.mismatch;
  out->iterations = r->result.iterations;
  out->kinetic = r->result.kinetic;
  out->tail_decay = r->result.tail_decay;
  g_last_error.clear();
  return PSLET_OK;
}

size_t pslet_oracle_size(const pslet_oracle_result* r) {
  return r == nullptr ? 0 : r->result.radii.size();
}

size_t pslet_oracle_samples(const pslet_oracle_result* r, double* radii, double* u,
                            size_t capacity) {
  if (r == nullptr) return 0;
  const size_t n = std::min(capacity, r->result.radii.size());
  for (size_t i = 0; i < n; ++i) {
    if (radii != nullptr) radii[i] = r->result.radii[i];
    if (u != nullptr) u[i] = r->result.wavefunction[i];
  }
  return n;
}

void pslet_oracle_free(pslet_oracle_result* r) { delete r; }

void pslet_run_config_init(pslet_run_config* config) {
  if (config == nullptr) return;
  const pslet::RunConfig d;
  config->table = static_cast<int>(d.table);
  pslet_options_init(&config->solve);
  config->tolerance = d.tolerance;
  config->grid_points = d.grid_points;
  config->workers = d.workers;
}

int pslet_parse_table_id(const char* text, int* out) {
  PSLET_REQUIRE(text != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = static_cast<int>(pslet::parse_table_id(text)); });
}

const char* pslet_table_name(int table) {
  if (table < PSLET_T1 || table > PSLET_T4) return "";
  return pslet::to_string(static_cast<pslet::TableId>(table));
}

int pslet_table_unit(int table) {
  if (table < PSLET_T1 || table > PSLET_T4) return PSLET_HARTREE;
  return static_cast<int>(pslet::table_unit(static_cast<pslet::TableId>(table)));
}

int pslet_table_run(const pslet_run_config* config, pslet_table** out) {
  PSLET_REQUIRE(config != nullptr && out != nullptr, "null config or output handle");
  *out = nullptr;
  return guarded([&] { *out = new pslet_table{pslet::run_table(to_run_config(config))}; });
}

int pslet_table_compare(const pslet_run_config* config, pslet_table** out) {
  PSLET_REQUIRE(config != nullptr && out != nullptr, "null config or output handle");
  *out = nullptr;
  return guarded([&] { *out = new pslet_table{pslet::compare_run(to_run_config(config))}; });
}

size_t pslet_table_size(const pslet_table* t) { return t == nullptr ? 0 : t->records.size(); }

int pslet_table_record(const pslet_table* t, size_t index, pslet_record* out) {
  PSLET_REQUIRE(t != nullptr && out != nullptr, "null handle");
  PSLET_REQUIRE(index < t->records.size(), "record index out of range");
  fill_record(t->records[index], out);
  g_last_error.clear();
  return PSLET_OK;
}

void pslet_table_free(pslet_table* t) { delete t; }

int pslet_solution_record(const pslet_solution* s, int unit, pslet_record* out) {
  PSLET_REQUIRE(s != nullptr && out != nullptr, "null handle");
  return guarded([&] {
    pslet::PrecisionScope scope(s->solution.digits);
    const pslet::EnergyRecord rec = pslet::make_record(s->spec, s->solution, to_unit(unit));
    fill_record(rec, out);
    out->error = "";
  });
}

}  // extern "C"
