// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "pslet/solver.hpp"

#include "pslet/errors.hpp"

#include <algorithm>

namespace pslet {

Real Solution::best_energy() const {
  if (pade) return pade->best;
  return series.partial_sum;
}

bool Solution::low_confidence() const {
  return stability && stability->agreement_digits < kLowConfidenceDigits;
}

void validate(const SolveOptions& options) {
  if (options.terms < 2) throw Error(ErrorCode::InvalidConfig, "series needs at least 2 terms");
  if (options.terms > 6 && options.digits < 30) {
    throw Error(ErrorCode::InvalidConfig, "more than six terms need at least 30 digits");
  }
  if (options.digits < kMinDigits) {
    throw Error(ErrorCode::InvalidConfig, "precision below " + std::to_string(kMinDigits));
  }
  if (polynomial_index_for_terms(options.terms) + 2 > options.derivative_cap) {
    throw Error(ErrorCode::InvalidConfig,
                std::to_string(options.terms) + " terms exceed derivative cap " +
                    std::to_string(options.derivative_cap));
  }
  if (options.pade.n < 0 || options.pade.m < 0) {
    throw Error(ErrorCode::InvalidConfig, "negative Pade order");
  }
}

QuantumProblem make_problem(const ProblemSpec& spec) {
  QuantumProblem p;
  if (spec.custom) {
    p.potential = *spec.custom;
    p.l = spec.l;
    p.n_r = spec.n_r;
    p.units = spec.units;
  } else if (spec.units == UnitMode::Dimensional) {
    p = QuantumProblem::dimensional(spec.charge, spec.l, spec.n_r, spec.rule);
  } else {
    if (spec.alpha_prime < 0) {
      throw Error(ErrorCode::InvalidArgument, "alpha' must be non-negative");
    }
    p = QuantumProblem::scaled(decimal(spec.alpha_prime), spec.l, spec.n_r);
  }
  return p;
}

Solution solve(const ProblemSpec& spec, const SolveOptions& options) {
  validate(options);
  PrecisionScope scope(options.digits);

  Solution s;
  s.digits = options.digits;
  s.problem = make_problem(spec);
  s.problem.potential = s.problem.potential.with_max_order(options.derivative_cap);
  s.orbit = solve_r0(s.problem);

  const int terms = s.problem.n_r == 0 ? options.terms : 2;
  const int index = polynomial_index_for_terms(terms);
  if (s.problem.n_r == 0) {
    s.polynomials = build_perturbation_polynomials(s.orbit, s.problem.potential, index);
    s.riccati = solve_riccati_hierarchy(s.polynomials, s.orbit, index);
    s.series = assemble_energy_series(s.riccati, s.orbit, terms);
  } else {
    s.series.lbar = s.orbit.lbar;
    s.series.orbit = s.orbit;
    s.series.coefficients = {s.orbit.e_m2, s.orbit.e_m1};
    s.series.partial_sum = evaluate_scaled_series(s.series.coefficients, 2, s.series.lbar);
  }
  s.series.reduced_precision = s.problem.potential.reduced_precision();

  // The table runs to the refinement entry [n, m+1] when the series allows.
  const PadeIndex sel = options.pade;
  if (sel.n + sel.m + 1 <= s.series.terms()) {
    const int max_m = (sel.n + sel.m + 2 <= s.series.terms()) ? sel.m + 1 : sel.m;
    s.pade = pade_table(s.series, sel.n, max_m, sel);
    const int top = std::min(sel.n, sel.m);
    if (top >= 2 && max_m >= top + 1) s.stability = stability_report(*s.pade);
  }
  return s;
}

}  // namespace pslet
