// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "pslet/orbit.hpp"

#include "pslet/errors.hpp"

#include <vector>

namespace pslet {

namespace mp = boost::multiprecision;

QuantumProblem QuantumProblem::scaled(const Real& alpha_prime, int l, int n_r) {
  QuantumProblem p;
  p.l = l;
  p.n_r = n_r;
  p.potential = PotentialModel::yukawa(Real(1), alpha_prime);
  p.units = UnitMode::Scaled;
  return p;
}

QuantumProblem QuantumProblem::dimensional(int charge, int l, int n_r,
                                           const ScreeningRule& rule) {
  ScreeningRule dim = rule;
  dim.mode = ScreeningMode::Dimensional;
  QuantumProblem p;
  p.l = l;
  p.n_r = n_r;
  p.potential = PotentialModel::yukawa(Real(charge), screening_alpha(dim, charge));
  p.units = UnitMode::Dimensional;
  return p;
}

namespace {

struct OrbitSample {
  bool admissible = false;
  Real residual;
};

// w^2 = 3 + r V''/V', or nullopt where V' <= 0 or w^2 <= 0.
std::optional<Real> admissible_w2(const PotentialModel& v, const Real& r) {
  const Real d1 = v.derivative(r, 1);
  if (!(d1 > 0)) return std::nullopt;
  Real w2 = 3 + r * v.derivative(r, 2) / d1;
  if (!(w2 > 0)) return std::nullopt;
  return w2;
}

OrbitSample sample(const QuantumProblem& p, const Real& r) {
  OrbitSample s;
  auto w2 = admissible_w2(p.potential, r);
  if (!w2) return s;
  s.admissible = true;
  s.residual = p.l + Real(1) / 2 + (p.n_r + Real(1) / 2) * mp::sqrt(*w2) -
               mp::sqrt(r * r * r * p.potential.derivative(r, 1));
  return s;
}

Real residual_slope(const QuantumProblem& p, const Real& r) {
  const Real d1 = p.potential.derivative(r, 1);
  const Real d2 = p.potential.derivative(r, 2);
  const Real d3 = p.potential.derivative(r, 3);
  const Real w = mp::sqrt(3 + r * d2 / d1);
  const Real dw2 = d2 / d1 + r * d3 / d1 - r * d2 * d2 / (d1 * d1);
  const Real s = mp::sqrt(r * r * r * d1);
  const Real ds = (3 * r * r * d1 + r * r * r * d2) / (2 * s);
  return (p.n_r + Real(1) / 2) * dw2 / (2 * w) - ds;
}

Real refine_root(const QuantumProblem& p, Real lo, Real hi, const Real& f_lo) {
  const Real rel_width = pow10_neg(15);
  Real flo = f_lo;
  while (hi - lo > rel_width * hi) {
    Real mid = (lo + hi) / 2;
    OrbitSample s = sample(p, mid);
    if (!s.admissible) break;
    if ((s.residual > 0) == (flo > 0)) {
      lo = mid;
      flo = s.residual;
    } else {
      hi = mid;
    }
  }

  // Newton polish, falling back to bisection whenever a step leaves [lo, hi].
  const int digits = static_cast<int>(working_digits());
  const Real tol = pow10_neg(digits * 3 / 5);
  Real r = (lo + hi) / 2;
  for (int iter = 0; iter < 200; ++iter) {
    OrbitSample s = sample(p, r);
    if (!s.admissible) {
      r = (lo + hi) / 2;
      continue;
    }
    if (mp::abs(s.residual) < tol) return r;
    if ((s.residual > 0) == (flo > 0)) {
      lo = r;
    } else {
      hi = r;
    }
    Real next = r - s.residual / residual_slope(p, r);
    r = (next > lo && next < hi) ? next : (lo + hi) / 2;
  }
  return r;
}

OrbitConfig make_config(const QuantumProblem& p, const Real& r0) {
  OrbitConfig c;
  c.n_r = p.n_r;
  c.l = p.l;
  c.r0 = r0;
  c.w = frequency_w(p.potential, r0);
  const Real half = Real(1) / 2;
  c.beta = -(half + (p.n_r + half) * c.w);
  c.lbar = p.l - c.beta;
  c.q = c.lbar * c.lbar;
  c.e_m2 = classical_energy(p.potential, r0, c.q);
  c.e_m1 = ((2 * c.beta + 1) / 2 + (p.n_r + half) * c.w) / (r0 * r0);
  return c;
}

}  // namespace

Real frequency_w(const PotentialModel& potential, const Real& r0) {
  const Real d1 = potential.derivative(r0, 1);
  if (d1 == 0) throw Error(ErrorCode::ZeroForce, "V'(r0) vanishes");
  const Real w2 = 3 + r0 * potential.derivative(r0, 2) / d1;
  if (!(w2 > 0)) {
    throw Error(ErrorCode::ImaginaryFrequency, "no stable circular orbit at r0");
  }
  return mp::sqrt(w2);
}

Real orbit_residual(const QuantumProblem& problem, const Real& r) {
  const Real w = frequency_w(problem.potential, r);
  return problem.l + Real(1) / 2 + (problem.n_r + Real(1) / 2) * w -
         mp::sqrt(r * r * r * problem.potential.derivative(r, 1));
}

Real classical_energy(const PotentialModel& potential, const Real& r, const Real& q) {
  return 1 / (2 * r * r) + potential.derivative(r, 0) / q;
}

OrbitConfig solve_r0(const QuantumProblem& problem, const OrbitOptions& options) {
  if (problem.l < 0 || problem.n_r < 0) {
    throw Error(ErrorCode::InvalidArgument, "quantum numbers must be non-negative");
  }
  if (options.scan_points < 8 || !(options.r_min > 0) || !(options.r_max > options.r_min)) {
    throw Error(ErrorCode::InvalidArgument, "bad orbit scan interval");
  }

  const Real lower = decimal(options.r_min);
  Real upper = decimal(options.r_max);
  if (auto limit = problem.potential.stable_orbit_limit()) {
    upper = *limit * (1 - pow10_neg(12));
  }
  if (!(upper > lower)) {
    throw Error(ErrorCode::BoundStateNotFound, "admissible interval is empty");
  }

  const int n = options.scan_points;
  const Real ratio = mp::pow(upper / lower, Real(1) / (n - 1));
  std::vector<Real> radii(n);
  std::vector<OrbitSample> samples(n);
  Real r = lower;
  for (int i = 0; i < n; ++i) {
    radii[i] = (i == n - 1) ? upper : r;
    samples[i] = sample(problem, radii[i]);
    r *= ratio;
  }

  std::vector<OrbitConfig> minima;
  for (int i = 0; i + 1 < n; ++i) {
    const auto& a = samples[i];
    const auto& b = samples[i + 1];
    if (!a.admissible || !b.admissible) continue;
    if (a.residual == 0) {
      minima.push_back(make_config(problem, radii[i]));
      continue;
    }
    if ((a.residual > 0) == (b.residual > 0)) continue;
    Real root = refine_root(problem, radii[i], radii[i + 1], a.residual);
    minima.push_back(make_config(problem, root));
  }

  if (minima.empty()) {
    throw Error(ErrorCode::BoundStateNotFound,
                "orbit equation has no root where V' > 0 and w^2 > 0");
  }

  // Every admissible root is a minimum of E^(-2) (its curvature is w^2/r0^4).
  std::size_t best = 0;
  for (std::size_t i = 1; i < minima.size(); ++i) {
    if (minima[i].e_m2 < minima[best].e_m2) best = i;
  }
  for (std::size_t i = 0; i < minima.size(); ++i) {
    if (i == best) continue;
    const Real gap = mp::abs(minima[i].e_m2 - minima[best].e_m2);
    if (gap <= pow10_neg(12) * mp::abs(minima[best].e_m2)) {
      throw Error(ErrorCode::AmbiguousRoot, "two orbit minima have equal energy");
    }
  }
  return minima[best];
}

}  // namespace pslet
