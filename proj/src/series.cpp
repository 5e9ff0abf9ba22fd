// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "pslet/series.hpp"

#include "pslet/errors.hpp"

#include <cmath>

namespace pslet {

namespace mp = boost::multiprecision;

Polynomial RiccatiSolution::u(int n) const {
  return flux.at(static_cast<std::size_t>(n)).odd_part();
}

Polynomial RiccatiSolution::g(int n) const {
  return flux.at(static_cast<std::size_t>(n) + 1).even_part();
}

Real RiccatiSolution::d(int m, int n) const {
  if (m <= 0) return Real(0);
  return u(n)[2 * m - 1];
}

Real RiccatiSolution::c(int m, int n) const { return g(n)[2 * m]; }

Real evaluate_scaled_series(std::span<const Real> c, int count, const Real& lbar) {
  const Real lambda = 1 / lbar;
  Real acc = 0;
  for (int k = count - 1; k >= 0; --k) acc = acc * lambda + c[static_cast<std::size_t>(k)];
  return lbar * lbar * acc;
}

Real EnergySeries::partial_sum_of(int count) const {
  if (count < 0 || count > terms()) {
    throw Error(ErrorCode::InsufficientCoefficients, "partial sum beyond stored terms");
  }
  return evaluate_scaled_series(coefficients, count, lbar);
}

std::vector<Real> EnergySeries::term_magnitudes() const {
  std::vector<Real> out;
  out.reserve(coefficients.size());
  for (int n = -2; n < terms() - 2; ++n) {
    out.push_back(mp::abs(coefficient(n)) * mp::pow(lbar, Real(-n)));
  }
  return out;
}

PerturbationPolynomials build_perturbation_polynomials(const OrbitConfig& config,
                                                       const PotentialModel& potential,
                                                       int max_index) {
  if (max_index < 0) throw Error(ErrorCode::InvalidArgument, "negative polynomial index");
  if (max_index + 2 > potential.max_order()) {
    throw Error(ErrorCode::DerivativeUnavailable,
                "series needs V^(" + std::to_string(max_index + 2) +
                    ") but the potential is capped at order " +
                    std::to_string(potential.max_order()));
  }

  const Real& r0 = config.r0;
  const Real& beta = config.beta;
  const Real& q = config.q;
  const Real shift = 2 * beta + 1;
  const Real beta_term = beta * (beta + 1) / 2;

  PerturbationPolynomials polys;
  polys.terms.reserve(static_cast<std::size_t>(max_index) + 1);

  Polynomial v0;
  v0.set(2, config.w * config.w / 2);
  v0.set(0, shift / 2);
  polys.terms.push_back(std::move(v0));

  Real factorial = 2;  // (k+2)!
  for (int k = 1; k <= max_index; ++k) {
    factorial *= k + 2;
    const Real sign = (k % 2 == 0) ? Real(1) : Real(-1);
    Polynomial vk;
    vk.add(k, sign * shift * (k + 1) / 2);
    if (k >= 2) vk.add(k - 2, sign * beta_term * (k - 1));
    const Real dv = potential.derivative(r0, k + 2);
    vk.add(k + 2, sign * Real(k + 3) / 2 + mp::pow(r0, k + 4) * dv / (q * factorial));
    polys.terms.push_back(std::move(vk));
  }
  return polys;
}

RiccatiSolution solve_riccati_hierarchy(const PerturbationPolynomials& polys,
                                        const OrbitConfig& config, int max_index) {
  if (config.n_r != 0) {
    throw Error(ErrorCode::OrderUnsupported,
                "the Riccati hierarchy covers nodeless (n_r = 0) states only");
  }
  if (max_index > polys.max_index()) {
    throw Error(ErrorCode::InvalidArgument, "not enough perturbation polynomials");
  }
  const Real& w = config.w;
  const int digits = static_cast<int>(working_digits());
  if (!(mp::abs(w) > pow10_neg(digits / 2))) {
    throw Error(ErrorCode::HierarchyBreakdown, "vanishing oscillator frequency");
  }

  RiccatiSolution sol;
  sol.flux.reserve(static_cast<std::size_t>(max_index) + 1);
  sol.balance.reserve(static_cast<std::size_t>(max_index) + 1);

  // eps^0: U^(0) = -w x, which also enforces the beta choice.
  Polynomial w0;
  w0.set(1, -w);
  sol.flux.push_back(std::move(w0));
  sol.balance.push_back(Real(0));

  // eps^k, k >= 1:
  //   w x W_k - W_k'/2 = R_k + T_k,  T_k = -v^(k) + (1/2) sum_{0<i<k} W_i W_{k-i}
  // Matching x^(j+1) gives W_k's coefficients from the top down; the x^0
  // balance then fixes the energy constant R_k.
  for (int k = 1; k <= max_index; ++k) {
    Polynomial t;
    const Polynomial& vk = polys[k];
    for (int p = 0; p <= vk.degree(); ++p) t.add(p, -vk[p]);
    for (int i = 1; i < k; ++i) {
      Polynomial prod = sol.flux[static_cast<std::size_t>(i)] *
                        sol.flux[static_cast<std::size_t>(k - i)];
      for (int p = 0; p <= prod.degree(); ++p) t.add(p, prod[p] / 2);
    }

    const int degree = k + 1;
    std::vector<Real> a(static_cast<std::size_t>(degree) + 3, Real(0));
    for (int j = degree; j >= 0; --j) {
      a[static_cast<std::size_t>(j)] =
          (t[j + 1] + Real(j + 2) / 2 * a[static_cast<std::size_t>(j) + 2]) / w;
    }
    a.resize(static_cast<std::size_t>(degree) + 1);
    const Real balance = -a[1] / 2 - t[0];
    sol.flux.emplace_back(std::move(a));
    sol.balance.push_back(balance);
  }

  const Real beta_term = config.beta * (config.beta + 1) / 2;
  for (int k = 2; k <= max_index; k += 2) {
    Real value = sol.balance[static_cast<std::size_t>(k)];
    if (k == 2) value -= beta_term;
    sol.lambda.push_back(value);
  }
  return sol;
}

EnergySeries assemble_energy_series(const RiccatiSolution& riccati,
                                    const OrbitConfig& config, int terms) {
  if (terms < 2) throw Error(ErrorCode::InvalidArgument, "series needs at least two terms");
  if (polynomial_index_for_terms(terms) > riccati.max_index()) {
    throw Error(ErrorCode::InsufficientCoefficients,
                "Riccati solution does not reach the requested order");
  }

  EnergySeries s;
  s.lbar = config.lbar;
  s.orbit = config;
  const Real r0_sq = config.r0 * config.r0;
  s.coefficients.push_back(config.e_m2);
  s.coefficients.push_back(config.e_m1);
  // E^(n) = balance at eps^(2n+2) over r0^2 (for n = 0 this keeps the
  // beta(beta+1)/2 term).
  for (int n = 0; n < terms - 2; ++n) {
    s.coefficients.push_back(riccati.balance[static_cast<std::size_t>(2 * n + 2)] / r0_sq);
  }
  s.partial_sum = evaluate_scaled_series(s.coefficients, s.terms(), s.lbar);
  return s;
}

std::vector<double> reconstruct_wavefunction(const RiccatiSolution& riccati,
                                             const OrbitConfig& config,
                                             std::span<const double> radii,
                                             const WavefunctionOptions& options) {
  if (config.n_r != 0) {
    throw Error(ErrorCode::OrderUnsupported, "wavefunction ansatz is nodeless");
  }
  if (options.normalize && radii.size() < 16) {
    throw Error(ErrorCode::GridTooCoarse, "normalization needs at least 16 grid points");
  }
  const int top = options.max_index < 0 ? riccati.max_index()
                                        : std::min(options.max_index, riccati.max_index());

  // U(x) = sum_k eps^k \int_0^x W_k
  const Real eps = 1 / mp::sqrt(config.lbar);
  Polynomial log_psi;
  Real eps_pow = 1;
  for (int k = 0; k <= top; ++k) {
    Polynomial part = riccati.flux[static_cast<std::size_t>(k)].integral();
    for (int p = 0; p <= part.degree(); ++p) log_psi.add(p, eps_pow * part[p]);
    eps_pow *= eps;
  }

  const Real scale = mp::sqrt(config.lbar) / config.r0;
  std::vector<double> psi;
  psi.reserve(radii.size());
  for (double r : radii) {
    if (!(r > 0)) throw Error(ErrorCode::NonPositiveRadius, "grid radius must be positive");
    const Real x = scale * (Real(r) - config.r0);
    psi.push_back(to_double(mp::exp(log_psi.evaluate(x))));
  }

  if (options.normalize) {
    double norm = 0;
    for (std::size_t i = 1; i < radii.size(); ++i) {
      norm += 0.5 * (radii[i] - radii[i - 1]) * (psi[i] * psi[i] + psi[i - 1] * psi[i - 1]);
    }
    const double inv = 1.0 / std::sqrt(norm);
    for (double& v : psi) v *= inv;
  }
  return psi;
}

}  // namespace pslet
