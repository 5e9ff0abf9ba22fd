// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "../oracles/reference.hpp"
#include "pslet/errors.hpp"
#include "pslet/oracle.hpp"
#include "pslet/series.hpp"
#include "pslet/solver.hpp"
#include "pslet/tables.hpp"

#include <cmath>
#include <random>

using namespace pslet;
namespace mp = boost::multiprecision;

namespace {

double rel(const Real& a, const Real& b) {
  const Real s = mp::abs(b) > 0 ? mp::abs(b) : Real(1);
  return to_double(mp::abs(a - b) / s);
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

struct Pipeline {
  QuantumProblem problem;
  OrbitConfig orbit;
  PerturbationPolynomials polys;
  RiccatiSolution riccati;
  EnergySeries series;
};

Pipeline run(const QuantumProblem& p, int terms = kDefaultSeriesTerms) {
  Pipeline out;
  out.problem = p;
  out.orbit = solve_r0(p);
  const int k = polynomial_index_for_terms(terms);
  out.polys = build_perturbation_polynomials(out.orbit, p.potential, k);
  out.riccati = solve_riccati_hierarchy(out.polys, out.orbit, k);
  out.series = assemble_energy_series(out.riccati, out.orbit, terms);
  return out;
}

QuantumProblem coulomb(int l) {
  QuantumProblem p;
  p.potential = PotentialModel::coulomb(Real(1));
  p.l = l;
  return p;
}

Polynomial scaled(const Polynomial& p, const Real& f) {
  std::vector<Real> c = p.coefficients();
  for (Real& x : c) x *= f;
  return Polynomial(std::move(c));
}

bool support_is(const Polynomial& p, std::vector<int> expected) {
  return p.support() == expected;
}

}  // namespace

TEST_CASE("coulomb leading perturbation polynomial and B1") {
  PrecisionScope scope(50);
  const Pipeline c = run(coulomb(0));
  CHECK(rel(c.polys[0][2], Real(0.5)) < 1e-40);
  CHECK(rel(c.polys[0][0], Real(-0.5)) < 1e-40);
  CHECK(support_is(c.polys[0], {0, 2}));
  // r0 carries the root-finder tolerance, about 1e-30.
  CHECK(rel(c.polys.b1(), Real(-1)) < 1e-28);
}

TEST_CASE("perturbation polynomial structure and closed-form B1, B2") {
  PrecisionScope scope(50);
  const Pipeline y = run(QuantumProblem::scaled(decimal(0.1), 0));
  CHECK(support_is(y.polys[1], {1, 3}));
  for (int n = 2; n <= y.polys.max_index(); ++n) {
    CAPTURE(n);
    CHECK(support_is(y.polys[n], {n - 2, n, n + 2}));
  }
  const Real a = decimal(0.1);
  const Real& r0 = y.orbit.r0;
  const Real b1 = -2 + mp::pow(r0, 5) * pslet_test::yukawa_d3(Real(1), a, r0) / (6 * y.orbit.q);
  const Real b2 = Real(5) / 2 +
                  mp::pow(r0, 6) * pslet_test::yukawa_d4(Real(1), a, r0) / (24 * y.orbit.q);
  CHECK(rel(y.polys.b1(), b1) < 1e-40);
  CHECK(rel(y.polys.b2(), b2) < 1e-40);
}

TEST_CASE("hierarchy satisfies the Riccati balance order by order") {
  PrecisionScope scope(50);
  const Pipeline y = run(QuantumProblem::scaled(decimal(0.2), 1));
  const auto& w = y.riccati.flux;
  for (int k = 0; k <= y.riccati.max_index(); ++k) {
    const Real half(-0.5);
    Polynomial lhs = y.polys[k] + scaled(w[static_cast<std::size_t>(k)].derivative(), half);
    for (int i = 0; i <= k; ++i) {
      lhs = lhs + scaled(w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(k - i)], half);
    }
    CAPTURE(k);
    CHECK(mp::abs(lhs[0] - y.riccati.balance[static_cast<std::size_t>(k)]) < Real("1e-40"));
    for (int p = 1; p <= lhs.degree(); ++p) CHECK(mp::abs(lhs[p]) < Real("1e-40"));
  }
}

TEST_CASE("parity blocks of the hierarchy") {
  PrecisionScope scope(50);
  const Pipeline y = run(QuantumProblem::scaled(decimal(0.1), 0));
  CHECK(rel(y.riccati.d(1, 0), -y.orbit.w) < 1e-45);
  CHECK(y.riccati.u(1).support().empty());
  CHECK(y.riccati.g(1).support().empty());
  for (int n = 0; n + 1 <= y.riccati.max_index(); ++n) {
    CHECK(y.riccati.d(0, n) == 0);
    for (int p : y.riccati.u(n).support()) CHECK(p % 2 == 1);
    for (int p : y.riccati.g(n).support()) CHECK(p % 2 == 0);
    // U^(n) and G^(n) vanish for odd n.
    if (n % 2 == 1) {
      CHECK(y.riccati.u(n).support().empty());
      CHECK(y.riccati.g(n).support().empty());
    }
  }
}

TEST_CASE("second-order solution equals direct substitution") {
  PrecisionScope scope(50);
  const Real a = decimal(0.1);
  const Pipeline y = run(QuantumProblem::scaled(a, 0));
  const OrbitConfig& o = y.orbit;
  const auto ref = pslet_test::low_order_closed_form(o.r0, o.w, o.beta, o.q,
                                                     pslet_test::yukawa_d3(Real(1), a, o.r0),
                                                     pslet_test::yukawa_d4(Real(1), a, o.r0));
  CHECK(rel(y.riccati.d(1, 0), ref.d10) < 1e-12);
  CHECK(rel(y.riccati.c(1, 0), ref.c10) < 1e-12);
  CHECK(rel(y.riccati.c(0, 0), ref.c00) < 1e-12);
  CHECK(rel(y.riccati.d(2, 2), ref.d22) < 1e-12);
  CHECK(rel(y.riccati.d(1, 2), ref.d12) < 1e-12);
  CHECK(rel(y.riccati.lambda.at(0), ref.lambda0) < 1e-12);
}

TEST_CASE("second-order identities on randomized configurations") {
  PrecisionScope scope(50);
  std::mt19937 rng(20260101u);
  std::uniform_real_distribution<double> alpha(0.01, 0.35);
  std::uniform_int_distribution<int> ang(0, 2);
  // Draws without a circular orbit are rejected and redrawn.
  int rejected = 0;
  for (int trial = 0; trial < 20;) {
    const Real a = decimal(alpha(rng));
    const int l = ang(rng);
    Pipeline y;
    try {
      y = run(QuantumProblem::scaled(a, l), 4);
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::BoundStateNotFound);
      ++rejected;
      continue;
    }
    ++trial;
    const OrbitConfig& o = y.orbit;
    const auto ref = pslet_test::low_order_closed_form(
        o.r0, o.w, o.beta, o.q, pslet_test::yukawa_d3(Real(1), a, o.r0),
        pslet_test::yukawa_d4(Real(1), a, o.r0));
    CAPTURE(trial);
    CHECK(rel(y.polys.b1(), ref.b1) < 1e-12);
    CHECK(rel(y.polys.b2(), ref.b2) < 1e-12);
    CHECK(rel(y.riccati.c(1, 0), ref.c10) < 1e-12);
    CHECK(rel(y.riccati.c(0, 0), ref.c00) < 1e-12);
    CHECK(rel(y.riccati.d(2, 2), ref.d22) < 1e-12);
    CHECK(rel(y.riccati.d(1, 2), ref.d12) < 1e-12);
    CHECK(rel(y.riccati.lambda.at(0), ref.lambda0) < 1e-12);
  }
  CHECK(rejected < 20);
}

TEST_CASE("energy coefficients follow from the eigenvalue corrections") {
  PrecisionScope scope(50);
  const Pipeline y = run(QuantumProblem::scaled(decimal(0.3), 0));
  const OrbitConfig& o = y.orbit;
  const Real r2 = o.r0 * o.r0;
  CHECK(rel(y.series.coefficient(-2), o.e_m2) < 1e-45);
  CHECK(mp::abs(y.series.coefficient(-1)) <= Real("1e-12") * mp::abs(o.e_m2));
  CHECK(rel(y.series.coefficient(0), (o.beta * (o.beta + 1) / 2 + y.riccati.lambda[0]) / r2) <
        1e-40);
  for (int n = 1; n + 2 < y.series.terms(); ++n) {
    CHECK(rel(y.series.coefficient(n), y.riccati.lambda[static_cast<std::size_t>(n)] / r2) <
          1e-40);
  }
  Real sum = 0;
  for (int n = -2; n + 2 < y.series.terms(); ++n) {
    sum += y.series.coefficient(n) * mp::pow(o.lbar, -n);
  }
  CHECK(rel(y.series.partial_sum, sum) < 1e-40);
  CHECK(y.series.term_magnitudes().size() == 10);
}

TEST_CASE("coulomb series collapses to the leading term") {
  PrecisionScope scope(50);
  for (int l = 0; l <= 3; ++l) {
    const Pipeline c = run(coulomb(l));
    const Real e_m2 = mp::abs(c.series.coefficient(-2));
    CAPTURE(l);
    for (std::size_t n = 0; n < c.riccati.lambda.size(); ++n) {
      CHECK(mp::abs(c.riccati.lambda[n]) < Real("1e-12") * e_m2);
    }
    for (int n = -1; n + 2 < c.series.terms(); ++n) {
      CHECK(mp::abs(c.series.coefficient(n)) < Real("1e-12") * e_m2);
    }
    CHECK(rel(c.series.partial_sum, Real(-1) / (2 * (l + 1) * (l + 1))) < 1e-30);
  }
}

TEST_CASE("ten-term partial sums") {
  PrecisionScope scope(50);
  SUBCASE("published raw sum at alpha' = 0.1") {
    const Pipeline y = run(QuantumProblem::scaled(decimal(0.1), 0));
    CHECK(std::abs(to_double(y.series.partial_sum) - -0.40705803) < 1e-8);
  }
  SUBCASE("raw sum at alpha' = 0.4 against direct integration") {
    const Pipeline y = run(QuantumProblem::scaled(decimal(0.4), 0));
    const double oracle = scaled_oracle(0.4, 0, 0, 20000).eigenvalue;
    CHECK(std::abs(to_double(y.series.partial_sum) - oracle) < 1e-7);
  }
}

TEST_CASE("four-term sums match the shifted large-N values") {
  SolveOptions opts;
  opts.terms = 4;
  opts.pade = {1, 1};
  ProblemSpec k;
  k.units = UnitMode::Dimensional;
  k.charge = 24;
  const Solution sk = solve(k, opts);
  const double kev_k = to_double(sk.series.partial_sum) * 27.196 / 1000;
  CHECK(std::round(kev_k * 1e5) / 1e5 == doctest::Approx(-6.18277).epsilon(1e-12));

  ProblemSpec l1 = k;
  l1.charge = 54;
  l1.l = 1;
  const Solution sl = solve(l1, opts);
  const double kev_l = to_double(sl.series.partial_sum) * 27.196 / 1000;
  CHECK(std::round(kev_l * 1e5) / 1e5 == doctest::Approx(-5.35577).epsilon(1e-12));
}

TEST_CASE("wavefunction is positive, Gaussian at leading order and normalizable") {
  PrecisionScope scope(50);
  const Pipeline c = run(coulomb(0));
  std::vector<double> radii;
  // The log-derivative series about r0 converges only for r < 2 r0.
  for (int i = 1; i <= 190; ++i) radii.push_back(0.01 * i);

  WavefunctionOptions leading;
  leading.max_index = 0;
  const auto psi0 = reconstruct_wavefunction(c.riccati, c.orbit, radii, leading);
  const double r0 = to_double(c.orbit.r0);
  const double w = to_double(c.orbit.w);
  const double lbar = to_double(c.orbit.lbar);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double x = std::sqrt(lbar) * (radii[i] - r0) / r0;
    CHECK(psi0[i] == doctest::Approx(std::exp(-w * x * x / 2)).epsilon(1e-12));
  }

  WavefunctionOptions norm;
  norm.normalize = true;
  const auto psi = reconstruct_wavefunction(c.riccati, c.orbit, radii, norm);
  double integral = 0;
  for (std::size_t i = 1; i < radii.size(); ++i) {
    CHECK(psi[i] > 0);
    integral += 0.5 * (radii[i] - radii[i - 1]) * (psi[i] * psi[i] + psi[i - 1] * psi[i - 1]);
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-12));

  // Full series against the exact r exp(-r), scaled to one at r0 = 1, where
  // the truncated log series is accurate.
  const auto full = reconstruct_wavefunction(c.riccati, c.orbit, radii);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 0.6 || radii[i] > 1.4) continue;
    const double exact = radii[i] * std::exp(1 - radii[i]);
    CHECK(full[i] == doctest::Approx(exact).epsilon(1e-5));
  }

  const std::vector<double> few(radii.begin(), radii.begin() + 15);
  CHECK(code_of([&] { (void)reconstruct_wavefunction(c.riccati, c.orbit, few, norm); }) ==
        ErrorCode::GridTooCoarse);
}

TEST_CASE("wavefunction peak matches the direct solution") {
  PrecisionScope scope(50);
  const Pipeline y = run(QuantumProblem::scaled(decimal(0.1), 0));
  const OracleResult o = scaled_oracle(0.1, 0, 0, 20000);
  std::size_t io = 0;
  for (std::size_t i = 0; i < o.wavefunction.size(); ++i) {
    if (o.wavefunction[i] > o.wavefunction[io]) io = i;
  }
  std::vector<double> radii;
  for (int i = 1; i <= 2000; ++i) radii.push_back(0.002 * i);
  const auto psi = reconstruct_wavefunction(y.riccati, y.orbit, radii);
  std::size_t ip = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    CHECK(psi[i] >= 0);
    if (psi[i] > psi[ip]) ip = i;
  }
  CHECK(std::abs(radii[ip] - o.radii[io]) / o.radii[io] < 0.05);
}

TEST_CASE("hierarchy errors") {
  PrecisionScope scope(50);
  const QuantumProblem p = QuantumProblem::scaled(decimal(0.1), 0);
  const OrbitConfig o = solve_r0(p);
  const auto capped = p.potential.with_max_order(8);
  CHECK(code_of([&] { (void)build_perturbation_polynomials(o, capped, 8); }) ==
        ErrorCode::DerivativeUnavailable);
  const auto polys = build_perturbation_polynomials(o, p.potential, 4);

  OrbitConfig excited = o;
  excited.n_r = 1;
  CHECK(code_of([&] { (void)solve_riccati_hierarchy(polys, excited, 4); }) ==
        ErrorCode::OrderUnsupported);

  OrbitConfig flat = o;
  flat.w = 0;
  CHECK(code_of([&] { (void)solve_riccati_hierarchy(polys, flat, 4); }) ==
        ErrorCode::HierarchyBreakdown);
}
