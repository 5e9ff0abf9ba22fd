// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

// Prints one PASS or FAIL line per acceptance criterion. Exit status is the
// number of failing criteria.

#include <CLI11.hpp>

#include "../oracles/reference.hpp"
#include "pslet/errors.hpp"
#include "pslet/tables.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace pslet;
namespace mp = boost::multiprecision;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double rel(const Real& a, const Real& b) {
  const Real s = mp::abs(b) > 0 ? mp::abs(b) : Real(1);
  return to_double(mp::abs(a - b) / s);
}

Solution scaled(double alpha_prime, int l = 0, SolveOptions opts = {}) {
  ProblemSpec spec;
  spec.alpha_prime = alpha_prime;
  spec.l = l;
  return solve(spec, opts);
}

Solution dimensional(int z, int l = 0, SolveOptions opts = {}) {
  ProblemSpec spec;
  spec.units = UnitMode::Dimensional;
  spec.charge = z;
  spec.l = l;
  return solve(spec, opts);
}

double kev(const Real& hartree) { return convert_units(to_double(hartree), EnergyUnit::keV); }

void within(Outcome& o, const char* label, double got, double want, double tol) {
  const double diff = std::abs(got - want);
  char buf[160];
  std::snprintf(buf, sizeof buf, " %s=%.12g (|d|=%.2e, tol %.0e)", label, got, diff, tol);
  o.detail << buf;
  o.check(diff <= tol, label);
}

void ac1(Outcome& o) {
  within(o, "E44(0.1)", to_double(scaled(0.1).pade->best), -0.407058031, 1e-8);
  within(o, "E44(0.2)", to_double(scaled(0.2).pade->best), -0.326808515, 1e-8);
  within(o, "E44(0.3)", to_double(scaled(0.3).pade->best), -0.25763869, 5e-7);
  const Solution s = scaled(0.4);
  within(o, "E44(0.4)", to_double(s.pade->best), -0.198377, 1e-5);
  within(o, "raw(0.4)", to_double(s.series.partial_sum), -0.198260722, 1e-8);
}

void ac2(Outcome& o) {
  within(o, "E44(0.01)", to_double(scaled(0.01).pade->best), -0.490074506746694, 1e-12);
  within(o, "E44(0.02)", to_double(scaled(0.02).pade->best), -0.48029610598378, 1e-12);
  within(o, "E44(0.03)", to_double(scaled(0.03).pade->best), -0.4706620270246, 1e-11);
}

void ac3(Outcome& o) {
  double worst = 0;
  for (int l = 0; l <= 3; ++l) {
    const Solution s = scaled(0.0, l);
    PrecisionScope scope(s.digits);
    const Real e_m2 = mp::abs(s.series.coefficient(-2));
    for (int n = -1; n + 2 < s.series.terms(); ++n) {
      worst = std::max(worst, to_double(mp::abs(s.series.coefficient(n)) / e_m2));
    }
    const double exact = -1.0 / (2.0 * (l + 1) * (l + 1));
    o.check(std::abs(to_double(s.best_energy()) - exact) <= 1e-12 * std::abs(exact),
            "total energy l=" + std::to_string(l));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, " l=0..3 max|E(n>=-1)|/|E(-2)|=%.2e (tol 1e-12)", worst);
  o.detail << buf;
  o.check(worst < 1e-12, "corrections");
}

void ac4(Outcome& o) {
  within(o, "Z=3", kev(dimensional(3).pade->best), -0.05414708, 2e-7);
  within(o, "Z=24", kev(dimensional(24).pade->best), -6.18276521, 1e-6);
  within(o, "Z=84", kev(dimensional(84).pade->best), -86.5787759, 1e-5);
}

void ac5(Outcome& o) {
  within(o, "Z=24", kev(dimensional(24, 1).pade->best), -0.599912, 1e-5);
  within(o, "Z=54", kev(dimensional(54, 1).pade->best), -5.3557727, 1e-5);
  within(o, "Z=29", kev(dimensional(29, 1).pade->best), -1.0450957, 1e-5);
}

void ac6(Outcome& o) {
  double worst = 0;
  for (int z : {3, 19, 49}) {
    const Solution dim = dimensional(z);
    double alpha = 0;
    {
      PrecisionScope scope(kDefaultDigits);
      alpha = to_double(screening_alpha(ScreeningRule{}, z));
    }
    const Solution sc = scaled(alpha / z);
    PrecisionScope scope(kDefaultDigits);
    const double r = rel(dim.best_energy(), sc.best_energy() * z * z);
    worst = std::max(worst, r);
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, " Z=3,19,49 max rel=%.2e (tol 1e-10)", worst);
  o.detail << buf;
  o.check(worst <= 1e-10, "scaling");
}

// Rounds to the decimals quoted in the reference column.
double quoted(double x, int decimals) {
  const double f = std::pow(10.0, decimals);
  return std::round(x * f) / f;
}

void ac7(Outcome& o) {
  SolveOptions four;
  four.terms = 4;
  four.pade = {1, 1};
  const double k = kev(dimensional(24, 0, four).series.partial_sum);
  const double l = kev(dimensional(54, 1, four).series.partial_sum);
  within(o, "Z=24 K", quoted(k, 5), -6.18277, 1e-9);
  within(o, "Z=54 L", quoted(l, 5), -5.35577, 1e-9);
}

void ac8(Outcome& o) {
  std::mt19937 rng(20260101u);
  std::uniform_real_distribution<double> alpha(0.01, 0.35);
  std::uniform_int_distribution<int> ang(0, 2);
  SolveOptions four;
  four.terms = 4;
  four.pade = {1, 1};
  double worst = 0;
  // Draws without a circular orbit (l = 2 beyond alpha' ~ 0.134) are redrawn.
  int rejected = 0;
  for (int trial = 0; trial < 20;) {
    const double a = alpha(rng);
    const int l = ang(rng);
    std::optional<Solution> maybe;
    try {
      maybe = scaled(a, l, four);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundStateNotFound) throw;
      ++rejected;
      continue;
    }
    ++trial;
    const Solution& s = *maybe;
    PrecisionScope scope(s.digits);
    const OrbitConfig& c = s.orbit;
    const Real ar = decimal(a);
    const auto ref = pslet_test::low_order_closed_form(
        c.r0, c.w, c.beta, c.q, pslet_test::yukawa_d3(Real(1), ar, c.r0),
        pslet_test::yukawa_d4(Real(1), ar, c.r0));
    for (double r : {rel(s.polynomials.b1(), ref.b1), rel(s.polynomials.b2(), ref.b2),
                     rel(s.riccati.c(1, 0), ref.c10), rel(s.riccati.c(0, 0), ref.c00),
                     rel(s.riccati.d(1, 0), ref.d10), rel(s.riccati.d(2, 2), ref.d22),
                     rel(s.riccati.d(1, 2), ref.d12), rel(s.riccati.lambda.at(0), ref.lambda0)}) {
      worst = std::max(worst, r);
    }
    const Real e0 = (c.beta * (c.beta + 1) / 2 + ref.lambda0) / (c.r0 * c.r0);
    worst = std::max(worst, rel(s.series.coefficient(0), e0));
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, " 20 configurations (%d redrawn) max rel=%.2e (tol 1e-12)",
                rejected, worst);
  o.detail << buf;
  o.check(worst <= 1e-12, "identities");
}

void ac9(Outcome& o) {
  const std::vector<std::pair<double, double>> exact{
      {0.1, -0.407058031}, {0.2, -0.326808515}, {0.3, -0.25763869}};
  for (const auto& [ap, want] : exact) {
    const std::string label = "oracle(" + std::to_string(ap).substr(0, 3) + ")";
    within(o, label.c_str(), scaled_oracle(ap, 0, 0, 20000).eigenvalue, want, 1e-7);
  }
  double worst = 0;
  for (double ap : {0.01, 0.02, 0.03, 0.1, 0.2, 0.3}) {
    worst = std::max(worst, std::abs(scaled_oracle(ap, 0, 0, 20000).eigenvalue -
                                     to_double(scaled(ap).pade->best)));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, " max|oracle-E44|=%.2e (tol 1e-6)", worst);
  o.detail << buf;
  o.check(worst <= 1e-6, "oracle vs E44");
  // Halving the log spacing shrinks the error by about 2^4 on coarse grids
  // and moves the production-grid eigenvalue by less than the tolerance.
  for (double ap : {0.1, 0.3}) {
    const double e1 = scaled_oracle(ap, 0, 0, 1000).eigenvalue;
    const double e2 = scaled_oracle(ap, 0, 0, 2000).eigenvalue;
    const double e3 = scaled_oracle(ap, 0, 0, 4000).eigenvalue;
    const double ratio = (e1 - e2) / (e2 - e3);
    const double step = std::abs(scaled_oracle(ap, 0, 0, 20000).eigenvalue -
                                 scaled_oracle(ap, 0, 0, 40000).eigenvalue);
    char rb[96];
    std::snprintf(rb, sizeof rb, " ratio(%.1f)=%.1f halving-step=%.1e", ap, ratio, step);
    o.detail << rb;
    o.check(ratio > 10.0 && ratio < 24.0 && step < 1e-7, "richardson");
  }
}

void ac10(Outcome& o) {
  PrecisionScope scope(kDefaultDigits);
  ScreeningRule rule;
  rule.mode = ScreeningMode::Scaled;
  int argmax = 1;
  Real best = screening_alpha(rule, 1);
  bool monotone = true;
  bool below = true;
  Real prev = screening_alpha(rule, 2);
  for (int z = 1; z <= 200; ++z) {
    const Real a = screening_alpha(rule, z);
    if (a > best) {
      best = a;
      argmax = z;
    }
    below = below && a < Real(0.4);
    if (z > 2) {
      monotone = monotone && a < prev;
      prev = a;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, " argmax Z=%d value=%.10f", argmax, to_double(best));
  o.detail << buf;
  o.check(argmax == 2, "argmax");
  o.check(std::abs(to_double(best) - 0.38891326) <= 1e-8, "max value");
  o.check(monotone, "monotone");
  o.check(below, "below 0.4");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string only;
  app.add_option("--only", only, "run a single criterion, e.g. AC3");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};

  int failures = 0;
  int ran = 0;
  for (const auto& [name, fn] : criteria) {
    if (!only.empty() && only != name) continue;
    ++ran;
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [error: " << e.what() << "]";
    }
    std::printf("%s %s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  if (ran == 0) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return failures;
}
