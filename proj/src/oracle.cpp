// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "pslet/oracle.hpp"

#include "pslet/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pslet {

RadialGrid RadialGrid::default_for(double energy_guess) {
  RadialGrid g;
  const double e = std::abs(energy_guess);
  if (e > 0) g.r_max = std::max(40.0, 30.0 / std::sqrt(2.0 * e));
  return g;
}

std::vector<double> RadialGrid::radii() const {
  std::vector<double> r(static_cast<std::size_t>(points));
  if (spacing == GridSpacing::Log) {
    const double t0 = std::log(r_min);
    const double h = (std::log(r_max) - t0) / (points - 1);
    for (int i = 0; i < points; ++i) r[static_cast<std::size_t>(i)] = std::exp(t0 + i * h);
  } else {
    const double h = (r_max - r_min) / (points - 1);
    for (int i = 0; i < points; ++i) r[static_cast<std::size_t>(i)] = r_min + i * h;
  }
  r.back() = r_max;
  return r;
}

namespace {

constexpr double kRescale = 1e200;

// phi'' = (a_i - b_i E) phi on a uniform grid in the integration variable,
// with u = phi (uniform) or u = sqrt(r) phi (log, r = e^t).
class NumerovProblem {
 public:
  NumerovProblem(const PotentialModel& v, int l, const RadialGrid& grid)
      : r_(grid.radii()), log_(grid.spacing == GridSpacing::Log), l_(l) {
    const std::size_t n = r_.size();
    a_.resize(n);
    b_.resize(n);
    v_.resize(n);
    h_ = log_ ? (std::log(grid.r_max) - std::log(grid.r_min)) / (grid.points - 1)
              : (grid.r_max - grid.r_min) / (grid.points - 1);
    const double lh = l + 0.5;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = r_[i];
      v_[i] = v.value(r);
      if (log_) {
        a_[i] = 2.0 * r * r * v_[i] + lh * lh;
        b_[i] = 2.0 * r * r;
      } else {
        a_[i] = 2.0 * v_[i] + l * (l + 1.0) / (r * r);
        b_[i] = 2.0;
      }
    }
    const double power = log_ ? lh : l + 1.0;
    start_ratio_ = std::pow(r_[1] / r_[0], power);
  }

  [[nodiscard]] std::size_t size() const { return r_.size(); }
  [[nodiscard]] const std::vector<double>& radii() const { return r_; }
  [[nodiscard]] double step() const { return h_; }

  [[nodiscard]] double f(std::size_t i, double e) const { return a_[i] - b_[i] * e; }
  [[nodiscard]] double g(std::size_t i, double e) const { return 1.0 - h_ * h_ * f(i, e) / 12.0; }

  [[nodiscard]] double effective_potential(std::size_t i) const {
    return v_[i] + l_ * (l_ + 1.0) / (2.0 * r_[i] * r_[i]);
  }
  [[nodiscard]] double potential(std::size_t i) const { return v_[i]; }

  [[nodiscard]] double to_u(std::size_t i, double phi) const {
    return log_ ? std::sqrt(r_[i]) * phi : phi;
  }

  /// Sign changes of the outward solution over the whole grid.
  [[nodiscard]] int count_nodes(double e) const {
    double prev = 1.0;
    double cur = start_ratio_;
    int nodes = 0;
    for (std::size_t i = 1; i + 1 < size(); ++i) {
      double next = ((12.0 - 10.0 * g(i, e)) * cur - g(i - 1, e) * prev) / g(i + 1, e);
      if ((next < 0) != (cur < 0) && next != 0) ++nodes;
      prev = cur;
      cur = next;
      if (std::abs(cur) > kRescale) {
        prev /= kRescale;
        cur /= kRescale;
      }
    }
    return nodes;
  }

  void integrate_out(double e, std::size_t stop, std::vector<double>& phi) const {
    phi.assign(size(), 0.0);
    phi[0] = 1.0;
    phi[1] = start_ratio_;
    for (std::size_t i = 1; i < stop; ++i) {
      phi[i + 1] = ((12.0 - 10.0 * g(i, e)) * phi[i] - g(i - 1, e) * phi[i - 1]) / g(i + 1, e);
      if (std::abs(phi[i + 1]) > kRescale) {
        for (std::size_t j = 0; j <= i + 1; ++j) phi[j] /= kRescale;
      }
    }
  }

  void integrate_in(double e, std::size_t stop, std::vector<double>& phi) const {
    const std::size_t n = size();
    phi.assign(n, 0.0);
    phi[n - 1] = 0.0;
    phi[n - 2] = 1e-100;
    for (std::size_t i = n - 2; i > stop; --i) {
      phi[i - 1] = ((12.0 - 10.0 * g(i, e)) * phi[i] - g(i + 1, e) * phi[i + 1]) / g(i - 1, e);
      if (std::abs(phi[i - 1]) > kRescale) {
        for (std::size_t j = i - 1; j < n; ++j) phi[j] /= kRescale;
      }
    }
  }

  /// Outermost classically allowed point, clamped away from the ends.
  [[nodiscard]] std::size_t turning_point(double e) const {
    std::size_t idx = 2;
    for (std::size_t i = 0; i < size(); ++i) {
      if (f(i, e) < 0) idx = i;
    }
    return std::clamp<std::size_t>(idx, 2, size() - 3);
  }

 private:
  std::vector<double> r_, a_, b_, v_;
  bool log_;
  int l_;
  double h_ = 0.0;
  double start_ratio_ = 1.0;
};

struct Mismatch {
  double value = 0.0;
  double relative = 0.0;
};

Mismatch log_derivative_mismatch(const NumerovProblem& p, double e, std::vector<double>& out,
                                 std::vector<double>& in) {
  const std::size_t m = p.turning_point(e);
  p.integrate_out(e, m + 1, out);
  p.integrate_in(e, m - 1, in);
  const double d_out = (out[m + 1] - out[m - 1]) / (2.0 * p.step() * out[m]);
  const double d_in = (in[m + 1] - in[m - 1]) / (2.0 * p.step() * in[m]);
  Mismatch mm;
  mm.value = d_out - d_in;
  mm.relative = std::abs(mm.value) / std::max({std::abs(d_out), std::abs(d_in), 1.0});
  return mm;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return s;
}

}  // namespace

OracleResult oracle_eigenvalue(const PotentialModel& potential, int l, int n_r,
                               const RadialGrid& grid) {
  if (l < 0 || n_r < 0) throw Error(ErrorCode::InvalidArgument, "negative quantum number");
  if (!(grid.r_min > 0) || !(grid.r_max > grid.r_min)) {
    throw Error(ErrorCode::InvalidArgument, "grid needs 0 < r_min < r_max");
  }
  if (grid.points < kMinOraclePoints) {
    throw Error(ErrorCode::InvalidArgument,
                "eigenvalue runs need at least " + std::to_string(kMinOraclePoints) + " points");
  }

  const NumerovProblem p(potential, l, grid);
  OracleResult res;

  double floor = p.effective_potential(0);
  for (std::size_t i = 0; i < p.size(); ++i) floor = std::min(floor, p.effective_potential(i));
  double hi = 0.0;
  if (p.count_nodes(hi) <= n_r) {
    throw Error(ErrorCode::NoBoundState,
                "no bound state with " + std::to_string(n_r) + " nodes below E = 0");
  }
  // Numerov is unstable far below the spectrum, so the lower bracket grows
  // from -1 instead of starting at the well bottom.
  double lo = std::max(-1.0, floor);
  while (p.count_nodes(lo) > n_r && lo > floor) lo = std::max(2.0 * lo, floor);
  if (p.count_nodes(lo) > n_r) {
    throw Error(ErrorCode::NoBoundState, "node count bracketing failed at the well bottom");
  }

  int iterations = 0;
  while (hi - lo > 1e-12 && iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (p.count_nodes(mid) <= n_r) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  double energy = 0.5 * (lo + hi);

  // Ridders on the matching mismatch.
  std::vector<double> out, in;
  auto mismatch = [&](double e) { return log_derivative_mismatch(p, e, out, in).value; };
  double a = energy - 1e-9, b = energy + 1e-9;
  double fa = mismatch(a), fb = mismatch(b);
  for (int grow = 0; grow < 6 && (fa > 0) == (fb > 0); ++grow) {
    a = energy - (energy - a) * 10.0;
    b = energy + (b - energy) * 10.0;
    fa = mismatch(a);
    fb = mismatch(b);
  }
  if ((fa > 0) != (fb > 0)) {
    for (int it = 0; it < 60; ++it) {
      ++iterations;
      const double mid = 0.5 * (a + b);
      const double fm = mismatch(mid);
      const double s = std::sqrt(fm * fm - fa * fb);
      if (s == 0.0) {
        energy = mid;
        break;
      }
      const double sign = (fa - fb) < 0 ? -1.0 : 1.0;
      const double x = mid + (mid - a) * sign * fm / s;
      const double fx = mismatch(x);
      energy = x;
      if (fx == 0.0 || std::abs(b - a) < 1e-15) break;
      if ((fm > 0) != (fx > 0)) {
        a = mid;
        fa = fm;
        b = x;
        fb = fx;
      } else if ((fa > 0) != (fx > 0)) {
        b = x;
        fb = fx;
      } else {
        a = x;
        fa = fx;
      }
      if (std::abs(b - a) < 1e-14 * std::max(1.0, std::abs(energy))) break;
    }
  }

  const Mismatch final_mismatch = log_derivative_mismatch(p, energy, out, in);
  const std::size_t m = p.turning_point(energy);
  const double scale = out[m] / in[m];
  const auto& r = p.radii();
  res.eigenvalue = energy;
  res.mismatch = final_mismatch.relative;
  res.iterations = iterations;
  res.radii = r;
  res.wavefunction.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double phi = i <= m ? out[i] : in[i] * scale;
    res.wavefunction[i] = p.to_u(i, phi);
  }
  std::vector<double> sq(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) sq[i] = res.wavefunction[i] * res.wavefunction[i];
  const double norm = std::sqrt(trapezoid(r, sq));
  double peak = 0.0;
  for (double& u : res.wavefunction) {
    u /= norm;
    peak = std::max(peak, std::abs(u));
  }
  // Orient the function positive near the origin.
  if (res.wavefunction[1] < 0) {
    for (double& u : res.wavefunction) u = -u;
  }

  for (std::size_t i = 1; i < p.size(); ++i) {
    const double u0 = res.wavefunction[i - 1];
    const double u1 = res.wavefunction[i];
    if ((u0 < 0) != (u1 < 0) && u1 != 0.0 && std::abs(u0) + std::abs(u1) > 1e-10 * peak) {
      ++res.nodes;
    }
  }

  std::vector<double> vu(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    vu[i] = p.potential(i) * res.wavefunction[i] * res.wavefunction[i];
  }
  res.kinetic = energy - trapezoid(r, vu);

  double decay = 0.0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const double k0 = p.effective_potential(i - 1) - energy;
    const double k1 = p.effective_potential(i) - energy;
    if (r[i - 1] < r[m] || k0 <= 0 || k1 <= 0) continue;
    decay += 0.5 * (r[i] - r[i - 1]) * (std::sqrt(2.0 * k0) + std::sqrt(2.0 * k1));
  }
  res.tail_decay = std::exp(-decay);
  if (res.tail_decay > 1e-12) {
    throw Error(ErrorCode::GridInsufficient,
                "wavefunction has not decayed below 1e-12 at r_max; enlarge the grid");
  }
  return res;
}

}  // namespace pslet
