// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

#include "pslet/pade.hpp"

#include "pslet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace pslet {

namespace mp = boost::multiprecision;

namespace {

using Matrix = std::vector<std::vector<Real>>;

struct EliminationResult {
  int rank = 0;
  /// The first right-hand side lies in the column space of A.
  bool consistent = true;
  /// One solution column per right-hand side.
  Matrix solution;
};

// Gaussian elimination with full pivoting on A X = B. Columns of X whose
// pivots fall below `tol` are set to zero. Consistency is judged on the
// first column of B only; the others serve the condition estimate.
EliminationResult solve_full_pivot(Matrix a, Matrix b, const Real& tol) {
  const std::size_t n = a.size();
  const std::size_t nrhs = b.empty() ? 0 : b[0].size();
  std::vector<std::size_t> col(n);
  std::iota(col.begin(), col.end(), 0);

  EliminationResult out;
  std::size_t rank = 0;
  for (; rank < n; ++rank) {
    std::size_t pr = rank, pc = rank;
    Real best = 0;
    for (std::size_t i = rank; i < n; ++i) {
      for (std::size_t j = rank; j < n; ++j) {
        Real v = mp::abs(a[i][j]);
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (!(best > tol)) break;
    std::swap(a[rank], a[pr]);
    std::swap(b[rank], b[pr]);
    if (pc != rank) {
      for (auto& row : a) std::swap(row[rank], row[pc]);
      std::swap(col[rank], col[pc]);
    }
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (a[i][rank] == 0) continue;
      const Real f = a[i][rank] / a[rank][rank];
      for (std::size_t j = rank; j < n; ++j) a[i][j] -= f * a[rank][j];
      for (std::size_t k = 0; k < nrhs; ++k) b[i][k] -= f * b[rank][k];
    }
  }
  out.rank = static_cast<int>(rank);
  for (std::size_t i = rank; i < n && nrhs > 0; ++i) {
    if (mp::abs(b[i][0]) > tol) out.consistent = false;
  }

  out.solution.assign(nrhs, std::vector<Real>(n, Real(0)));
  for (std::size_t k = 0; k < nrhs; ++k) {
    std::vector<Real> y(n, Real(0));
    for (std::size_t ii = rank; ii-- > 0;) {
      Real s = b[ii][k];
      for (std::size_t j = ii + 1; j < rank; ++j) s -= a[ii][j] * y[j];
      y[ii] = s / a[ii][ii];
    }
    for (std::size_t j = 0; j < n; ++j) out.solution[k][col[j]] = y[j];
  }
  return out;
}

Real norm_inf(const Matrix& a) {
  Real best = 0;
  for (const auto& row : a) {
    Real s = 0;
    for (const auto& v : row) s += mp::abs(v);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

PadeEntry pade_approximant(std::span<const Real> c, PadeIndex index, const Real& x) {
  const int n = index.n;
  const int m = index.m;
  if (n < 0 || m < 0) throw Error(ErrorCode::InvalidArgument, "negative Pade order");
  if (static_cast<int>(c.size()) < n + m + 1) {
    throw Error(ErrorCode::InsufficientCoefficients,
                "[" + std::to_string(n) + "," + std::to_string(m) + "] needs " +
                    std::to_string(n + m + 1) + " coefficients");
  }
  auto coeff = [&](int k) { return k < 0 ? Real(0) : c[static_cast<std::size_t>(k)]; };

  PadeEntry entry;
  entry.index = index;
  std::vector<Real> q(static_cast<std::size_t>(m) + 1, Real(0));
  q[0] = 1;

  if (m > 0) {
    const auto dim = static_cast<std::size_t>(m);
    Matrix a(dim, std::vector<Real>(dim));
    Matrix rhs(dim, std::vector<Real>(dim + 1, Real(0)));
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) a[i - 1][j - 1] = coeff(n + i - j);
      rhs[i - 1][0] = -coeff(n + i);
      rhs[i - 1][static_cast<std::size_t>(i)] = 1;
    }
    // Pivots are judged against the whole series, so corrections that are
    // rounding noise next to c_0 count as zero.
    Real scale = 0;
    for (int k = 0; k <= n + m; ++k) scale = std::max(scale, Real(mp::abs(coeff(k))));
    const int digits = static_cast<int>(working_digits());
    const Real tol = (scale > 0 ? scale : Real(1)) * pow10_neg(digits - 10);
    EliminationResult sol = solve_full_pivot(a, rhs, tol);
    if (sol.rank < m) {
      entry.condition = std::numeric_limits<double>::infinity();
      if (sol.consistent) {
        entry.reduced_rank = true;
      } else {
        entry.degenerate = true;
      }
    } else {
      Matrix inverse(dim, std::vector<Real>(dim));
      for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t i = 0; i < dim; ++i) inverse[i][k] = sol.solution[k + 1][i];
      }
      entry.condition = to_double(norm_inf(a) * norm_inf(inverse));
      if (!(entry.condition <= kPadeConditionLimit)) entry.degenerate = true;
    }
    for (int j = 1; j <= m; ++j) q[static_cast<std::size_t>(j)] = sol.solution[0][j - 1];
  }

  Real num = 0;
  for (int i = n; i >= 0; --i) {
    Real p = 0;
    for (int j = 0; j <= std::min(i, m); ++j) p += q[static_cast<std::size_t>(j)] * coeff(i - j);
    num = num * x + p;
  }
  Real den = 0;
  for (int j = m; j >= 0; --j) den = den * x + q[static_cast<std::size_t>(j)];
  if (den == 0) {
    entry.degenerate = true;
    entry.value = Real(std::numeric_limits<double>::quiet_NaN());
  } else {
    entry.value = num / den;
  }
  return entry;
}

const PadeEntry* PadeEstimate::find(PadeIndex index) const {
  for (const auto& e : entries) {
    if (e.index == index) return &e;
  }
  return nullptr;
}

std::optional<Real> PadeEstimate::value(PadeIndex index) const {
  if (const PadeEntry* e = find(index)) return e->value;
  return std::nullopt;
}

PadeEstimate pade_table(const EnergySeries& series, int max_n, int max_m, PadeIndex selected) {
  if (max_n < 0 || max_m < 0) throw Error(ErrorCode::InvalidArgument, "negative Pade order");
  const int available = series.terms();
  if (available < max_n + max_m + 1) {
    throw Error(ErrorCode::InsufficientCoefficients,
                "Pade table up to [" + std::to_string(max_n) + "," + std::to_string(max_m) +
                    "] needs " + std::to_string(max_n + max_m + 1) + " coefficients, have " +
                    std::to_string(available));
  }
  if (selected.n > max_n || selected.m > max_m) {
    throw Error(ErrorCode::InvalidArgument, "selected Pade entry lies outside the table");
  }

  const Real lambda = 1 / series.lbar;
  const Real lbar_sq = series.lbar * series.lbar;
  PadeEstimate est;
  est.selected = selected;
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= max_m; ++m) {
      if (n + m + 1 > available) continue;
      PadeEntry e;
      if (m == 0) {
        // Same evaluation path as the partial sum, so [n,0] matches it exactly.
        e.index = {n, 0};
        e.value = evaluate_scaled_series(series.coefficients, n + 1, series.lbar);
      } else {
        e = pade_approximant(series.coefficients, {n, m}, lambda);
        e.value *= lbar_sq;
      }
      est.entries.push_back(std::move(e));
    }
  }

  est.best = est.find(selected)->value;
  if (auto refine = est.value({selected.n, selected.m + 1})) {
    est.refinement = refine;
    est.uncertainty = mp::abs(*refine - est.best);
  } else if (auto lower = est.value({selected.n - 1, selected.m})) {
    est.uncertainty = mp::abs(est.best - *lower);
  } else {
    est.uncertainty = 0;
  }
  return est;
}

StabilityReport stability_report(const PadeEstimate& estimate) {
  const PadeIndex sel = estimate.selected;
  const int top = std::min(sel.n, sel.m);
  if (top < 2) {
    throw Error(ErrorCode::InsufficientCoefficients, "stability needs entries from [2,2]");
  }
  std::vector<const PadeEntry*> window;
  for (int k = 2; k <= top; ++k) {
    for (PadeIndex idx : {PadeIndex{k, k}, PadeIndex{k, k + 1}}) {
      const PadeEntry* e = estimate.find(idx);
      if (e == nullptr) {
        throw Error(ErrorCode::InsufficientCoefficients,
                    "stability window needs [" + std::to_string(idx.n) + "," +
                        std::to_string(idx.m) + "]");
      }
      window.push_back(e);
    }
  }

  StabilityReport report;
  report.best = estimate.best;
  report.uncertainty = estimate.uncertainty;

  const int full = static_cast<int>(working_digits());
  Real lo = window.front()->value;
  Real hi = lo;
  int degenerate = 0;
  bool finite = true;
  for (const PadeEntry* e : window) {
    if (e->degenerate) ++degenerate;
    if (mp::isnan(e->value)) {
      finite = false;
      continue;
    }
    lo = std::min(lo, e->value);
    hi = std::max(hi, e->value);
  }

  int digits = 0;
  if (finite) {
    const Real spread = hi - lo;
    const Real magnitude = mp::abs(estimate.best);
    if (spread == 0) {
      digits = full;
    } else if (magnitude > 0) {
      const double rel = to_double(mp::log10(spread / magnitude));
      digits = std::clamp(static_cast<int>(std::floor(-rel)), 0, full);
    }
  }
  report.agreement_digits = std::max(0, digits - degenerate);
  return report;
}

}  // namespace pslet
