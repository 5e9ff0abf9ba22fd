// Copyright 2026 The pslet Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations for the test suites. Nothing here calls
// into the recursion or root finder under test; every value is produced from
// closed forms, plain bisection or finite differences.

#pragma once

#include "pslet/precision.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace pslet_test {

using pslet::Real;
namespace mp = boost::multiprecision;

/// -Z exp(-alpha r) / r.
inline Real yukawa_value(const Real& z, const Real& alpha, const Real& r) {
  return -z * mp::exp(-alpha * r) / r;
}

/// V' = Z e^{-a r} (1 + a r) / r^2.
inline Real yukawa_d1(const Real& z, const Real& a, const Real& r) {
  return z * mp::exp(-a * r) * (1 + a * r) / (r * r);
}

/// V'' = -Z e^{-a r} (2 + 2 a r + a^2 r^2) / r^3.
inline Real yukawa_d2(const Real& z, const Real& a, const Real& r) {
  return -z * mp::exp(-a * r) * (2 + 2 * a * r + a * a * r * r) / (r * r * r);
}

/// V''' = Z e^{-a r} (6 + 6 a r + 3 a^2 r^2 + a^3 r^3) / r^4.
inline Real yukawa_d3(const Real& z, const Real& a, const Real& r) {
  const Real ar = a * r;
  return z * mp::exp(-ar) * (6 + 6 * ar + 3 * ar * ar + ar * ar * ar) / mp::pow(r, 4);
}

/// V'''' = -Z e^{-a r} (24 + 24 a r + 12 a^2 r^2 + 4 a^3 r^3 + a^4 r^4) / r^5.
inline Real yukawa_d4(const Real& z, const Real& a, const Real& r) {
  const Real ar = a * r;
  return -z * mp::exp(-ar) *
         (24 + 24 * ar + 12 * ar * ar + 4 * ar * ar * ar + ar * ar * ar * ar) / mp::pow(r, 5);
}

/// Seven-point central stencil for f' (sixth order).
inline Real central7(const std::function<Real(const Real&)>& f, const Real& x, const Real& h) {
  return (-f(x - 3 * h) + 9 * f(x - 2 * h) - 45 * f(x - h) + 45 * f(x + h) -
          9 * f(x + 2 * h) + f(x + 3 * h)) /
         (60 * h);
}

/// w = sqrt((-a^2 r^2 + a r + 1) / (a r + 1)), the Yukawa-specialized form.
inline Real yukawa_w(const Real& a, const Real& r0) {
  const Real ar = a * r0;
  return mp::sqrt((-ar * ar + ar + 1) / (ar + 1));
}

/// Root of l + (1 + w)/2 = sqrt(Z r e^{-a r}(a r + 1)) by plain bisection on
/// (lo, hi) to the working precision.
inline Real bisect_yukawa_r0(const Real& z, const Real& a, int l, Real lo, Real hi) {
  auto f = [&](const Real& r) {
    return l + (1 + yukawa_w(a, r)) / 2 - mp::sqrt(z * r * mp::exp(-a * r) * (a * r + 1));
  };
  Real flo = f(lo);
  for (int i = 0; i < 400; ++i) {
    const Real mid = (lo + hi) / 2;
    const Real fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

/// Second-order hierarchy quantities written out term by term.
struct LowOrder {
  Real d10, b1, c10, c00, b2, d22, d12, lambda0;
};

/// Direct substitution chain for the nodeless state through lambda^(0).
inline LowOrder low_order_closed_form(const Real& r0, const Real& w, const Real& beta,
                                      const Real& q, const Real& v3, const Real& v4) {
  LowOrder o;
  o.d10 = -w;
  o.b1 = -2 + mp::pow(r0, 5) * v3 / (6 * q);
  o.c10 = -o.b1 / w;
  o.c00 = (o.c10 + 2 * beta + 1) / w;
  o.b2 = Real(5) / 2 + mp::pow(r0, 6) * v4 / (24 * q);
  o.d22 = (o.c10 * o.c10 / 2 - o.b2) / w;
  o.d12 = (Real(3) / 2 * o.d22 + o.c00 * o.c10 - Real(3) / 2 * (2 * beta + 1)) / w;
  o.lambda0 = -(o.d12 + o.c00 * o.c00) / 2;
  return o;
}

/// [n/m] approximant of sum c_k x^k by Gaussian elimination with partial
/// pivoting on the Toeplitz denominator system.
inline Real naive_pade(const std::vector<Real>& c, int n, int m, const Real& x) {
  auto coef = [&](int k) { return k < 0 ? Real(0) : c[static_cast<std::size_t>(k)]; };
  std::vector<std::vector<Real>> a(static_cast<std::size_t>(m),
                                   std::vector<Real>(static_cast<std::size_t>(m + 1)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = coef(n + 1 + i - (j + 1));
    a[i][m] = -coef(n + 1 + i);
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r) {
      if (mp::abs(a[r][col]) > mp::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    for (int r = col + 1; r < m; ++r) {
      const Real f = a[r][col] / a[col][col];
      for (int k = col; k <= m; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<Real> qd(static_cast<std::size_t>(m + 1));
  qd[0] = 1;
  for (int i = m - 1; i >= 0; --i) {
    Real s = a[i][m];
    for (int k = i + 1; k < m; ++k) s -= a[i][k] * qd[k + 1];
    qd[i + 1] = s / a[i][i];
  }
  Real num = 0, den = 0, xp = 1;
  for (int k = 0; k <= std::max(n, m); ++k) {
    if (k <= n) {
      Real pk = 0;
      for (int j = 0; j <= std::min(k, m); ++j) pk += qd[j] * coef(k - j);
      num += pk * xp;
    }
    if (k <= m) den += qd[k] * xp;
    xp *= x;
  }
  return num / den;
}

/// -Z^2 / (2 n^2).
inline double hydrogen_energy(double z, int n) { return -z * z / (2.0 * n * n); }

/// Fourth-order Richardson estimate from spacings h and h/2.
inline double richardson4(double coarse, double fine) { return fine + (fine - coarse) / 15.0; }

}  // namespace pslet_test
