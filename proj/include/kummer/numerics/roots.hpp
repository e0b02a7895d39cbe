// Copyright 2026 The Kummer Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KUMMER_NUMERICS_ROOTS_HPP
#define KUMMER_NUMERICS_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace kummer::numerics {

// Derivative of a real-analytic f (templated on its scalar) by the complex
// step; exact to rounding, no subtractive cancellation.
template <class F>
double complex_step_derivative(const F& f, double x, double h = 1e-30) {
  return std::imag(f(std::complex<double>(x, h))) / h;
}

// Points clustered towards both ends of [a, b], endpoints excluded.
inline std::vector<double> chebyshev_grid(double a, double b, int count) {
  std::vector<double> x(count);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int k = 0; k < count; ++k)
    x[k] = mid - half * std::cos(std::numbers::pi * (k + 0.5) / count);
  return x;
}

// Plain bisection on a sign change. Stops when the bracket stops shrinking.
template <class F>
double bisect(const F& f, double a, double b, double fa, double xtol = 0.0) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b || (b - a) <= xtol) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Newton iteration safeguarded by the bracket [a, b]: a Newton step that leaves
// the bracket, or does not halve it, is replaced by bisection.
template <class F, class DF>
double newton_bisect(const F& f, const DF& df, double a, double b,
                     double xtol = 1e-15) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0) == (fb < 0)) throw std::domain_error("newton_bisect: no sign change");
  if (fa > 0) std::swap(a, b);  // f(a) < 0 < f(b)
  double x = 0.5 * (a + b);
  double dx_old = std::abs(b - a), dx = dx_old;
  double fx = f(x), dfx = df(x);
  for (int it = 0; it < 200; ++it) {
    const bool out = ((x - b) * dfx - fx) * ((x - a) * dfx - fx) > 0.0;
    if (out || std::abs(2.0 * fx) > std::abs(dx_old * dfx)) {
      dx_old = dx;
      dx = 0.5 * (b - a);
      x = a + dx;
    } else {
      dx_old = dx;
      dx = fx / dfx;
      x -= dx;
    }
    if (std::abs(dx) <= xtol * std::max(1.0, std::abs(x))) return x;
    fx = f(x);
    if (fx == 0.0) return x;
    dfx = df(x);
    if (fx < 0) a = x; else b = x;
  }
  return x;
}

// Golden-section search for the extremum of f on [a, b]; `minimize` picks
// min or max.
template <class F>
double golden_extremum(const F& f, double a, double b, bool minimize,
                       double xtol = 1e-15) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  const double s = minimize ? 1.0 : -1.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = s * f(c), fd = s * f(d);
  for (int it = 0; it < 200 && (b - a) > xtol * std::max(1.0, std::abs(a)); ++it) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - g * (b - a); fc = s * f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + g * (b - a); fd = s * f(d);
    }
  }
  return 0.5 * (a + b);
}

struct GridRoot {
  double x;
  bool tangent;  // touches zero without crossing (double root)
};

// Roots of f sampled on an increasing grid: sign changes are refined by
// bisection; local extrema of |f| that do not cross are polished by golden
// section and either split into two crossings or reported as a tangency when
// |f| <= tangent_tol there (checked first).
template <class F>
std::vector<GridRoot> grid_roots(const F& f, const std::vector<double>& grid,
                                 double tangent_tol) {
  std::vector<GridRoot> out;
  const std::size_t n = grid.size();
  std::vector<double> fv(n);
  for (std::size_t k = 0; k < n; ++k) fv[k] = f(grid[k]);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (fv[k] == 0.0) {
      out.push_back({grid[k], false});
      continue;
    }
    if ((fv[k] < 0) != (fv[k + 1] < 0) && fv[k + 1] != 0.0)
      out.push_back({bisect(f, grid[k], grid[k + 1], fv[k]), false});
  }
  if (n && fv[n - 1] == 0.0) out.push_back({grid[n - 1], false});
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const bool same = (fv[k - 1] < 0) == (fv[k] < 0) && (fv[k] < 0) == (fv[k + 1] < 0);
    if (!same || fv[k] == 0.0) continue;
    if (!(std::abs(fv[k]) <= std::abs(fv[k - 1]) && std::abs(fv[k]) <= std::abs(fv[k + 1])))
      continue;
    const bool minimize = fv[k] > 0;
    const double xe = golden_extremum(f, grid[k - 1], grid[k + 1], minimize);
    const double fe = f(xe);
    // a dip below the tolerance counts as one double root even if rounding
    // carries it across zero
    if (std::abs(fe) <= tangent_tol) {
      out.push_back({xe, true});
    } else if ((fe < 0) != (fv[k] < 0)) {
      out.push_back({bisect(f, grid[k - 1], xe, fv[k - 1]), false});
      out.push_back({bisect(f, xe, grid[k + 1], fe), false});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const GridRoot& a, const GridRoot& b) { return a.x < b.x; });
  // the two passes can both report a root sitting in a shallow dip
  std::vector<GridRoot> merged;
  for (const auto& r : out) {
    // golden section only resolves a flat tangency to ~sqrt(machine eps)
    const double tol = (r.tangent || (!merged.empty() && merged.back().tangent)) ? 1e-6 : 1e-12;
    if (!merged.empty() && std::abs(r.x - merged.back().x) <= tol) {
      merged.back().tangent = merged.back().tangent || r.tangent;
      continue;
    }
    merged.push_back(r);
  }
  return merged;
}

}  // namespace kummer::numerics

#endif  // KUMMER_NUMERICS_ROOTS_HPP
