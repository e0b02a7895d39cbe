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

#ifndef KUMMER_NUMERICS_TRIDIAGONAL_HPP
#define KUMMER_NUMERICS_TRIDIAGONAL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace kummer::numerics {

// Eigenvalues of the real symmetric tridiagonal matrix with diagonal `d` and
// off-diagonal `e` (e[i] couples i and i+1). Implicit-shift QL with Wilkinson
// shifts, no eigenvectors. Result is sorted ascending.
inline std::vector<double> tridiagonal_eigenvalues(std::vector<double> d,
                                                   std::vector<double> e) {
  const int n = int(d.size());
  if (n == 0) return d;
  if (int(e.size()) != n - 1) throw std::invalid_argument("off-diagonal length must be dim-1");
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-17 * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw std::runtime_error("tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Eigenvector for an (already accurate) eigenvalue by inverse iteration, using
// Gaussian elimination with partial pivoting on the shifted tridiagonal.
inline std::vector<double> tridiagonal_eigenvector(const std::vector<double>& d,
                                                   const std::vector<double>& e,
                                                   double lambda, int sweeps = 3) {
  const int n = int(d.size());
  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(d[i]));
  for (double x : e) scale = std::max(scale, std::abs(x));
  const double tiny = std::max(scale, 1.0) * 1e-15;

  // Factor T - lambda*I = P L U; U has two superdiagonals.
  std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0), mult(n, 0.0);
  std::vector<char> swapped(n, 0);
  {
    double a = d[0] - lambda;
    double b = n > 1 ? e[0] : 0.0;
    double c = 0.0;
    for (int i = 0; i < n - 1; ++i) {
      const double lo = e[i];
      const double nd = d[i + 1] - lambda;
      const double ne = i + 1 < n - 1 ? e[i + 1] : 0.0;
      if (std::abs(lo) > std::abs(a)) {
        swapped[i] = 1;
        u0[i] = lo; u1[i] = nd; u2[i] = ne;
        const double l = a / lo;
        mult[i] = l;
        a = b - l * nd;
        b = c - l * ne;
      } else {
        if (a == 0.0) a = tiny;
        u0[i] = a; u1[i] = b; u2[i] = c;
        const double l = lo / a;
        mult[i] = l;
        a = nd - l * b;
        b = ne - l * c;
      }
      c = 0.0;
    }
    u0[n - 1] = a == 0.0 ? tiny : a;
  }

  std::vector<double> x(n, 1.0 / std::sqrt(double(n)));
  for (int s = 0; s < sweeps; ++s) {
    for (int i = 0; i < n - 1; ++i) {
      if (swapped[i]) std::swap(x[i], x[i + 1]);
      x[i + 1] -= mult[i] * x[i];
    }
    for (int i = n - 1; i >= 0; --i) {
      double v = x[i];
      if (i + 1 < n) v -= u1[i] * x[i + 1];
      if (i + 2 < n) v -= u2[i] * x[i + 2];
      x[i] = v / (u0[i] == 0.0 ? tiny : u0[i]);
    }
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
  return x;
}

}  // namespace kummer::numerics

#endif  // KUMMER_NUMERICS_TRIDIAGONAL_HPP
