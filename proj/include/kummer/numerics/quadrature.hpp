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

#ifndef KUMMER_NUMERICS_QUADRATURE_HPP
#define KUMMER_NUMERICS_QUADRATURE_HPP

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

namespace kummer::numerics {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

namespace detail {

inline GaussRule make_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace detail

// Cached n-point Gauss-Legendre rule.
inline const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::make_gauss_legendre(n)).first;
  return it->second;
}

template <class F>
double integrate_gauss_legendre(const F& f, double a, double b, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return s * half;
}

// Gauss-Legendre after p = mid + half*sin(phi): the Jacobian cos(phi) vanishes
// at both ends, which removes the sqrt-type endpoint behavior of integrands
// such as arccos near a turning point.
template <class F>
double integrate_sine_mapped(const F& f, double a, double b, int n) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const double h = 0.5 * std::numbers::pi;
  return integrate_gauss_legendre(
      [&](double phi) { return f(mid + half * std::sin(phi)) * half * std::cos(phi); },
      -h, h, n);
}

// Gauss-Chebyshev (Gauss-Mehler) rule:
//   int_a^b g(p) / sqrt((p-a)(b-p)) dp  ~  (pi/n) sum_k g(p_k).
template <class F>
double integrate_gauss_chebyshev(const F& g, double a, double b, int n) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int k = 0; k < n; ++k)
    s += g(mid + half * std::cos(std::numbers::pi * (k + 0.5) / n));
  return std::numbers::pi * s / n;
}

}  // namespace kummer::numerics

#endif  // KUMMER_NUMERICS_QUADRATURE_HPP
