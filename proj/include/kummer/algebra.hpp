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

#ifndef KUMMER_ALGEBRA_HPP
#define KUMMER_ALGEBRA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/rational.hpp>

#include "kummer/model.hpp"
#include "kummer/numerics/polynomial.hpp"

namespace kummer::algebra {

// Structure polynomials of the deformed su(2) algebra, evaluated at an
// unscaled sz eigenvalue z (mu - N/(2mn)). Products are accumulated factor
// by factor and never expanded.

inline double eval_P(const ModelSpec& s, double z) {
  const double h = s.half_width();
  double p = 1.0;
  for (int mu = 1; mu <= s.m(); ++mu) p *= h + z + double(mu) / s.m();
  for (int nu = 1; nu <= s.n(); ++nu) p *= h - z - 1.0 + double(nu) / s.n();
  return p;
}

namespace detail {
// n^n m^m / (2 N^(m+n-2))
inline double structure_prefactor(const ModelSpec& s) {
  const int m = s.m(), n = s.n();
  return std::pow(double(n), n) * std::pow(double(m), m) /
         (2.0 * std::pow(double(s.N()), m + n - 2));
}
}  // namespace detail

inline double eval_F(const ModelSpec& s, double z) {
  return -detail::structure_prefactor(s) * (eval_P(s, z) - eval_P(s, z - 1.0));
}

inline double eval_G(const ModelSpec& s, double z) {
  return -detail::structure_prefactor(s) * (eval_P(s, z) + eval_P(s, z - 1.0));
}

// ---------------------------------------------------------------------------
// phi(J0) with F(J0) = (phi(J0) - phi(J0 - 1))/2 for F = sum_j alpha_j J0^j.

using Rational = boost::rational<std::int64_t>;

inline constexpr int kMaxAlphaDegree = 8;

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// B_0..B_count with B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(int count) {
  std::vector<Rational> b(count + 1);
  b[0] = 1;
  for (int n = 1; n <= count; ++n) {
    Rational acc = 0;
    for (int k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * b[k];
    b[n] = -acc / Rational(n + 1);
  }
  return b;
}

// Ascending coefficients of B_n(x) = sum_k C(n,k) B_k x^(n-k).
inline std::vector<Rational> bernoulli_polynomial(int n) {
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[n - k] = Rational(binomial(n, k)) * b[k];
  return c;
}

struct PhiPolynomial {
  std::vector<double> coeffs;  // ascending; coeffs[0] == 0

  double operator()(double x) const {
    return numerics::Polynomial(coeffs)(x);
  }
};

// phi(x) = 2 sum_j (-1)^(j+1) alpha_j/(j+1) (B_{j+1}(-x) - B_{j+1}(0))
inline PhiPolynomial phi_from_alpha(const std::vector<double>& alpha) {
  if (alpha.empty()) throw std::invalid_argument("alpha must not be empty");
  const int k = int(alpha.size()) - 1;
  if (k > kMaxAlphaDegree) throw std::invalid_argument("alpha degree above supported bound");
  std::vector<double> phi(k + 2, 0.0);
  for (int j = 0; j <= k; ++j) {
    const auto bp = bernoulli_polynomial(j + 1);
    const Rational pre = Rational((j % 2 == 0) ? -2 : 2, j + 1);
    for (int i = 1; i <= j + 1; ++i) {
      // B(-x) flips odd powers
      const Rational c = pre * bp[i] * Rational(i % 2 == 0 ? 1 : -1);
      phi[i] += alpha[j] * boost::rational_cast<double>(c);
    }
  }
  return {phi};
}

inline double verify_F_phi(const std::vector<double>& alpha,
                           const std::vector<double>& samples) {
  const PhiPolynomial phi = phi_from_alpha(alpha);
  const numerics::Polynomial F(alpha);
  double worst = 0.0;
  for (double z : samples)
    worst = std::max(worst, std::abs(F(z) - 0.5 * (phi(z) - phi(z - 1.0))));
  return worst;
}

// [a^m, a+^m] restricted to the number state |j>:
// prod_{mu=1..m}(j+mu) - prod_{mu=1..m}(j+1-mu).
inline std::int64_t oscillator_commutator_poly(int m, std::int64_t j) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (j < 0) throw std::invalid_argument("occupancy must be >= 0");
  std::int64_t up = 1, down = 1;
  for (int mu = 1; mu <= m; ++mu) {
    up *= j + mu;
    down *= j + 1 - mu;
  }
  return up - down;
}

}  // namespace kummer::algebra

#endif  // KUMMER_ALGEBRA_HPP
