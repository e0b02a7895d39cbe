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

#ifndef KUMMER_NUMERICS_POLYNOMIAL_HPP
#define KUMMER_NUMERICS_POLYNOMIAL_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace kummer::numerics {

// Dense univariate polynomial, coefficients in ascending powers.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> c) : c_(c) {}
  explicit Polynomial(std::vector<double> c) : c_(std::move(c)) {}

  static Polynomial constant(double a) { return Polynomial({a}); }
  // a + b*x
  static Polynomial linear(double a, double b) { return Polynomial({a, b}); }

  const std::vector<double>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

  int degree() const {
    for (std::size_t k = c_.size(); k-- > 0;)
      if (c_[k] != 0.0) return int(k);
    return -1;
  }

  template <class T>
  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + T(c_[k]);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
    return Polynomial(std::move(d));
  }

  // Divides by (x - root) and drops the remainder.
  Polynomial deflate(double root) const {
    if (c_.size() <= 1) return {};
    std::vector<double> q(c_.size() - 1);
    double carry = 0.0;
    for (std::size_t k = c_.size(); k-- > 1;) {
      carry = c_[k] + carry * root;
      q[k - 1] = carry;
    }
    return Polynomial(std::move(q));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.size(), b.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.size(), b.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(double s, Polynomial a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }

  Polynomial pow(int e) const {
    Polynomial r = constant(1.0);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
  }

 private:
  std::vector<double> c_;
};

}  // namespace kummer::numerics

#endif  // KUMMER_NUMERICS_POLYNOMIAL_HPP
