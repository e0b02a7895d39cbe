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

#ifndef KUMMER_MODEL_HPP
#define KUMMER_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kummer {

// Parameters of the n:m conversion Hamiltonian H = eps*sz + v*sx restricted to
// the subspace with particle number N. Every computation in the library is a
// function of one of these.
class ModelSpec {
 public:
  ModelSpec(int m, int n, std::int64_t N, double eps = 0.0, double v = 1.0)
      : m_(m), n_(n), N_(N), eps_(eps), v_(v) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const std::int64_t mn = std::int64_t(m) * n;
    if (N < mn) throw std::invalid_argument("N must be >= m*n");
    if (N % mn != 0) throw std::invalid_argument("N must be a multiple of m*n");
  }

  int m() const { return m_; }
  int n() const { return n_; }
  std::int64_t N() const { return N_; }
  double eps() const { return eps_; }
  double v() const { return v_; }

  // N/(mn): the largest Fock index mu.
  std::int64_t mu_max() const { return N_ / (std::int64_t(m_) * n_); }
  std::int64_t dim() const { return mu_max() + 1; }
  // Small parameter of the mean-field limit.
  double eta() const { return 1.0 / double(dim()); }
  // N/(2mn); ŝz eigenvalues are mu - half_width().
  double half_width() const { return 0.5 * double(mu_max()); }

  ModelSpec with_eps(double eps) const { return {m_, n_, N_, eps, v_}; }
  ModelSpec with_N(std::int64_t N) const { return {m_, n_, N, eps_, v_}; }

  std::string label() const {
    return "(m,n)=(" + std::to_string(m_) + "," + std::to_string(n_) +
           ") N=" + std::to_string(N_);
  }

 private:
  int m_;
  int n_;
  std::int64_t N_;
  double eps_;
  double v_;
};

// Smallest valid N giving the requested matrix dimension.
inline std::int64_t particles_for_dim(int m, int n, std::int64_t dim) {
  return (dim - 1) * std::int64_t(m) * n;
}

}  // namespace kummer

#endif  // KUMMER_MODEL_HPP
