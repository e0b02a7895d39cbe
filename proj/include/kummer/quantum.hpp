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

#ifndef KUMMER_QUANTUM_HPP
#define KUMMER_QUANTUM_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kummer/algebra.hpp"
#include "kummer/model.hpp"
#include "kummer/numerics/tridiagonal.hpp"

namespace kummer::quantum {

// beta_mu = (1/N^(m+n-2)) prod_{k<m}(mu m - k) prod_{k<n}(N/m - mu n + n - k).
// Each factor is divided by N^((m+n-2)/(m+n)) on the way so that nothing
// overflows for large N. The chain ends beta_0 and beta_{mu_max+1} are 0.
inline double beta(const ModelSpec& s, std::int64_t mu) {
  if (mu < 0 || mu > s.mu_max() + 1) throw std::domain_error("beta: mu out of range");
  if (mu == 0 || mu == s.mu_max() + 1) return 0.0;
  const int m = s.m(), n = s.n();
  const double scale = std::pow(double(s.N()), double(m + n - 2) / double(m + n));
  const std::int64_t Nm = s.N() / m;
  double b = 1.0;
  for (int k = 0; k < m; ++k) b *= double(mu * m - k) / scale;
  for (int k = 0; k < n; ++k) b *= double(Nm - mu * n + n - k) / scale;
  return b;
}

enum class OperatorKind { Sx, Sy, Sz, H };

// Tridiagonal data for one operator on the (mu_max+1)-dimensional subspace.
// For Sy the off-diagonal holds magnitudes; the matrix itself is
// Sy = -i*Y with Y real antisymmetric, Y(mu+1,mu) = +offdiag[mu].
struct TridiagonalOperator {
  OperatorKind kind;
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t dim() const { return diag.size(); }
};

struct Operators {
  TridiagonalOperator Sx, Sy, Sz, H;
};

inline std::vector<double> sz_eigenvalues(const ModelSpec& s) {
  std::vector<double> z(s.dim());
  for (std::int64_t mu = 0; mu < s.dim(); ++mu) z[mu] = double(mu) - s.half_width();
  return z;
}

inline Operators build_operators(const ModelSpec& s) {
  const std::size_t d = s.dim();
  std::vector<double> ladder(d - 1);
  for (std::size_t mu = 0; mu + 1 < d; ++mu)
    ladder[mu] = 0.5 * std::sqrt(beta(s, std::int64_t(mu) + 1));
  Operators ops{
      {OperatorKind::Sx, std::vector<double>(d, 0.0), ladder},
      {OperatorKind::Sy, std::vector<double>(d, 0.0), ladder},
      {OperatorKind::Sz, sz_eigenvalues(s), std::vector<double>(d - 1, 0.0)},
      {OperatorKind::H, {}, {}}};
  ops.H.diag = ops.Sz.diag;
  for (double& x : ops.H.diag) x *= s.eps();
  ops.H.offdiag = ladder;
  for (double& x : ops.H.offdiag) x *= s.v();
  return ops;
}

struct SpectrumResult {
  ModelSpec spec;
  std::vector<double> scaled_eigenvalues;  // eta * E
  std::vector<double> raw_eigenvalues;
};

inline SpectrumResult eigen_spectrum(const ModelSpec& s) {
  const Operators ops = build_operators(s);
  SpectrumResult r{s, {}, numerics::tridiagonal_eigenvalues(ops.H.diag, ops.H.offdiag)};
  r.scaled_eigenvalues = r.raw_eigenvalues;
  for (double& x : r.scaled_eigenvalues) x *= s.eta();
  return r;
}

// ||H x - lambda x|| / ||H||_max-row for the inverse-iteration eigenvector of
// each requested eigenvalue index.
inline double eigen_residual(const ModelSpec& s, const SpectrumResult& r,
                             const std::vector<std::size_t>& indices) {
  const Operators ops = build_operators(s);
  const auto& d = ops.H.diag;
  const auto& e = ops.H.offdiag;
  const std::size_t n = d.size();
  double hnorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(d[i]);
    if (i > 0) row += std::abs(e[i - 1]);
    if (i + 1 < n) row += std::abs(e[i]);
    hnorm = std::max(hnorm, row);
  }
  double worst = 0.0;
  for (std::size_t idx : indices) {
    const double lam = r.raw_eigenvalues.at(idx);
    const auto x = numerics::tridiagonal_eigenvector(d, e, lam);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double y = d[i] * x[i] - lam * x[i];
      if (i > 0) y += e[i - 1] * x[i - 1];
      if (i + 1 < n) y += e[i] * x[i + 1];
      res += y * y;
    }
    worst = std::max(worst, std::sqrt(res) / std::max(hnorm, 1e-300));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Algebra identities checked in real arithmetic with Y = i Sy:
//   [Sz,Sx] = Y,  [Y,Sz] = -Sx,  [Sx,Y] = -F(Sz),  Sx^2 - Y^2 + G(Sz) = c.

namespace detail {

// Band matrix with half-bandwidth 2, band[k][i] = A(i, i + k - 2).
struct Penta {
  std::size_t n;
  std::array<std::vector<double>, 5> band;

  explicit Penta(std::size_t dim) : n(dim) {
    for (auto& b : band) b.assign(dim, 0.0);
  }
  double& at(std::size_t i, std::size_t j) { return band[j + 2 - i][i]; }
};

struct Tri {
  std::vector<double> lo, d, up;  // lo[i] = A(i+1,i), up[i] = A(i,i+1)

  double get(std::size_t i, std::size_t j) const {
    if (i == j) return d[i];
    if (i == j + 1) return lo[j];
    if (j == i + 1) return up[i];
    return 0.0;
  }
};

inline Penta multiply(const Tri& a, const Tri& b) {
  const std::size_t n = a.d.size();
  Penta c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = (i >= 2 ? i - 2 : 0); k <= std::min(n - 1, i + 2); ++k) {
      double s = 0.0;
      for (std::size_t j = (i >= 1 ? i - 1 : 0); j <= std::min(n - 1, i + 1); ++j)
        s += a.get(i, j) * b.get(j, k);
      c.at(i, k) = s;
    }
  return c;
}

}  // namespace detail

struct IdentityResiduals {
  double comm_z_x = 0.0;   // ||[Sz,Sx] - i Sy||
  double comm_y_z = 0.0;   // ||[Sy,Sz] - i Sx||
  double comm_x_y = 0.0;   // ||[Sx,Sy] - i F(Sz)||
  double casimir_spread = 0.0;  // off-scalar part of Sx^2+Sy^2+G(Sz)
  double casimir_value = 0.0;
  double scale = 1.0;      // max |entry| of Sx^2, residuals are divided by it
};

inline IdentityResiduals identity_residuals(const ModelSpec& s) {
  using detail::Tri;
  const Operators ops = build_operators(s);
  const std::size_t n = s.dim();
  const auto& x = ops.Sx.offdiag;
  std::vector<double> neg(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
  const std::vector<double> zeros(n, 0.0);
  const Tri X{x, zeros, x};
  const Tri Y{x, zeros, neg};
  const Tri Z{std::vector<double>(n - 1, 0.0), ops.Sz.diag, std::vector<double>(n - 1, 0.0)};

  const auto xx = detail::multiply(X, X);
  const auto yy = detail::multiply(Y, Y);
  const auto xy = detail::multiply(X, Y);
  const auto yx = detail::multiply(Y, X);
  const auto zx = detail::multiply(Z, X);
  const auto xz = detail::multiply(X, Z);
  const auto yz = detail::multiply(Y, Z);
  const auto zy = detail::multiply(Z, Y);

  IdentityResiduals r;
  double scale = 0.0;
  for (const auto& b : xx.band)
    for (double v : b) scale = std::max(scale, std::abs(v));
  r.scale = std::max(scale, 1e-300);

  std::vector<double> casimir_diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = ops.Sz.diag[i];
    casimir_diag[i] = xx.band[2][i] - yy.band[2][i] + algebra::eval_G(s, z);
  }
  double mean = 0.0;
  for (double c : casimir_diag) mean += c;
  mean /= double(n);
  r.casimir_value = mean;

  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < 5; ++k) {
      const long j = long(i) + k - 2;
      if (j < 0 || j >= long(n)) continue;
      const std::size_t ju = std::size_t(j);
      const double yij = Y.get(i, ju);
      const double xij = X.get(i, ju);
      const double fz = (i == ju) ? algebra::eval_F(s, ops.Sz.diag[i]) : 0.0;
      r.comm_z_x = std::max(r.comm_z_x, std::abs(zx.band[k][i] - xz.band[k][i] - yij));
      r.comm_y_z = std::max(r.comm_y_z, std::abs(yz.band[k][i] - zy.band[k][i] + xij));
      r.comm_x_y = std::max(r.comm_x_y, std::abs(xy.band[k][i] - yx.band[k][i] + fz));
      const double cas = (i == ju) ? casimir_diag[i] - mean
                                   : xx.band[k][i] - yy.band[k][i];
      r.casimir_spread = std::max(r.casimir_spread, std::abs(cas));
    }
  }
  r.comm_z_x /= r.scale;
  r.comm_y_z /= r.scale;
  r.comm_x_y /= r.scale;
  r.casimir_spread /= r.scale;
  return r;
}

// ---------------------------------------------------------------------------

struct DosHistogram {
  std::vector<double> bin_edges;  // bins + 1
  std::vector<double> density;    // counts / (total * width)

  std::size_t bins() const { return density.size(); }
  double center(std::size_t k) const { return 0.5 * (bin_edges[k] + bin_edges[k + 1]); }
  double width() const { return bin_edges[1] - bin_edges[0]; }
};

// Probability-density histogram of `values` on [lo, hi]; values on the upper
// edge go to the last bin, values outside are dropped from the counts but
// still counted in the total.
inline DosHistogram dos_histogram(const std::vector<double>& values, int bins,
                                  double lo, double hi) {
  if (values.empty()) throw std::invalid_argument("dos_histogram: empty spectrum");
  if (bins < 2) throw std::invalid_argument("dos_histogram: bins must be >= 2");
  if (!(hi > lo)) throw std::invalid_argument("dos_histogram: empty range");
  DosHistogram h;
  h.bin_edges.resize(bins + 1);
  for (int k = 0; k <= bins; ++k) h.bin_edges[k] = lo + (hi - lo) * k / bins;
  std::vector<double> counts(bins, 0.0);
  const double w = (hi - lo) / bins;
  for (double x : values) {
    if (x < lo || x > hi) continue;
    int k = int((x - lo) / w);
    k = std::clamp(k, 0, bins - 1);
    counts[k] += 1.0;
  }
  h.density.resize(bins);
  for (int k = 0; k < bins; ++k) h.density[k] = counts[k] / (double(values.size()) * w);
  return h;
}

inline DosHistogram dos_histogram(const SpectrumResult& r, int bins) {
  const auto& e = r.scaled_eigenvalues;
  if (e.empty()) throw std::invalid_argument("dos_histogram: empty spectrum");
  const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
  return dos_histogram(e, bins, *lo, *hi);
}

}  // namespace kummer::quantum

#endif  // KUMMER_QUANTUM_HPP
