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

#ifndef KUMMER_MEANFIELD_HPP
#define KUMMER_MEANFIELD_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kummer/model.hpp"
#include "kummer/numerics/polynomial.hpp"
#include "kummer/numerics/roots.hpp"

namespace kummer::meanfield {

namespace detail {

template <class T>
T ipow(T x, int e) {
  T r(1.0);
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

inline void check_domain(double p, const char* what) {
  if (!(p >= -0.5 && p <= 0.5)) throw std::domain_error(std::string(what) + ": p outside [-1/2, 1/2]");
}

// m^(2-n) n^(2-m)
inline double shape_constant(const ModelSpec& s) {
  return std::pow(double(s.m()), 2 - s.n()) * std::pow(double(s.n()), 2 - s.m());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical structure functions. p is the scaled sz; x = 1/2 + p, y = 1/2 - p.

template <class T>
T f_classical(const ModelSpec& s, T p) {
  const int m = s.m(), n = s.n();
  const T x = T(0.5) + p, y = T(0.5) - p;
  const double K = detail::shape_constant(s);
  return T(0.5 * K) * (T(double(n)) * detail::ipow(x, m) * detail::ipow(y, n - 1) -
                       T(double(m)) * detail::ipow(x, m - 1) * detail::ipow(y, n));
}

template <class T>
T g_classical(const ModelSpec& s, T p) {
  const T x = T(0.5) + p, y = T(0.5) - p;
  return T(-detail::shape_constant(s)) * detail::ipow(x, s.m()) * detail::ipow(y, s.n());
}

// Ascending power-series coefficients of f and g in p.
inline numerics::Polynomial f_polynomial(const ModelSpec& s) {
  const numerics::Polynomial x{0.5, 1.0}, y{0.5, -1.0};
  const double K = detail::shape_constant(s);
  return 0.5 * K * (double(s.n()) * (x.pow(s.m()) * y.pow(s.n() - 1)) -
                    double(s.m()) * (x.pow(s.m() - 1) * y.pow(s.n())));
}

inline numerics::Polynomial g_polynomial(const ModelSpec& s) {
  const numerics::Polynomial x{0.5, 1.0}, y{0.5, -1.0};
  return -detail::shape_constant(s) * (x.pow(s.m()) * y.pow(s.n()));
}

inline double f_prime(const ModelSpec& s, double p) {
  return f_polynomial(s).derivative()(p);
}

// 1/sqrt(m^(n-2) n^(m-2))
inline double r0(const ModelSpec& s) {
  return 1.0 / std::sqrt(std::pow(double(s.m()), s.n() - 2) * std::pow(double(s.n()), s.m() - 2));
}

inline double radius(const ModelSpec& s, double p) {
  detail::check_domain(p, "radius");
  return r0(s) * std::pow(0.5 + p, 0.5 * s.m()) * std::pow(0.5 - p, 0.5 * s.n());
}

// dr/dp; infinite at a pole with exponent 1/2.
inline double radius_derivative(const ModelSpec& s, double p) {
  detail::check_domain(p, "radius_derivative");
  const double a = 0.5 * s.m(), b = 0.5 * s.n();
  const double x = 0.5 + p, y = 0.5 - p;
  const double left = (x == 0.0 && a < 1.0) ? std::numeric_limits<double>::infinity()
                                             : a * std::pow(x, a - 1.0) * std::pow(y, b);
  const double right = (y == 0.0 && b < 1.0) ? std::numeric_limits<double>::infinity()
                                              : b * std::pow(x, a) * std::pow(y, b - 1.0);
  return r0(s) * (left - right);
}

// Sign of r''(p) on the open interval: same sign as
// (a y - b x)^2 - a y^2 - b x^2 with a = m/2, b = n/2.
inline double curvature_indicator(const ModelSpec& s, double p) {
  const double a = 0.5 * s.m(), b = 0.5 * s.n();
  const double x = 0.5 + p, y = 0.5 - p;
  const double t = a * y - b * x;
  return t * t - a * y * y - b * x * x;
}

struct Potentials {
  double minus;
  double plus;
};

// U(p) = eps p -/+ v r(p); the two curves bound H on the circle of fixed p.
inline Potentials potentials(const ModelSpec& s, double p) {
  const double r = radius(s, p);
  const double vr = std::abs(s.v()) * r;
  return {s.eps() * p - vr, s.eps() * p + vr};
}

inline double casimir(const ModelSpec& s, const std::array<double, 3>& st) {
  return st[0] * st[0] + st[1] * st[1] + g_classical(s, st[2]);
}

inline double energy(const ModelSpec& s, const std::array<double, 3>& st) {
  return s.eps() * st[2] + s.v() * st[0];
}

// ---------------------------------------------------------------------------
// Fixed points

enum class Stability { Center, Saddle, Degenerate };
enum class Location { Interior, NorthPole, SouthPole };

struct FixedPoint {
  double p = 0.0;
  double q = 0.0;          // 0 or pi; NaN at a pole
  double sx = 0.0;
  double energy = 0.0;
  Stability stability = Stability::Degenerate;
  double rate = 0.0;       // omega for a center, lambda for a saddle
  Location location = Location::Interior;

  bool at_pole() const { return location != Location::Interior; }
  int poincare_index() const {
    return stability == Stability::Center ? 1 : stability == Stability::Saddle ? -1 : 0;
  }
};

inline constexpr double kDegenerateTol = 1e-10;

inline void classify(const ModelSpec& s, FixedPoint& fp) {
  const double disc = s.eps() * s.eps() + s.v() * s.v() * f_prime(s, fp.p);
  if (std::abs(disc) <= kDegenerateTol) {
    fp.stability = Stability::Degenerate;
    fp.rate = 0.0;
  } else if (disc > 0) {
    fp.stability = Stability::Center;
    fp.rate = std::sqrt(disc);
  } else {
    fp.stability = Stability::Saddle;
    fp.rate = std::sqrt(-disc);
  }
}

// v^2 x^(m-2) y^(n-2) (2(n+m)p + n - m)^2 - 16 eps^2 m^(n-2) n^(m-2); its roots
// in the open interval are the interior fixed points for eps != 0.
inline double fixed_point_residual(const ModelSpec& s, double p) {
  const int m = s.m(), n = s.n();
  const double x = 0.5 + p, y = 0.5 - p;
  const double lin = 2.0 * (n + m) * p + n - m;
  return s.v() * s.v() * std::pow(x, m - 2) * std::pow(y, n - 2) * lin * lin -
         16.0 * s.eps() * s.eps() * std::pow(double(m), n - 2) * std::pow(double(n), m - 2);
}

inline std::vector<FixedPoint> find_fixed_points(const ModelSpec& s) {
  std::vector<FixedPoint> out;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (s.m() > 1) {
    FixedPoint fp{-0.5, nan, 0.0, -0.5 * s.eps()};
    fp.location = Location::SouthPole;
    classify(s, fp);
    out.push_back(fp);
  }
  if (s.eps() == 0.0) {
    const double p = double(s.m() - s.n()) / (2.0 * (s.m() + s.n()));
    const double r = radius(s, p);
    for (int sign : {-1, 1}) {
      FixedPoint fp{p, sign > 0 ? 0.0 : std::numbers::pi, sign * r, sign * s.v() * r};
      classify(s, fp);
      out.push_back(fp);
    }
  } else {
    static const std::vector<double> grid = numerics::chebyshev_grid(-0.5, 0.5, 2048);
    const double scale = 16.0 * s.eps() * s.eps() *
                         std::pow(double(s.m()), s.n() - 2) * std::pow(double(s.n()), s.m() - 2);
    const auto R = [&](double p) { return fixed_point_residual(s, p); };
    for (const auto& root : numerics::grid_roots(R, grid, 1e-10 * scale)) {
      const double p = root.x;
      const double f = f_classical(s, p);
      FixedPoint fp{p, 0.0, s.v() / s.eps() * f, s.v() * s.v() / s.eps() * f + s.eps() * p};
      fp.q = fp.sx >= 0 ? 0.0 : std::numbers::pi;
      classify(s, fp);
      if (root.tangent) fp.stability = Stability::Degenerate, fp.rate = 0.0;
      out.push_back(fp);
    }
  }
  if (s.n() > 1) {
    FixedPoint fp{0.5, nan, 0.0, 0.5 * s.eps()};
    fp.location = Location::NorthPole;
    classify(s, fp);
    out.push_back(fp);
  }
  return out;
}

inline int poincare_index_sum(const std::vector<FixedPoint>& fps) {
  int sum = 0;
  for (const auto& fp : fps) sum += fp.poincare_index();
  return sum;
}

// ---------------------------------------------------------------------------
// Bifurcations in eps at fixed v

enum class BifurcationKind { SaddleNode, Transcritical };

struct BifurcationEvent {
  double eps_critical;
  BifurcationKind kind;
  double p;        // inflection point or pole
  double energy;   // energy of the coalescing / exchanging fixed point
};

// Inflection points of r on the open interval.
inline std::vector<double> inflection_points(const ModelSpec& s) {
  const int count = 4096;
  std::vector<double> p(count + 1), second(count + 1);
  const double h = 1.0 / count;
  for (int k = 0; k <= count; ++k) p[k] = -0.5 + k * h;
  std::vector<double> r(count + 1);
  for (int k = 0; k <= count; ++k) r[k] = radius(s, p[k]);
  std::vector<double> out;
  const auto Q = [&](double x) { return curvature_indicator(s, x); };
  // second differences locate sign changes of r''; bisection on the exact
  // sign indicator polishes them
  double prev = 0.0;
  int prev_k = -1;
  for (int k = 1; k < count; ++k) {
    const double d2 = r[k - 1] - 2.0 * r[k] + r[k + 1];
    if (d2 == 0.0) continue;
    if (prev_k >= 0 && (d2 < 0) != (prev < 0)) {
      double a = p[prev_k], b = p[k];
      double qa = Q(a), qb = Q(b);
      if ((qa < 0) == (qb < 0)) {
        // widen by one cell each way when the discrete and exact signs disagree
        a = std::max(-0.5 + 1e-12, a - h);
        b = std::min(0.5 - 1e-12, b + h);
        qa = Q(a);
        qb = Q(b);
      }
      if ((qa < 0) != (qb < 0)) out.push_back(numerics::bisect(Q, a, b, qa));
    }
    prev = d2;
    prev_k = k;
  }
  return out;
}

inline std::vector<BifurcationEvent> classify_bifurcations(const ModelSpec& s) {
  if (s.v() == 0.0) throw std::invalid_argument("classify_bifurcations: v must be nonzero");
  std::vector<BifurcationEvent> ev;
  const double v = std::abs(s.v());
  for (double p : inflection_points(s)) {
    const double ec = v * std::abs(radius_derivative(s, p));
    for (double e : {ec, -ec}) {
      const double E = s.v() * s.v() / e * f_classical(s, p) + e * p;
      ev.push_back({e, BifurcationKind::SaddleNode, p, E});
    }
  }
  if (s.m() == 2) {
    const double ec = v * std::pow(2.0, 1.0 - 0.5 * s.n());
    for (double e : {ec, -ec}) ev.push_back({e, BifurcationKind::Transcritical, -0.5, -0.5 * e});
  }
  if (s.n() == 2) {
    const double ec = v * std::pow(2.0, 1.0 - 0.5 * s.m());
    for (double e : {ec, -ec}) ev.push_back({e, BifurcationKind::Transcritical, 0.5, 0.5 * e});
  }
  std::stable_sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.eps_critical) != std::abs(b.eps_critical))
      return std::abs(a.eps_critical) < std::abs(b.eps_critical);
    return a.eps_critical > b.eps_critical;
  });
  return ev;
}

// ---------------------------------------------------------------------------
// Energy range of the classical band.

struct EnergyRange {
  double min;
  double max;
  double p_min;
  double p_max;
};

inline EnergyRange classical_energy_range(const ModelSpec& s) {
  const int count = 4096;
  EnergyRange er{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), 0, 0};
  int kmin = 0, kmax = 0;
  for (int k = 0; k <= count; ++k) {
    const double p = -0.5 + double(k) / count;
    const auto u = potentials(s, p);
    if (u.minus < er.min) er.min = u.minus, kmin = k;
    if (u.plus > er.max) er.max = u.plus, kmax = k;
  }
  const auto refine = [&](int k, bool lower) {
    const double a = std::max(-0.5, -0.5 + double(k - 1) / count);
    const double b = std::min(0.5, -0.5 + double(k + 1) / count);
    const auto U = [&](double p) {
      const auto u = potentials(s, p);
      return lower ? u.minus : u.plus;
    };
    const double p = numerics::golden_extremum(U, a, b, lower);
    return std::pair{p, U(p)};
  };
  if (auto [p, u] = refine(kmin, true); u < er.min) er.min = u, er.p_min = p;
  else er.p_min = -0.5 + double(kmin) / count;
  if (auto [p, u] = refine(kmax, false); u > er.max) er.max = u, er.p_max = p;
  else er.p_max = -0.5 + double(kmax) / count;
  return er;
}

inline std::vector<double> saddle_energies(const ModelSpec& s) {
  std::vector<double> e;
  for (const auto& fp : find_fixed_points(s))
    if (fp.stability != Stability::Center) e.push_back(fp.energy);
  std::sort(e.begin(), e.end());
  return e;
}

// ---------------------------------------------------------------------------
// Trajectories

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<std::array<double, 3>> states;
  double drift_H = 0.0;
  double drift_C = 0.0;
};

inline std::array<double, 3> flow(const ModelSpec& s, const std::array<double, 3>& st) {
  return {-s.eps() * st[1], s.eps() * st[0] - s.v() * f_classical(s, st[2]), s.v() * st[1]};
}

inline constexpr double kSurfaceTol = 1e-10;

// Classical RK4. States are stored every `record_stride` steps (and at the end).
inline TrajectoryRecord integrate_trajectory(const ModelSpec& s,
                                             const std::array<double, 3>& initial,
                                             double t_end, double dt,
                                             int record_stride = 1) {
  if (std::abs(casimir(s, initial)) > kSurfaceTol)
    throw std::invalid_argument("integrate_trajectory: initial point is not on the Kummer surface");
  if (!(dt > 0) || !(t_end >= 0)) throw std::invalid_argument("integrate_trajectory: bad time grid");
  if (record_stride < 1) record_stride = 1;
  const long steps = long(std::llround(t_end / dt));
  TrajectoryRecord rec;
  auto st = initial;
  const double H0 = energy(s, st), C0 = casimir(s, st);
  rec.times.push_back(0.0);
  rec.states.push_back(st);
  const auto axpy = [](const std::array<double, 3>& a, double h, const std::array<double, 3>& k) {
    return std::array<double, 3>{a[0] + h * k[0], a[1] + h * k[1], a[2] + h * k[2]};
  };
  for (long i = 1; i <= steps; ++i) {
    const auto k1 = flow(s, st);
    const auto k2 = flow(s, axpy(st, 0.5 * dt, k1));
    const auto k3 = flow(s, axpy(st, 0.5 * dt, k2));
    const auto k4 = flow(s, axpy(st, dt, k3));
    for (int c = 0; c < 3; ++c) st[c] += dt / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    rec.drift_H = std::max(rec.drift_H, std::abs(energy(s, st) - H0));
    rec.drift_C = std::max(rec.drift_C, std::abs(casimir(s, st) - C0));
    if (i % record_stride == 0 || i == steps) {
      rec.times.push_back(double(i) * dt);
      rec.states.push_back(st);
    }
  }
  return rec;
}

// Point on the surface at height p and azimuth theta.
inline std::array<double, 3> surface_point(const ModelSpec& s, double p, double theta) {
  const double r = radius(s, p);
  return {r * std::cos(theta), r * std::sin(theta), p};
}

// Vertices of the surface of revolution: p runs over n_p points from -1/2 to
// 1/2 (outer index), theta over n_theta points in [0, 2 pi) (inner index).
inline std::vector<std::array<double, 3>> kummer_mesh(const ModelSpec& s, int n_theta, int n_p) {
  if (n_theta < 2 || n_p < 2) throw std::invalid_argument("kummer_mesh: resolutions must be >= 2");
  std::vector<std::array<double, 3>> mesh;
  mesh.reserve(std::size_t(n_theta) * n_p);
  for (int i = 0; i < n_p; ++i) {
    const double p = -0.5 + double(i) / (n_p - 1);
    for (int j = 0; j < n_theta; ++j)
      mesh.push_back(surface_point(s, p, 2.0 * std::numbers::pi * j / n_theta));
  }
  return mesh;
}

}  // namespace kummer::meanfield

#endif  // KUMMER_MEANFIELD_HPP
