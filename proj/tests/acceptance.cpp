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

// Acceptance run: one PASS/FAIL line per criterion, with diagnostics indented
// underneath. `acceptance K` runs criterion K only.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "kummer/kummer.hpp"
#include "kummer/numerics/roots.hpp"

namespace {

using namespace kummer;
using meanfield::Stability;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
};

template <class... A>
std::string format(const char* f, A... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

Outcome su2_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  const ModelSpec s(1, 1, 40, 0.7, 1.3);
  const auto r = quantum::eigen_spectrum(s);
  const double w = std::hypot(0.7, 1.3);
  double err = 0.0;
  for (int mu = 0; mu <= 40; ++mu) err = std::max(err, std::abs(r.raw_eigenvalues[mu] - w * (mu - 20)));
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = err <= 1e-10 && t < 1.0 && r.raw_eigenvalues.size() == 41;
  o.summary = format("max |E_mu - sqrt(eps^2+v^2)(mu-20)| = %.2e (tol 1e-10), %.3f s (< 1 s)", err, t);
  return o;
}

Outcome algebra_identities() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  double worst = 0.0;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 3}}) {
    const ModelSpec s(m, n, particles_for_dim(m, n, 201));
    const auto r = quantum::identity_residuals(s);
    const double w = std::max({r.comm_z_x, r.comm_y_z, r.comm_x_y, r.casimir_spread});
    worst = std::max(worst, w);
    o.details.push_back(format("(%d,%d) dim 201: [Sz,Sx] %.1e  [Sy,Sz] %.1e  [Sx,Sy] %.1e  Casimir spread %.1e  c = %.3g",
                               m, n, r.comm_z_x, r.comm_y_z, r.comm_x_y, r.casimir_spread, r.casimir_value));
  }
  const double t = seconds_since(t0);
  o.pass = worst <= 1e-9 && t < 10.0;
  o.summary = format("max relative residual %.2e over 8 shapes (tol 1e-9), %.2f s (< 10 s)", worst, t);
  return o;
}

Outcome classical_identities() {
  Outcome o;
  std::mt19937_64 rng(20260417);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  double worst_dg = 0.0, worst_r = 0.0;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 3}}) {
    const ModelSpec s(m, n, m * n);
    for (int k = 0; k < 1000; ++k) {
      const double p = u(rng);
      const double dg = numerics::complex_step_derivative([&](auto x) { return meanfield::g_classical(s, x); }, p);
      worst_dg = std::max(worst_dg, std::abs(dg - 2.0 * meanfield::f_classical(s, p)));
      const double r = meanfield::radius(s, p);
      worst_r = std::max(worst_r, std::abs(meanfield::g_classical(s, p) + r * r));
    }
  }
  const auto f = meanfield::f_polynomial(ModelSpec(2, 1, 2));
  const double want[] = {-0.25, 1.0, 3.0};
  double coef = 0.0;
  for (std::size_t k = 0; k < std::max<std::size_t>(3, f.size()); ++k)
    coef = std::max(coef, std::abs(f[k] - (k < 3 ? want[k] : 0.0)));
  o.pass = worst_dg < 1e-10 && worst_r < 1e-10 && coef < 1e-10;
  o.summary = format("|dg/dp - 2f| %.1e, |g + r^2| %.1e at 9x1000 points; (2,1) f coefficients off by %.1e (tol 1e-10)",
                     worst_dg, worst_r, coef);
  return o;
}

Outcome fixed_points_closed_form() {
  Outcome o;
  const auto nearest = [](const std::vector<meanfield::FixedPoint>& fps, double p) {
    const meanfield::FixedPoint* best = nullptr;
    for (const auto& fp : fps)
      if (!best || std::abs(fp.p - p) < std::abs(best->p - p)) best = &fp;
    return best;
  };
  double e22 = 0.0, e33 = 0.0, e21 = 0.0, ecrit = 0.0;
  {
    const auto fps = meanfield::find_fixed_points(ModelSpec(2, 2, 4, 0.6, 1.0));
    for (double sgn : {-1.0, 1.0}) {
      const auto* fp = nearest(fps, 0.3 * sgn);
      e22 = std::max({e22, std::abs(fp->p - 0.3 * sgn), std::abs(fp->energy - 0.34 * sgn)});
    }
  }
  {
    const auto fps = meanfield::find_fixed_points(ModelSpec(3, 3, 9, 0.1, 1.0));
    for (double sgn : {-1.0, 1.0})
      for (double in : {-1.0, 1.0}) {
        const double p = sgn * std::sqrt((1.0 + in * std::sqrt(1.0 - 0.64)) / 8.0);
        e33 = std::max(e33, std::abs(nearest(fps, p)->p - p));
      }
  }
  {
    const auto fps = meanfield::find_fixed_points(ModelSpec(2, 1, 2, 0.5, 1.0));
    for (double p : {-0.5, 0.0, 5.0 / 18.0}) e21 = std::max(e21, std::abs(nearest(fps, p)->p - p));
    if (fps.size() != 3) e21 = INFINITY;
  }
  {
    const auto first = [](int m, int n) { return meanfield::classify_bifurcations(ModelSpec(m, n, m * n, 0.0, 1.0)).front(); };
    ecrit = std::max({std::abs(first(2, 1).eps_critical - std::sqrt(2.0)), std::abs(first(2, 2).eps_critical - 1.0),
                      std::abs(first(3, 3).eps_critical - 0.125),
                      std::abs(std::abs(first(3, 3).energy) - 1.0 / (12.0 * std::sqrt(2.0)))});
  }
  o.pass = e22 <= 1e-12 && e33 <= 1e-10 && e21 <= 1e-10 && ecrit <= 1e-10;
  o.summary = format("(2,2) %.1e (tol 1e-12), (3,3) %.1e, (2,1) %.1e, critical values %.1e (tol 1e-10)",
                     e22, e33, e21, ecrit);
  return o;
}

// ---------------------------------------------------------------------------

Outcome correspondence() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  struct Case { int m, n; long N; double lo, hi; };
  const std::vector<Case> cases{{2, 1, 80, -2.0, 2.0}, {2, 2, 160, -1.5, 1.5}, {3, 3, 360, -0.2, 0.2}};
  bool all = true;
  for (const auto& c : cases) {
    const ModelSpec base(c.m, c.n, c.N, 0.0, 1.0);
    const double eta = base.eta();
    const auto rows = quantum::sweep_epsilon(base, linspace(c.lo, c.hi, 121), resolve_jobs(0));
    double band_excess = 0.0;
    int saddles = 0, misses = 0;
    double worst_offset = 0.0;
    for (const auto& row : rows) {
      const ModelSpec s = base.with_eps(row.eps);
      const auto er = meanfield::classical_energy_range(s);
      const auto& e = row.scaled_eigenvalues;
      band_excess = std::max({band_excess, (er.min - 3 * eta) - e.front(), e.back() - (er.max + 3 * eta)});
      std::vector<double> es;
      for (const auto& fp : row.fixed_points)
        if (fp.stability == Stability::Saddle) es.push_back(fp.energy);
      for (const auto& fp : row.fixed_points) {
        if (fp.stability != Stability::Saddle) continue;
        if (fp.energy <= e.front() || fp.energy >= e.back()) continue;
        // smallest nearest-neighbor gap with its midpoint inside +-5 eta and
        // closer to this saddle energy than to any other
        double best_gap = INFINITY, best_mid = NAN;
        for (std::size_t k = 0; k + 1 < e.size(); ++k) {
          const double mid = 0.5 * (e[k] + e[k + 1]);
          if (std::abs(mid - fp.energy) > 5 * eta) continue;
          bool other_closer = false;
          for (double x : es) other_closer |= std::abs(mid - x) < std::abs(mid - fp.energy);
          if (other_closer) continue;
          if (e[k + 1] - e[k] < best_gap) best_gap = e[k + 1] - e[k], best_mid = mid;
        }
        ++saddles;
        const double off = std::abs(best_mid - fp.energy);
        worst_offset = std::max(worst_offset, off / eta);
        if (!(off <= 2 * eta)) {
          ++misses;
          if (misses <= 3)
            o.details.push_back(format("(%d,%d) eps=%.4f saddle E=%.5f (%s): gap minimum at %.5f, %.2f eta away",
                                       c.m, c.n, row.eps, fp.energy, io::to_string(fp.location), best_mid, off / eta));
        }
      }
    }
    const bool ok = band_excess <= 0.0 && misses == 0;
    all = all && ok;
    o.details.push_back(format("(%d,%d,N=%ld) eps in [%g,%g]: band excess %.2e, %d/%d saddles matched, worst offset %.2f eta",
                               c.m, c.n, c.N, c.lo, c.hi, std::max(0.0, band_excess), saddles - misses, saddles,
                               worst_offset));
  }
  const double t = seconds_since(t0);
  o.pass = all && t < 120.0;
  o.summary = format("levels inside [E_min-3eta, E_max+3eta]; gap minima within 2eta of saddle energies; %.1f s (< 120 s)", t);
  return o;
}

// ---------------------------------------------------------------------------

// Worst |semiclassical - exact| in units of the local mean spacing, split into
// the two levels nearest each saddle energy and all others.
std::pair<double, double> wkb_deviation(const ModelSpec& s) {
  const auto ex = quantum::eigen_spectrum(s).scaled_eigenvalues;
  const auto sc = semiclassics::quantize_double_well(s);
  const std::size_t d = ex.size();
  std::vector<bool> near(d, false);
  for (double es : meanfield::saddle_energies(s)) {
    std::vector<std::size_t> idx(d);
    for (std::size_t k = 0; k < d; ++k) idx[k] = k;
    std::partial_sort(idx.begin(), idx.begin() + 2, idx.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(ex[a] - es) < std::abs(ex[b] - es);
    });
    near[idx[0]] = near[idx[1]] = true;
  }
  double far = 0.0, nr = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double spacing = k == 0 ? ex[1] - ex[0] : k + 1 == d ? ex[d - 1] - ex[d - 2] : 0.5 * (ex[k + 1] - ex[k - 1]);
    const double dev = std::abs(sc.levels[k].energy - ex[k]) / spacing;
    (near[k] ? nr : far) = std::max(near[k] ? nr : far, dev);
  }
  return {far, nr};
}

Outcome wkb_accuracy() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  struct Case { int m, n; double lo, hi; };
  bool all = true;
  for (const Case& c : {Case{4, 1, -1.6, 1.6}, Case{4, 3, -0.08, 0.08}}) {
    const ModelSpec base(c.m, c.n, particles_for_dim(c.m, c.n, 41), 0.0, 1.0);
    const auto grid = linspace(c.lo, c.hi, 41);
    std::vector<double> worst_far(grid.size(), 0.0), worst_near(grid.size(), 0.0);
    parallel_for(grid.size(), resolve_jobs(0), [&](std::size_t i) {
      std::tie(worst_far[i], worst_near[i]) = wkb_deviation(base.with_eps(grid[i]));
    });
    const auto far = std::max_element(worst_far.begin(), worst_far.end());
    const auto nr = std::max_element(worst_near.begin(), worst_near.end());
    int bad = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) bad += worst_far[i] > 0.10 || worst_near[i] > 0.50;
    const bool ok = *far <= 0.10 && *nr <= 0.50;
    all = all && ok;
    const double eps_far = grid[far - worst_far.begin()];
    o.details.push_back(format("(%d,%d) dim 41, eps in [%g,%g]: max deviation %.3f spacing (at eps=%.3f, tol 0.10), "
                               "near saddles %.3f (at eps=%.3f, tol 0.50); %d/41 eps values out of tolerance",
                               c.m, c.n, c.lo, c.hi, *far, eps_far, *nr, grid[nr - worst_near.begin()], bad));
    // the deviation in spacing units does not shrink with N: an O(eta) energy
    // offset between the quantum matrix elements and the classical symbol
    std::string trend;
    for (long dim : {41L, 81L, 161L})
      trend += format(" %.3f", wkb_deviation(base.with_N(particles_for_dim(c.m, c.n, dim)).with_eps(eps_far)).first);
    o.details.push_back(format("  same eps at dim 41/81/161:%s spacing", trend.c_str()));
  }
  o.pass = all;
  o.summary = format("semiclassical vs exact levels in units of the local mean spacing; %.1f s", seconds_since(t0));
  return o;
}

// ---------------------------------------------------------------------------

struct DosCase { int m, n; double eps; };

// mean of T/2pi over [a, b]
double mean_density(const semiclassics::WkbModel& w, double a, double b) {
  const auto& rule = numerics::gauss_legendre(8);
  double s = 0.0;
  for (int k = 0; k < 8; ++k) {
    const auto T = w.period(0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[k]);
    if (T.divergent) return INFINITY;
    s += 0.5 * rule.weights[k] * T.T / (2 * kPi);
  }
  return s;
}

// 1/omega from the harmonic spacing of the 12 levels at one band edge,
// extrapolated linearly to the edge
double edge_plateau(const std::vector<double>& e, double eta, bool lower) {
  const int K = 12;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int k = 0; k < K; ++k) {
    const std::size_t i = lower ? std::size_t(k) : e.size() - 2 - std::size_t(k);
    const double gap = (e[i + 1] - e[i]) / eta;
    sx += k; sy += gap; sxx += double(k) * k; sxy += k * gap;
  }
  const double slope = (K * sxy - sx * sy) / (K * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / K;
  return 1.0 / intercept;
}

// Per-bin comparison away from band edges and saddles. one_level is the
// largest relative weight of a single level in a checked bin, i.e. the
// resolution floor of the histogram itself.
struct BinCheck { int checked = 0, failed = 0; double worst = 0.0, one_level = 0.0; };

BinCheck bin_check(const ModelSpec& s, const quantum::DosHistogram& h, const semiclassics::WkbModel& w) {
  BinCheck b;
  const double bw = h.width();
  std::vector<double> specials{h.bin_edges.front(), h.bin_edges.back()};
  for (double e : meanfield::saddle_energies(s)) specials.push_back(e);
  for (std::size_t k = 0; k < h.bins(); ++k) {
    bool skip = false;
    for (double e : specials) skip |= std::abs(h.center(k) - e) < 5.0 * bw;
    if (skip) continue;
    const double rho = mean_density(w, h.bin_edges[k], h.bin_edges[k + 1]);
    const double rel = std::abs(h.density[k] - rho) / rho;
    ++b.checked;
    b.failed += rel > 0.05;
    b.worst = std::max(b.worst, rel);
    b.one_level = std::max(b.one_level, 1.0 / (rho * bw * double(s.dim())));
  }
  return b;
}

Outcome dos() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  const std::vector<DosCase> cases{{2, 1, 0.5}, {2, 1, 1.5}, {2, 2, 0.2}, {2, 2, 1.2}, {3, 3, 0.08},
                                   {3, 3, 0.125}, {3, 3, 0.15}, {3, 2, 0.2}, {3, 2, 0.4}, {3, 2, 0.8}};
  bool all = true;
  double slowest = 0.0;
  for (const auto& c : cases) {
    const auto tc = std::chrono::steady_clock::now();
    const ModelSpec s(c.m, c.n, 9000, c.eps, 1.0);
    const auto r = quantum::eigen_spectrum(s);
    const auto h = quantum::dos_histogram(r, 200);
    const semiclassics::WkbModel w(s);
    const double bw = h.width();
    const auto fps = meanfield::find_fixed_points(s);
    const auto bc = bin_check(s, h, w);
    // band-edge plateaus against the center frequency at each extremum
    double plateau_err = 0.0;
    for (bool lower : {true, false}) {
      const double edge = lower ? w.E_min() : w.E_max();
      const meanfield::FixedPoint* c0 = nullptr;
      for (const auto& fp : fps)
        if (fp.stability == Stability::Center && (!c0 || std::abs(fp.energy - edge) < std::abs(c0->energy - edge))) c0 = &fp;
      const double measured = edge_plateau(r.scaled_eigenvalues, s.eta(), lower);
      plateau_err = std::max(plateau_err, std::abs(measured * c0->rate - 1.0));
    }
    // logarithmic peaks at saddle energies inside the band
    int saddles = 0, detected = 0;
    for (double es : meanfield::saddle_energies(s)) {
      if (es < h.bin_edges.front() + 5 * bw || es > h.bin_edges.back() - 5 * bw) continue;
      ++saddles;
      const long ks = std::clamp(long((es - h.bin_edges.front()) / bw), 0L, long(h.bins()) - 1);
      double peak = 0.0, ref = 0.0;
      int nref = 0;
      for (long k = ks - 1; k <= ks + 1; ++k)
        if (k >= 0 && k < long(h.bins())) peak = std::max(peak, h.density[k]);
      for (long k = ks - 10; k <= ks + 10; ++k) {
        if (std::abs(k - ks) < 6 || k < 0 || k >= long(h.bins())) continue;
        ref += h.density[k];
        ++nref;
      }
      ref /= std::max(1, nref);
      // T grows without bound on approach from the side(s) with orbits
      bool grows = false;
      for (double side : {-1.0, 1.0}) {
        const auto a = w.period(es + side * 1e-4 * bw), b = w.period(es + side * 1e-8 * bw);
        if (!a.divergent && !b.divergent && a.T > 0 && b.T > a.T * 1.2) grows = true;
      }
      if (peak > 1.1 * ref && grows) ++detected;
    }
    const double t = seconds_since(tc);
    slowest = std::max(slowest, t);
    const bool ok = bc.failed == 0 && plateau_err <= 0.02 && detected == saddles && t < 300.0;
    all = all && ok;
    o.details.push_back(format("%s (%d,%d) eps=%-5g dim %ld: %3d/%3d bins over 5%% (worst %.3f, one level = %.3f), plateau off %.4f (tol 0.02), "
                               "log peaks %d/%d, %.1f s",
                               ok ? "ok  " : "red ", c.m, c.n, c.eps, long(s.dim()), bc.failed, bc.checked, bc.worst, bc.one_level,
                               plateau_err, detected, saddles, t));
  }
  // the per-bin figure at larger N, same 200 bins (diagnostic only)
  for (const auto& c : std::vector<DosCase>{{3, 3, 0.15}, {3, 2, 0.4}}) {
    const ModelSpec s(c.m, c.n, 144000, c.eps, 1.0);
    const auto r = quantum::eigen_spectrum(s);
    const auto bc = bin_check(s, quantum::dos_histogram(r, 200), semiclassics::WkbModel(s));
    o.details.push_back(format("info (%d,%d) eps=%-5g at N=144000, dim %ld: %d/%d bins over 5%% (worst %.3f, one level = %.3f)",
                               c.m, c.n, c.eps, long(s.dim()), bc.failed, bc.checked, bc.worst, bc.one_level));
  }
  o.pass = all;
  o.summary = format("histogram vs T/2pi, edge plateaus, saddle peaks; %zu cases, slowest %.1f s (< 300 s), total %.1f s",
                     cases.size(), slowest, seconds_since(t0));
  return o;
}

Outcome step_resolution() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  const ModelSpec s(3, 3, 72000, 0.08, 1.0);
  const auto r = quantum::eigen_spectrum(s);
  const auto h = quantum::dos_histogram(r, 200);
  const semiclassics::WkbModel w(s);
  const double bw = h.width();
  // inner extrema: centers strictly inside the band
  std::vector<meanfield::FixedPoint> inner;
  for (const auto& fp : meanfield::find_fixed_points(s))
    if (fp.stability == Stability::Center && fp.energy > w.E_min() + 5 * bw && fp.energy < w.E_max() - 5 * bw)
      inner.push_back(fp);
  std::vector<double> specials{h.bin_edges.front(), h.bin_edges.back()};
  for (double e : meanfield::saddle_energies(s)) specials.push_back(e);
  for (const auto& fp : inner) specials.push_back(fp.energy);
  double ss = 0.0;
  int nn = 0;
  for (std::size_t k = 0; k < h.bins(); ++k) {
    bool skip = false;
    for (double e : specials) skip |= std::abs(h.center(k) - e) < 5.0 * bw;
    if (skip) continue;
    const double d = h.density[k] - mean_density(w, h.bin_edges[k], h.bin_edges[k + 1]);
    ss += d * d;
    ++nn;
  }
  const double noise = std::sqrt(ss / std::max(1, nn));
  bool all = !inner.empty();
  for (const auto& fp : inner) {
    const long ks = long((fp.energy - h.bin_edges.front()) / bw);
    double below = 0, above = 0;
    for (int j = 1; j <= 5; ++j) {
      below += h.density[ks - j] / 5.0;
      above += h.density[ks + j] / 5.0;
    }
    const double step = above - below;
    const bool ok = std::abs(step) >= 3.0 * noise;
    all = all && ok;
    o.details.push_back(format("%s center at E=%.5f: histogram step %+.3f, bin noise %.3f (ratio %.1f); "
                               "classical jump 1/omega = %.3f",
                               io::to_string(fp.location), fp.energy, step, noise, std::abs(step) / noise,
                               1.0 / fp.rate));
  }
  o.pass = all;
  o.summary = format("(3,3) eps=0.08 N=72000: step >= 3x bin noise at %zu inner extrema; %.1f s", inner.size(),
                     seconds_since(t0));
  return o;
}

Outcome trajectory_conservation() {
  Outcome o;
  std::mt19937_64 rng(20260417);
  std::uniform_real_distribution<double> up(-0.45, 0.45), ut(0.0, 2 * kPi);
  double worst_H = 0.0, worst_C = 0.0;
  for (auto [m, n, eps] : {std::tuple{2, 1, 0.5}, {3, 3, 0.1}}) {
    const ModelSpec s(m, n, m * n, eps, 1.0);
    for (int k = 0; k < 5; ++k) {
      const auto rec = meanfield::integrate_trajectory(s, meanfield::surface_point(s, up(rng), ut(rng)), 100.0, 1e-3, 100000);
      worst_H = std::max(worst_H, rec.drift_H);
      worst_C = std::max(worst_C, rec.drift_C);
    }
  }
  o.pass = worst_H < 1e-9 && worst_C < 1e-9;
  o.summary = format("max |dH| %.2e, max |dC| %.2e over t=100, dt=1e-3, 10 orbits (tol 1e-9)", worst_H, worst_C);
  return o;
}

Outcome quantum_classical_convergence() {
  Outcome o;
  std::vector<double> lx, ly;
  double C = 0.0;
  std::string list;
  for (long N : {40L, 80L, 160L, 320L}) {
    const ModelSpec s(2, 1, N);
    double err = 0.0;
    for (double z : quantum::sz_eigenvalues(s))
      err = std::max(err, std::abs(s.eta() * algebra::eval_F(s, z) - meanfield::f_classical(s, s.eta() * z)));
    lx.push_back(std::log(double(N)));
    ly.push_back(std::log(err));
    C = std::max(C, err * N);
    list += format(" %.3e", err);
  }
  const double n = double(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) sx += lx[i], sy += ly[i], sxx += lx[i] * lx[i], sxy += lx[i] * ly[i];
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  o.pass = slope >= -1.3 && slope <= -0.7;
  o.summary = format("max |eta F(sz) - f| =%s at N=40..320, N*err <= %.3f, slope %.3f (in [-1.3,-0.7])",
                     list.c_str(), C, slope);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"su(2) oracle", su2_oracle},
      {"algebra identities", algebra_identities},
      {"classical function identities", classical_identities},
      {"fixed points and critical values", fixed_points_closed_form},
      {"spectrum / fixed-point correspondence", correspondence},
      {"WKB accuracy", wkb_accuracy},
      {"density of states", dos},
      {"step resolution", step_resolution},
      {"trajectory conservation", trajectory_conservation},
      {"quantum -> classical convergence", quantum_classical_convergence},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (only < 0 || only > int(criteria.size())) {
    std::fprintf(stderr, "usage: acceptance [criterion 1..%zu]\n", criteria.size());
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && int(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.summary.c_str());
    for (const auto& d : o.details) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
