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

#ifndef KUMMER_VERIFY_HPP
#define KUMMER_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "kummer/algebra.hpp"
#include "kummer/meanfield.hpp"
#include "kummer/model.hpp"
#include "kummer/numerics/roots.hpp"
#include "kummer/quantum.hpp"
#include "kummer/semiclassics.hpp"

namespace kummer {

struct CheckResult {
  std::string name;
  double value;      // measured error (or margin)
  double tolerance;
  bool pass;
};

// Invariants of all layers evaluated at one model. Deterministic: the random
// sample points come from a fixed seed.
inline std::vector<CheckResult> run_invariant_suite(const ModelSpec& s) {
  std::vector<CheckResult> out;
  const auto add = [&](std::string name, double value, double tol) {
    out.push_back({std::move(name), value, tol, value <= tol});
  };

  // algebra / quantum
  const auto id = quantum::identity_residuals(s);
  add("[Sz,Sx] = i Sy", id.comm_z_x, 1e-10);
  add("[Sy,Sz] = i Sx", id.comm_y_z, 1e-10);
  add("[Sx,Sy] = i F(Sz)", id.comm_x_y, 1e-10);
  add("Sx^2+Sy^2+G(Sz) scalar", id.casimir_spread, 1e-9);

  {
    const ModelSpec swapped(s.n(), s.m(), s.N());
    double worst = 0.0;
    for (int k = -5; k <= 5; ++k) {
      const double z = 0.37 * k * s.half_width() / 5.0 + 0.11;
      const double f1 = algebra::eval_F(s, z), f2 = -algebra::eval_F(swapped, -z);
      const double g1 = algebra::eval_G(s, z), g2 = algebra::eval_G(swapped, -z);
      worst = std::max(worst, std::abs(f1 - f2) / std::max(1.0, std::abs(f1)));
      worst = std::max(worst, std::abs(g1 - g2) / std::max(1.0, std::abs(g1)));
    }
    add("F,G under (m,n) -> (n,m)", worst, 1e-12);
  }

  const auto spec = quantum::eigen_spectrum(s);
  {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < spec.raw_eigenvalues.size(); ++i)
      gap = std::min(gap, spec.raw_eigenvalues[i] - spec.raw_eigenvalues[i - 1]);
    out.push_back({"spectrum nondegenerate (min gap)", gap, 0.0, gap > 0.0});
  }
  {
    const std::size_t d = spec.raw_eigenvalues.size();
    add("eigenvector residual", quantum::eigen_residual(s, spec, {0, d / 2, d - 1}), 1e-10);
  }
  const auto range = meanfield::classical_energy_range(s);
  {
    const double lo = spec.scaled_eigenvalues.front(), hi = spec.scaled_eigenvalues.back();
    const double excess = std::max({0.0, range.min - 3 * s.eta() - lo, hi - range.max - 3 * s.eta()});
    add("scaled spectrum within classical band +- 3 eta", excess, 0.0);
  }
  {
    const auto h = quantum::dos_histogram(spec, 50);
    double integral = 0.0;
    for (double d : h.density) integral += d * h.width();
    add("histogram normalization", std::abs(integral - 1.0), 1e-12);
  }

  // mean field
  {
    std::mt19937_64 rng(20260417);
    std::uniform_real_distribution<double> U(-0.5, 0.5);
    double dg = 0.0, gr = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double p = U(rng);
      const double d = numerics::complex_step_derivative(
          [&](auto x) { return meanfield::g_classical(s, x); }, p);
      const double f2 = 2.0 * meanfield::f_classical(s, p);
      dg = std::max(dg, std::abs(d - f2) / std::max(1e-3, std::abs(f2)));
      const double r = meanfield::radius(s, p);
      gr = std::max(gr, std::abs(meanfield::g_classical(s, p) + r * r));
    }
    add("dg/dp = 2 f", dg, 1e-10);
    add("g = -r^2", gr, 1e-12);
  }
  const auto fps = meanfield::find_fixed_points(s);
  add("fixed-point count <= min(n+m, 6)", double(fps.size()), double(std::min(s.n() + s.m(), 6)));
  {
    double worst = 0.0;
    for (const auto& fp : fps)
      if (!fp.at_pole()) worst = std::max(worst, std::abs(std::abs(fp.sx) - meanfield::radius(s, fp.p)));
    add("fixed points on the surface", worst, 1e-9);
  }
  {
    const double p0 = 0.5 * (range.p_min + range.p_max) + 0.05;
    const auto st = meanfield::surface_point(s, std::clamp(p0, -0.45, 0.45), 0.7);
    const auto rec = meanfield::integrate_trajectory(s, st, 10.0, 1e-3, 1000);
    add("trajectory |dH| (t=10)", rec.drift_H, 1e-9);
    add("trajectory |dC| (t=10)", rec.drift_C, 1e-9);
  }

  // semiclassics
  {
    const semiclassics::WkbModel wkb(s);
    const double top = wkb.area(range.max), bottom = wkb.area(range.min);
    add("S(E_min) = 0, S(E_max) = 2 pi", std::abs(bottom) + std::abs(top - 2 * std::numbers::pi), 1e-12);
    // dS/dE = T at an energy away from critical ones
    const auto sad = meanfield::saddle_energies(s);
    double E = range.min + 0.37 * (range.max - range.min);
    for (int tries = 0; tries < 8; ++tries) {
      bool clear = true;
      for (double e : sad) clear = clear && std::abs(E - e) > 0.02 * (range.max - range.min);
      if (clear) break;
      E += 0.05 * (range.max - range.min);
    }
    const double h = 1e-5 * (range.max - range.min);
    const double dS = (wkb.area(E + h) - wkb.area(E - h)) / (2 * h);
    const auto T = wkb.period(E);
    add("dS/dE = T", std::abs(dS - T.T) / std::abs(T.T), 1e-6);
  }
  return out;
}

}  // namespace kummer

#endif  // KUMMER_VERIFY_HPP
