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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "kummer/meanfield.hpp"
#include "kummer/numerics/roots.hpp"

namespace {

using kummer::ModelSpec;
using namespace kummer::meanfield;

const std::vector<std::pair<int, int>> kShapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 3}};

const FixedPoint* near_p(const std::vector<FixedPoint>& fps, double p, double tol) {
  for (const auto& fp : fps)
    if (std::abs(fp.p - p) <= tol) return &fp;
  return nullptr;
}

TEST(ClassicalFunctions, TwoToOneClosedForm) {
  const ModelSpec s(2, 1, 2);
  const auto f = f_polynomial(s);
  ASSERT_GE(f.size(), 3u);
  EXPECT_NEAR(f[0], -0.25, 1e-15);
  EXPECT_NEAR(f[1], 1.0, 1e-15);
  EXPECT_NEAR(f[2], 3.0, 1e-15);
  for (std::size_t k = 3; k < f.size(); ++k) EXPECT_NEAR(f[k], 0.0, 1e-15);
}

TEST(ClassicalFunctions, DerivativeAndRadiusIdentities) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (auto [m, n] : kShapes) {
    const ModelSpec s(m, n, m * n);
    for (int k = 0; k < 200; ++k) {
      const double p = u(rng);
      const double dg = kummer::numerics::complex_step_derivative(
          [&](auto x) { return g_classical(s, x); }, p);
      EXPECT_NEAR(dg, 2.0 * f_classical(s, p), 1e-12);
      const double r = radius(s, p);
      EXPECT_NEAR(g_classical(s, p), -r * r, 1e-14);
      EXPECT_NEAR(f_polynomial(s)(p), f_classical(s, p), 1e-14);
      EXPECT_NEAR(g_polynomial(s)(p), g_classical(s, p), 1e-14);
      const double h = 1e-6;
      if (p > -0.5 + 1e-3 && p < 0.5 - 1e-3) {
        const double d = radius_derivative(s, p);
        EXPECT_NEAR(d, (radius(s, p + h) - radius(s, p - h)) / (2 * h), 1e-5 * (1 + std::abs(d)));
      }
    }
    EXPECT_THROW(radius(s, 0.6), std::domain_error);
  }
}

TEST(FixedPoints, ClosedFormTwoTwo) {
  const ModelSpec s(2, 2, 4, 0.6, 1.0);
  const auto fps = find_fixed_points(s);
  const auto* a = near_p(fps, 0.3, 1e-12);
  const auto* b = near_p(fps, -0.3, 1e-12);
  ASSERT_TRUE(a && b);
  EXPECT_NEAR(a->energy, 0.34, 1e-12);
  EXPECT_NEAR(b->energy, -0.34, 1e-12);
  EXPECT_EQ(a->stability, Stability::Center);
}

TEST(FixedPoints, ClosedFormThreeThree) {
  const ModelSpec s(3, 3, 9, 0.1, 1.0);
  const auto fps = find_fixed_points(s);
  for (double sign : {-1.0, 1.0})
    for (double inner : {-1.0, 1.0}) {
      const double p = sign * std::sqrt((1.0 + inner * std::sqrt(1.0 - 0.64)) / 8.0);
      EXPECT_TRUE(near_p(fps, p, 1e-10)) << p;
    }
  EXPECT_EQ(fps.size(), 6u);  // four interior points and two pole centers
}

TEST(FixedPoints, ClosedFormTwoOne) {
  const ModelSpec s(2, 1, 2, 0.5, 1.0);
  const auto fps = find_fixed_points(s);
  ASSERT_EQ(fps.size(), 3u);
  EXPECT_NEAR(fps[0].p, -0.5, 1e-10);
  EXPECT_NEAR(fps[1].p, 0.0, 1e-10);
  EXPECT_NEAR(fps[2].p, 5.0 / 18.0, 1e-10);
  EXPECT_EQ(fps[0].location, Location::SouthPole);
}

TEST(FixedPoints, EpsZeroAndSu2) {
  for (auto [m, n] : kShapes) {
    const ModelSpec s(m, n, m * n, 0.0, 1.0);
    const double pstar = double(m - n) / (2.0 * (m + n));
    const auto* fp = near_p(find_fixed_points(s), pstar, 1e-12);
    ASSERT_TRUE(fp) << m << "," << n;
    EXPECT_NEAR(std::abs(fp->energy), radius(s, pstar), 1e-12);
  }
  // (1,1): centers on the rotation axis (v, 0, eps)
  const ModelSpec s(1, 1, 1, 0.3, 1.0);
  const auto fps = find_fixed_points(s);
  ASSERT_EQ(fps.size(), 2u);
  const double w = std::hypot(0.3, 1.0);
  EXPECT_NEAR(fps[1].p, 0.5 * 0.3 / w, 1e-12);
  EXPECT_NEAR(fps[1].energy, 0.5 * w, 1e-12);
  EXPECT_NEAR(fps[1].rate, w, 1e-12);
}

TEST(FixedPoints, LieOnSurfaceAndAreStationary) {
  for (auto [m, n] : kShapes)
    for (double eps : {-0.7, -0.05, 0.02, 0.3, 1.1}) {
      const ModelSpec s(m, n, m * n, eps, 0.9);
      for (const auto& fp : find_fixed_points(s)) {
        const std::array<double, 3> st{fp.sx, 0.0, fp.p};
        EXPECT_NEAR(casimir(s, st), 0.0, 1e-12);
        const auto d = flow(s, st);
        EXPECT_NEAR(std::hypot(d[0], d[1], d[2]), 0.0, 1e-10) << s.label() << " eps " << eps << " p " << fp.p;
        EXPECT_NEAR(energy(s, st), fp.energy, 1e-14);
      }
    }
}

TEST(FixedPoints, CenterFrequencyMatchesSmallOscillation) {
  const ModelSpec s(2, 1, 2, 0.5, 1.0);
  const auto fps = find_fixed_points(s);
  const auto& c = fps[2];
  ASSERT_EQ(c.stability, Stability::Center);
  const double dp = 1e-4;
  auto st = surface_point(s, c.p + dp, c.q);
  const auto rec = integrate_trajectory(s, st, 20.0, 1e-4, 1);
  // period from successive upward crossings of sz = p*
  std::vector<double> cross;
  for (std::size_t i = 1; i < rec.times.size(); ++i) {
    const double a = rec.states[i - 1][2] - c.p, b = rec.states[i][2] - c.p;
    if (a < 0 && b >= 0) cross.push_back(rec.times[i - 1] + (rec.times[i] - rec.times[i - 1]) * a / (a - b));
  }
  ASSERT_GE(cross.size(), 3u);
  const double period = (cross.back() - cross.front()) / double(cross.size() - 1);
  EXPECT_NEAR(period, 2 * std::numbers::pi / c.rate, 1e-3 * period);
}

TEST(Bifurcations, CriticalValues) {
  const auto first = [](int m, int n) { return classify_bifurcations(ModelSpec(m, n, m * n, 0.0, 1.0)).front(); };
  EXPECT_NEAR(first(2, 1).eps_critical, std::sqrt(2.0), 1e-10);
  EXPECT_EQ(first(2, 1).kind, BifurcationKind::Transcritical);
  EXPECT_NEAR(first(2, 2).eps_critical, 1.0, 1e-10);
  const auto c33 = first(3, 3);
  EXPECT_EQ(c33.kind, BifurcationKind::SaddleNode);
  EXPECT_NEAR(c33.eps_critical, 0.125, 1e-10);
  EXPECT_NEAR(std::abs(c33.energy), 1.0 / (12.0 * std::sqrt(2.0)), 1e-10);
  // scaling with v
  const auto scaled = classify_bifurcations(ModelSpec(3, 3, 9, 0.0, 2.0)).front();
  EXPECT_NEAR(scaled.eps_critical, 0.25, 1e-10);
  EXPECT_NEAR(std::abs(scaled.energy), 2.0 / (12.0 * std::sqrt(2.0)), 1e-10);
}

TEST(Bifurcations, PoincareIndexAcrossEvents) {
  // saddle-node events keep the index sum; each transcritical event moves it by one
  for (auto [m, n] : kShapes) {
    const ModelSpec base(m, n, m * n, 0.0, 1.0);
    const auto events = classify_bifurcations(base);
    for (const auto& ev : events) {
      if (ev.eps_critical < 0) continue;
      int transcritical = 0;
      for (const auto& other : events)
        if (std::abs(other.eps_critical - ev.eps_critical) < 1e-9 && other.kind == BifurcationKind::Transcritical)
          ++transcritical;
      const double d = 1e-4 * std::max(1.0, ev.eps_critical);
      const int below = poincare_index_sum(find_fixed_points(base.with_eps(ev.eps_critical - d)));
      const int above = poincare_index_sum(find_fixed_points(base.with_eps(ev.eps_critical + d)));
      EXPECT_EQ(std::abs(below - above), transcritical) << m << "," << n << " at " << ev.eps_critical;
    }
  }
}

TEST(Bifurcations, FixedPointCountChangesAtCriticalValue) {
  const ModelSpec s(3, 3, 9, 0.0, 1.0);
  EXPECT_EQ(find_fixed_points(s.with_eps(0.12)).size(), 6u);
  EXPECT_EQ(find_fixed_points(s.with_eps(0.13)).size(), 2u);
}

TEST(Trajectory, Su2RotationOracle) {
  // for (1,1) the flow is a rigid rotation about (v, 0, eps)
  const double eps = 0.4, v = 0.9;
  const ModelSpec s(1, 1, 1, eps, v);
  const auto st0 = surface_point(s, 0.2, 1.0);
  const double t = 7.3;
  const auto rec = integrate_trajectory(s, st0, t, 1e-3, 100000);
  const double w = std::hypot(eps, v);
  const std::array<double, 3> k{v / w, 0.0, eps / w};
  const double c = std::cos(w * t), sn = std::sin(w * t);
  const double kd = k[0] * st0[0] + k[1] * st0[1] + k[2] * st0[2];
  const std::array<double, 3> kx{k[1] * st0[2] - k[2] * st0[1], k[2] * st0[0] - k[0] * st0[2],
                                 k[0] * st0[1] - k[1] * st0[0]};
  const auto& end = rec.states.back();
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(end[i], st0[i] * c + kx[i] * sn + k[i] * kd * (1 - c), 1e-10);
}

TEST(Trajectory, ConservationAndErrors) {
  const ModelSpec s(3, 3, 9, 0.1, 1.0);
  const auto rec = integrate_trajectory(s, surface_point(s, 0.1, 0.5), 10.0, 1e-3, 10);
  EXPECT_LT(rec.drift_H, 1e-10);
  EXPECT_LT(rec.drift_C, 1e-10);
  EXPECT_EQ(rec.times.size(), 1001u);
  EXPECT_THROW(integrate_trajectory(s, surface_point(s, 0.1, 0.5), 1.0, 0.0), std::invalid_argument);
}

TEST(Surface, MeshLiesOnKummerShape) {
  const ModelSpec s(3, 2, 6);
  const auto mesh = kummer_mesh(s, 16, 9);
  ASSERT_EQ(mesh.size(), 16u * 9u);
  for (const auto& v : mesh) EXPECT_NEAR(casimir(s, v), 0.0, 1e-14);
  EXPECT_NEAR(mesh.front()[2], -0.5, 1e-15);
  EXPECT_NEAR(mesh.back()[2], 0.5, 1e-15);
  EXPECT_THROW(kummer_mesh(s, 1, 9), std::invalid_argument);
}

TEST(EnergyRange, ContainsFixedPointEnergies) {
  for (auto [m, n] : kShapes) {
    const ModelSpec s(m, n, m * n, 0.3, 1.0);
    const auto er = classical_energy_range(s);
    for (const auto& fp : find_fixed_points(s)) {
      EXPECT_GE(fp.energy, er.min - 1e-12);
      EXPECT_LE(fp.energy, er.max + 1e-12);
    }
    EXPECT_NEAR(potentials(s, er.p_min).minus, er.min, 1e-12);
  }
}

}  // namespace
