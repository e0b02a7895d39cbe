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

#ifndef KUMMER_SEMICLASSICS_HPP
#define KUMMER_SEMICLASSICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/Polynomials>

#include "kummer/meanfield.hpp"
#include "kummer/model.hpp"
#include "kummer/numerics/gamma.hpp"
#include "kummer/numerics/polynomial.hpp"
#include "kummer/numerics/quadrature.hpp"
#include "kummer/numerics/roots.hpp"

namespace kummer::semiclassics {

using cplx = std::complex<double>;

enum class Branch { Lower, Upper };  // U- or U+

struct TurningPoint {
  double p;
  Branch branch;
};

struct Interval {
  double a;
  double b;
};

struct TurningPointSet {
  std::vector<TurningPoint> real_points;       // sorted by p
  std::optional<cplx> complex_pair;            // member with Im > 0
  std::vector<Interval> regions;               // classically allowed
  bool out_of_band = false;
};

struct AngleQ {
  double value = 0.0;   // arccos in the allowed region, arccosh magnitude outside
  bool allowed = true;
  bool pole = false;    // r(p) = 0
};

struct ActionSet {
  double S = 0.0;
  double S_l = 0.0;
  double S_r = 0.0;
  double S_eps = 0.0;
  double S_phi = 0.0;
  double kappa = 0.0;
};

enum class Regime { SingleWell, DoubleWellBelow, AboveBarrier };

struct Level {
  int nu;
  double energy;   // scaled
  Regime regime;
  bool mirrored;   // obtained from the two-maxima structure of U+
};

struct SemiclassicalSpectrum {
  std::vector<Level> levels;
};

struct PeriodResult {
  double T = 0.0;
  bool divergent = false;
};

inline constexpr double kArccosClamp = 1e-12;

// S_phi = arg Gamma(1/2 + i s) - s log|s| + s, on the continuous branch.
inline double phase_correction(double s) {
  if (s == 0.0) return 0.0;
  return numerics::log_gamma(cplx(0.5, s)).imag() - s * std::log(std::abs(s)) + s;
}

// Phase chi with tan(chi) = t tan(alpha), continuous in alpha and equal to
// alpha at multiples of pi/2.
inline double lift_phase(double alpha, double t) {
  const double s = std::sin(alpha), c = std::cos(alpha);
  return alpha + std::atan2((t - 1.0) * s * c, c * c + t * s * s);
}

// Classical phase-space geometry at fixed model parameters, with the
// critical points of U+- cached.
class WkbModel {
 public:
  explicit WkbModel(const ModelSpec& s) : s_(s), v_(std::abs(s.v())) {
    if (v_ == 0.0) throw std::invalid_argument("semiclassics: v must be nonzero");
    minus_g_ = -1.0 * meanfield::g_polynomial(s);
    fixed_points_ = meanfield::find_fixed_points(s);
    breaks_.push_back(-0.5);
    for (const auto& fp : fixed_points_)
      if (!fp.at_pole()) breaks_.push_back(fp.p);
    breaks_.push_back(0.5);
    std::sort(breaks_.begin(), breaks_.end());
    breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());
    range_ = meanfield::classical_energy_range(s);
    // interior local maxima of U-: barrier tops between wells
    for (const auto& fp : fixed_points_) {
      if (fp.at_pole() || std::isnan(fp.q)) continue;
      const double h = 1e-6;
      if (fp.p - h <= -0.5 || fp.p + h >= 0.5) continue;
      const double u0 = U(fp.p, Branch::Lower);
      if (U(fp.p - h, Branch::Lower) < u0 && U(fp.p + h, Branch::Lower) < u0)
        barriers_.push_back(fp.p);
    }
  }

  const ModelSpec& spec() const { return s_; }
  double E_min() const { return range_.min; }
  double E_max() const { return range_.max; }
  const std::vector<double>& barriers() const { return barriers_; }
  const std::vector<meanfield::FixedPoint>& fixed_points() const { return fixed_points_; }

  double U(double p, Branch b) const {
    const auto u = meanfield::potentials(s_, p);
    return b == Branch::Lower ? u.minus : u.plus;
  }

  // (U+ - E)(E - U-) = v^2 r^2 - (E - eps p)^2 as a polynomial in p.
  numerics::Polynomial turning_polynomial(double E) const {
    const numerics::Polynomial lin{E, -s_.eps()};
    return v_ * v_ * minus_g_ - lin * lin;
  }

  double D(double p, double E) const {
    const double r = meanfield::radius(s_, p);
    const double d = E - s_.eps() * p;
    return v_ * v_ * r * r - d * d;
  }

  // cos q at (p, E)
  double cos_argument(double p, double E) const {
    return (E - s_.eps() * p) / (v_ * meanfield::radius(s_, p));
  }

  cplx cos_argument(cplx p, double E) const {
    const cplx x = 0.5 + p, y = 0.5 - p;
    const cplx r = meanfield::r0(s_) * std::exp(0.5 * s_.m() * std::log(x) + 0.5 * s_.n() * std::log(y));
    return (E - s_.eps() * p) / (v_ * r);
  }

  AngleQ angle_q(double p, double E) const {
    AngleQ out;
    const double r = meanfield::radius(s_, p);
    if (r == 0.0) {
      out.pole = true;
      out.allowed = (E == s_.eps() * p);
      return out;
    }
    const double a = (E - s_.eps() * p) / (v_ * r);
    if (std::abs(a) <= 1.0 + kArccosClamp) {
      out.value = std::acos(std::clamp(a, -1.0, 1.0));
    } else {
      out.allowed = false;
      out.value = std::acosh(std::abs(a));
    }
    return out;
  }

  // Measure of {q : H(p, q) <= E} at fixed p.
  double area_density(double p, double E) const {
    const double r = meanfield::radius(s_, p);
    const double d = E - s_.eps() * p;
    if (r == 0.0) return d >= 0 ? 2.0 * std::numbers::pi : 0.0;
    const double a = d / (v_ * r);
    if (a >= 1.0) return 2.0 * std::numbers::pi;
    if (a <= -1.0) return 0.0;
    return 2.0 * std::acos(-a);
  }

  std::vector<TurningPoint> real_turning_points(double E) const {
    std::vector<TurningPoint> tp;
    for (Branch b : {Branch::Lower, Branch::Upper}) {
      for (std::size_t k = 0; k + 1 < breaks_.size(); ++k) {
        const double lo = breaks_[k], hi = breaks_[k + 1];
        const double flo = U(lo, b) - E, fhi = U(hi, b) - E;
        if (flo == 0.0 && lo > -0.5) tp.push_back({lo, b});
        if (flo != 0.0 && fhi != 0.0 && (flo < 0) != (fhi < 0)) {
          const auto f = [&](double p) { return U(p, b) - E; };
          tp.push_back({numerics::bisect(f, lo, hi, flo), b});
        }
      }
    }
    std::sort(tp.begin(), tp.end(), [](const auto& x, const auto& y) { return x.p < y.p; });
    tp.erase(std::unique(tp.begin(), tp.end(),
                         [](const auto& x, const auto& y) { return x.p == y.p; }),
             tp.end());
    return tp;
  }

  std::vector<Interval> allowed_regions(double E, const std::vector<TurningPoint>& tp) const {
    std::vector<double> cuts{-0.5};
    for (const auto& t : tp) cuts.push_back(t.p);
    cuts.push_back(0.5);
    std::vector<Interval> out;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double a = cuts[k], b = cuts[k + 1];
      if (b <= a) continue;
      if (D(0.5 * (a + b), E) > 0) out.push_back({a, b});
    }
    return out;
  }

  // Components of {p : U-(p) <= E} as intervals.
  std::vector<Interval> lower_components(double E, const std::vector<TurningPoint>& tp) const {
    std::vector<double> cuts{-0.5};
    for (const auto& t : tp)
      if (t.branch == Branch::Lower) cuts.push_back(t.p);
    cuts.push_back(0.5);
    std::vector<Interval> out;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double a = cuts[k], b = cuts[k + 1];
      if (b <= a) continue;
      if (U(0.5 * (a + b), Branch::Lower) <= E) {
        if (!out.empty() && out.back().b == a) out.back().b = b;
        else out.push_back({a, b});
      }
    }
    return out;
  }

  // int_lo^hi A(p) dp with the integrand split at the turning points.
  double area_on(double E, double lo, double hi, const std::vector<TurningPoint>& tp) const {
    std::vector<double> cuts{lo};
    for (const auto& t : tp)
      if (t.p > lo && t.p < hi) cuts.push_back(t.p);
    cuts.push_back(hi);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double a = cuts[k], b = cuts[k + 1];
      if (b <= a) continue;
      const double mid = 0.5 * (a + b);
      if (D(mid, E) > 0) {
        total += adaptive([&](double p) { return area_density(p, E); }, a, b);
      } else {
        total += area_density(mid, E) * (b - a);
      }
    }
    return total;
  }

  // Phase-space area of {H <= E}; 0 at the band bottom, 2 pi at the top.
  double area(double E) const {
    if (E <= range_.min) return 0.0;
    if (E >= range_.max) return 2.0 * std::numbers::pi;
    return area_on(E, -0.5, 0.5, real_turning_points(E));
  }

  TurningPointSet turning_points(double E) const {
    TurningPointSet set;
    if (E < range_.min || E > range_.max) {
      set.out_of_band = true;
      return set;
    }
    set.real_points = real_turning_points(E);
    set.regions = allowed_regions(E, set.real_points);
    if (auto c = barrier_crossing(E, set.real_points)) set.complex_pair = c->pc;
    return set;
  }

  // T(E) = 2 sum over allowed regions of int dp / sqrt(D).
  PeriodResult period(double E) const {
    PeriodResult out;
    for (const auto& fp : fixed_points_) {
      if (fp.stability != meanfield::Stability::Center &&
          std::abs(E - fp.energy) <= 1e-12 * std::max(1.0, std::abs(E))) {
        out.divergent = true;
        out.T = std::numeric_limits<double>::infinity();
        return out;
      }
    }
    const auto tp = real_turning_points(E);
    const auto Dp = turning_polynomial(E);
    for (const auto& reg : allowed_regions(E, tp)) {
      const bool left_root = std::abs(D(reg.a, E)) <= 1e-9 * v_ * v_ && reg.a > -0.5;
      const bool right_root = std::abs(D(reg.b, E)) <= 1e-9 * v_ * v_ && reg.b < 0.5;
      if (!(left_root && right_root)) {
        // a region reaching a pole only happens exactly at a pole energy
        out.divergent = true;
        out.T = std::numeric_limits<double>::infinity();
        return out;
      }
      const auto Q = Dp.deflate(reg.a).deflate(reg.b);
      const auto g = [&](double p) { return 1.0 / std::sqrt(std::abs(Q(p))); };
      double prev = numerics::integrate_gauss_chebyshev(g, reg.a, reg.b, 64);
      double cur = prev;
      for (int n = 128; n <= (1 << 17); n *= 2) {
        cur = numerics::integrate_gauss_chebyshev(g, reg.a, reg.b, n);
        if (std::abs(cur - prev) <= 1e-11 * std::abs(cur)) break;
        prev = cur;
      }
      out.T += 2.0 * cur;
    }
    return out;
  }

  // ---- tunneling ----------------------------------------------------------

  struct Crossing {
    cplx pc;        // complex turning point, Im > 0
    Interval merged;  // component of {U- <= E} containing the barrier
  };

  // Complex turning point above the (single) barrier of U-, if E is above it
  // and the root can be identified as the continuation of the two real
  // U- turning points that merged there.
  std::optional<Crossing> barrier_crossing(double E, const std::vector<TurningPoint>& tp) const {
    if (barriers_.size() != 1) return std::nullopt;
    const double pb = barriers_[0];
    if (E <= U(pb, Branch::Lower)) return std::nullopt;
    std::optional<Interval> comp;
    for (const auto& c : lower_components(E, tp))
      if (c.a < pb && pb < c.b) comp = c;
    if (!comp) return std::nullopt;
    const auto Dp = turning_polynomial(E);
    const int deg = Dp.degree();
    if (deg < 2) return std::nullopt;
    Eigen::VectorXd coeffs(deg + 1);
    for (int k = 0; k <= deg; ++k) coeffs[k] = Dp[k];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(coeffs);
    std::optional<cplx> best;
    for (Eigen::Index k = 0; k < solver.roots().size(); ++k) {
      const cplx z = solver.roots()[k];
      if (z.imag() <= 0.0) continue;
      if (!best || std::abs(z - pb) < std::abs(*best - pb)) best = z;
    }
    if (!best) return std::nullopt;
    const auto dD = Dp.derivative();
    cplx z = *best;
    for (int it = 0; it < 20; ++it) {
      const cplx step = Dp(z) / dD(z);
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    if (!(z.imag() > 0.0) || z.real() <= comp->a || z.real() >= comp->b) return std::nullopt;
    // must be a root of U- = E, i.e. cos q = -1 there
    if (std::abs(cos_argument(z, E) + 1.0) > 1e-6) return std::nullopt;
    return Crossing{z, *comp};
  }

  // Actions of the two-well structure of U- at energy E, below the barrier
  // (two components) or above it (complex continuation). Empty when E does
  // not belong to such a regime.
  std::optional<std::pair<ActionSet, Regime>> double_well_actions(double E) const {
    const auto tp = real_turning_points(E);
    const auto comps = lower_components(E, tp);
    const double eta = s_.eta();
    ActionSet act;
    if (comps.size() == 2) {
      act.S_l = area_on(E, comps[0].a, comps[0].b, tp);
      act.S_r = area_on(E, comps[1].a, comps[1].b, tp);
      act.S = act.S_l + act.S_r;
      const double g0 = comps[0].b, g1 = comps[1].a;
      act.S_eps = adaptive([&](double p) {
                    const double a = cos_argument(p, E);
                    return a < -1.0 ? std::acosh(-a) : 0.0;
                  }, g0, g1) / (std::numbers::pi * eta);
      act.S_phi = phase_correction(act.S_eps);
      act.kappa = std::exp(-std::numbers::pi * act.S_eps);
      return std::pair{act, Regime::DoubleWellBelow};
    }
    if (comps.size() != 1) return std::nullopt;
    const auto cr = barrier_crossing(E, tp);
    if (!cr) return std::nullopt;
    const double x0 = cr->pc.real(), t0 = cr->pc.imag();
    const auto theta = [&](double t) { return std::acos(-cos_argument(cplx(x0, t), E)); };
    const double re = adaptive([&](double t) { return theta(t).real(); }, 0.0, t0);
    const double im = adaptive([&](double t) { return theta(t).imag(); }, 0.0, t0);
    act.S_eps = -2.0 * re / (std::numbers::pi * eta);
    if (act.S_eps < kContinuationLimit) return std::nullopt;
    act.S_l = area_on(E, cr->merged.a, x0, tp) - 2.0 * im;
    act.S_r = area_on(E, x0, cr->merged.b, tp) + 2.0 * im;
    act.S = act.S_l + act.S_r;
    act.S_phi = phase_correction(act.S_eps);
    act.kappa = std::exp(-std::numbers::pi * act.S_eps);
    return std::pair{act, Regime::AboveBarrier};
  }

  // Beyond this (negative) S_eps the continued condition is replaced by the
  // plain single-well rule; the two differ by less than S_phi there.
  static constexpr double kContinuationLimit = -3.0;

 private:
  template <class F>
  static double adaptive(const F& f, double a, double b) {
    double prev = numerics::integrate_sine_mapped(f, a, b, 32);
    for (int n = 64; n <= 4096; n *= 2) {
      const double cur = numerics::integrate_sine_mapped(f, a, b, n);
      if (std::abs(cur - prev) <= 1e-13 + 1e-12 * std::abs(cur)) return cur;
      prev = cur;
    }
    return prev;
  }

  ModelSpec s_;
  double v_;
  numerics::Polynomial minus_g_;
  std::vector<meanfield::FixedPoint> fixed_points_;
  std::vector<double> breaks_;
  std::vector<double> barriers_;
  meanfield::EnergyRange range_{};
};

// ---------------------------------------------------------------------------
// Counting phase: the number of levels below E is floor(phase/pi + 1/2).

struct PhaseInfo {
  double phase = 0.0;
  Regime regime = Regime::SingleWell;
  bool mirrored = false;
  ActionSet actions;
};

class Quantizer {
 public:
  explicit Quantizer(const ModelSpec& s)
      : s_(s), direct_(s), mirror_(s.with_eps(-s.eps())) {}

  const WkbModel& model() const { return direct_; }

  PhaseInfo phase(double E) const {
    const double eta = s_.eta();
    if (auto dw = direct_.double_well_actions(E)) {
      PhaseInfo out{two_well_phase(dw->first), dw->second, false, dw->first};
      return out;
    }
    // two maxima of U+: the same construction for -H, which is the model
    // with eps reversed, counted from the top of the band
    if (auto dw = mirror_.double_well_actions(-E)) {
      PhaseInfo out{std::numbers::pi * double(s_.dim()) - two_well_phase(dw->first),
                    dw->second, true, dw->first};
      return out;
    }
    PhaseInfo out;
    out.actions.S = direct_.area(E);
    out.phase = out.actions.S / (2.0 * eta);
    return out;
  }

  long count_below(double E) const {
    return long(std::floor(phase(E).phase / std::numbers::pi + 0.5));
  }

  SemiclassicalSpectrum quantize() const {
    const long dim = long(s_.dim());
    const double lo = direct_.E_min(), hi = direct_.E_max();
    std::vector<double> e(dim, hi);
    solve(lo, hi, 0, dim, e);
    SemiclassicalSpectrum out;
    for (long nu = 0; nu < dim; ++nu) {
      const auto ph = phase(e[nu]);
      out.levels.push_back({int(nu), e[nu], ph.regime, ph.mirrored});
    }
    return out;
  }

  // Plain S(E) = 2 pi eta (nu + 1/2) quantization.
  SemiclassicalSpectrum quantize_single() const {
    const long dim = long(s_.dim());
    SemiclassicalSpectrum out;
    const double eta = s_.eta();
    for (long nu = 0; nu < dim; ++nu) {
      const double target = 2.0 * std::numbers::pi * eta * (nu + 0.5);
      double a = direct_.E_min(), b = direct_.E_max();
      while (b - a > 1e-13 * std::max(1.0, std::abs(a))) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        if (direct_.area(mid) < target) a = mid; else b = mid;
      }
      out.levels.push_back({int(nu), 0.5 * (a + b), Regime::SingleWell, false});
    }
    return out;
  }

 private:
  double two_well_phase(const ActionSet& a) const {
    const double eta = s_.eta();
    const double t = a.kappa / (1.0 + std::sqrt(1.0 + a.kappa * a.kappa));
    const double alpha = a.S_l / (2.0 * eta) - 0.5 * a.S_phi;
    const double beta = a.S_r / (2.0 * eta) - 0.5 * a.S_phi;
    return lift_phase(alpha, t) + lift_phase(beta, t);
  }

  // Assigns e[k] for count_lo <= k < count_hi: the infimum of energies where
  // the count exceeds k.
  void solve(double lo, double hi, long count_lo, long count_hi, std::vector<double>& e) const {
    if (count_lo >= count_hi) return;
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-13 * std::max(1.0, std::abs(mid)) || mid <= lo || mid >= hi) {
      for (long k = count_lo; k < count_hi; ++k)
        if (k >= 0 && k < long(e.size())) e[k] = hi;
      return;
    }
    const long cm = std::clamp(count_below(mid), count_lo, count_hi);
    solve(lo, mid, count_lo, cm, e);
    solve(mid, hi, cm, count_hi, e);
  }

  ModelSpec s_;
  WkbModel direct_;
  WkbModel mirror_;
};

// ---------------------------------------------------------------------------
// Free-function entry points.

inline TurningPointSet turning_points(const ModelSpec& s, double E) {
  return WkbModel(s).turning_points(E);
}

inline AngleQ angle_q(const ModelSpec& s, double p, double E) {
  return WkbModel(s).angle_q(p, E);
}

inline double action_area(const ModelSpec& s, double E) { return WkbModel(s).area(E); }

inline PeriodResult period_T(const ModelSpec& s, double E) { return WkbModel(s).period(E); }

// true when U- has a single minimum and U+ a single maximum
inline bool is_single_well(const ModelSpec& s) {
  const int count = 2048;
  int minima = 0, maxima = 0;
  std::vector<meanfield::Potentials> u(count + 1);
  for (int k = 0; k <= count; ++k) u[k] = meanfield::potentials(s, -0.5 + double(k) / count);
  for (int k = 0; k <= count; ++k) {
    const bool lmin = (k == 0 || u[k].minus < u[k - 1].minus) && (k == count || u[k].minus < u[k + 1].minus);
    const bool lmax = (k == 0 || u[k].plus > u[k - 1].plus) && (k == count || u[k].plus > u[k + 1].plus);
    minima += lmin;
    maxima += lmax;
  }
  return minima <= 1 && maxima <= 1;
}

inline SemiclassicalSpectrum quantize_single_well(const ModelSpec& s) {
  if (!is_single_well(s))
    throw std::domain_error("quantize_single_well: potential has several wells, use quantize_double_well");
  return Quantizer(s).quantize_single();
}

inline SemiclassicalSpectrum quantize_double_well(const ModelSpec& s) {
  return Quantizer(s).quantize();
}

inline double tunneling_integral(const ModelSpec& s, double E) {
  const auto dw = WkbModel(s).double_well_actions(E);
  if (!dw) throw std::domain_error("tunneling_integral: no two-well structure at this energy");
  return dw->first.S_eps;
}

}  // namespace kummer::semiclassics

#endif  // KUMMER_SEMICLASSICS_HPP
