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

#ifndef KUMMER_CLI_HPP
#define KUMMER_CLI_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kummer/io.hpp"
#include "kummer/meanfield.hpp"
#include "kummer/model.hpp"
#include "kummer/plot.hpp"
#include "kummer/quantum.hpp"
#include "kummer/semiclassics.hpp"
#include "kummer/sweep.hpp"
#include "kummer/verify.hpp"

namespace kummer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --help: the text goes to stdout and the exit code is 0.
struct HelpRequested : UsageError {
  using UsageError::UsageError;
};

struct RunConfig {
  std::string command;
  int m = 1;
  int n = 1;
  std::int64_t N = 0;  // 0: not given
  double eps = 0.0;
  double v = 1.0;
  std::string out_dir = ".";
  bool plot = false;
  int jobs = 0;
  // sweep
  double eps_min = -1.0;
  double eps_max = 1.0;
  int eps_steps = 101;
  // dos
  int bins = 200;
  // trajectory
  double p0 = 0.0;
  double theta0 = 0.0;
  double t_end = 100.0;
  double dt = 1e-3;
  int stride = 100;
  // kummer-mesh
  int n_theta = 48;
  int n_p = 65;
  // quantize
  std::string method = "auto";
  std::string config_file;  // consumed before parsing

  // Model of the run; N defaults to m*n for purely classical commands.
  ModelSpec model() const {
    return ModelSpec(m, n, N > 0 ? N : std::int64_t(m) * n, eps, v);
  }
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"spectrum", "fixed-points", "bifurcations", "sweep", "trajectory",
                                          "quantize", "dos", "kummer-mesh", "verify"};
  return c;
}

inline const char* describe(const std::string& cmd) {
  if (cmd == "spectrum") return "exact eigenvalues, raw and scaled by eta";
  if (cmd == "fixed-points") return "mean-field fixed points and their stability";
  if (cmd == "bifurcations") return "critical eps values where fixed points appear or vanish";
  if (cmd == "sweep") return "scaled spectrum and fixed-point energies over an eps grid";
  if (cmd == "trajectory") return "integrate the mean-field flow on the Kummer shape";
  if (cmd == "quantize") return "semiclassical levels compared with the exact ones";
  if (cmd == "dos") return "eigenvalue histogram against the classical period T/2pi";
  if (cmd == "kummer-mesh") return "vertex grid of the Kummer shape surface";
  if (cmd == "verify") return "run the invariant checks and report pass/fail";
  return "";
}

inline bool needs_particle_number(const std::string& cmd) {
  return cmd == "spectrum" || cmd == "sweep" || cmd == "quantize" || cmd == "dos" || cmd == "verify";
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// key = value lines; '#' starts a comment.
inline std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return kv;
}

inline void build_app(CLI::App& app, RunConfig& c) {
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  for (const auto& name : commands()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->callback([&c, name] { c.command = name; });
    sub->add_option("--m", c.m, "particles of type A per conversion")->required();
    sub->add_option("--n", c.n, "particles of type B per conversion")->required();
    auto* N = sub->add_option("--N", c.N, "total particle number (multiple of m*n)");
    if (needs_particle_number(name)) N->required();
    sub->add_option("--eps", c.eps, "energy parameter eps");
    sub->add_option("--v", c.v, "conversion strength v");
    sub->add_option("--out", c.out_dir, "output directory");
    sub->add_flag("--plot", c.plot, "also write an SVG rendering");
    sub->add_option("--config", c.config_file, "key = value file; flags override it");
    if (name == "sweep") {
      sub->add_option("--eps-min", c.eps_min);
      sub->add_option("--eps-max", c.eps_max);
      sub->add_option("--eps-steps", c.eps_steps);
      sub->add_option("--jobs", c.jobs, "worker threads (default: KUMMER_JOBS or cores)");
    }
    if (name == "dos") sub->add_option("--bins", c.bins);
    if (name == "trajectory") {
      sub->add_option("--p0", c.p0, "initial sz on the surface");
      sub->add_option("--theta0", c.theta0, "initial azimuth");
      sub->add_option("--t-end", c.t_end);
      sub->add_option("--dt", c.dt);
      sub->add_option("--stride", c.stride, "record every k-th step");
    }
    if (name == "kummer-mesh") {
      sub->add_option("--n-theta", c.n_theta);
      sub->add_option("--n-p", c.n_p);
    }
    if (name == "quantize")
      sub->add_option("--method", c.method, "auto | single")->check(CLI::IsMember({"auto", "single"}));
  }
}

}  // namespace detail

// Parses argv (argv[1] is the command). A --config file contributes
// `--key=value` arguments placed before the command-line ones, so explicit
// flags win.
inline RunConfig parse_config(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
  }
  RunConfig c;
  CLI::App app{"Exact, mean-field and semiclassical spectra of n:m conversion Hamiltonians", "kummer"};
  detail::build_app(app, c);
  if (!config_path.empty()) {
    if (args.empty()) throw UsageError("missing command");
    CLI::App* sub = app.get_subcommand_no_throw(args[0]);
    if (!sub) throw UsageError("unknown command '" + args[0] + "'");
    std::vector<std::string> injected;
    for (const auto& [key, value] : detail::read_config_file(config_path)) {
      if (key == "config" || !sub->get_option_no_throw("--" + key))
        throw UsageError("unknown config key '" + key + "' for command " + args[0]);
      injected.push_back("--" + key + "=" + value);
    }
    args.insert(args.begin() + 1, injected.begin(), injected.end());
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const CLI::App* sub = args.empty() ? nullptr : app.get_subcommand_no_throw(args[0]);
    const std::string help = sub ? sub->help() : app.help();
    if (dynamic_cast<const CLI::CallForHelp*>(&e)) throw HelpRequested(help);
    throw UsageError(std::string(e.what()) + "\n\n" + help);
  }
  try {
    (void)c.model();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace detail {

struct Outputs {
  std::filesystem::path dir;
  std::string stem;

  std::filesystem::path path(const std::string& ext) const { return dir / (stem + ext); }

  void write(const std::string& ext, const std::string& text) const {
    std::ofstream f(path(ext), std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path(ext).string());
    f << text;
  }
};

inline std::string title_of(const ModelSpec& s) {
  std::ostringstream os;
  os << "(m,n)=(" << s.m() << "," << s.n() << ") N=" << s.N() << " v=" << s.v();
  return os.str();
}

inline void potential_plot(const ModelSpec& s, const std::vector<meanfield::FixedPoint>& fps,
                           const Outputs& out) {
  plot::Figure fig("U-(p), U+(p), eps=" + io::fmt(s.eps()) + "  " + title_of(s), "p", "energy");
  std::vector<double> p, lo, hi;
  for (int k = 0; k <= 400; ++k) {
    p.push_back(-0.5 + k / 400.0);
    const auto u = meanfield::potentials(s, p.back());
    lo.push_back(u.minus);
    hi.push_back(u.plus);
  }
  fig.polyline(p, lo, "#1f4e9c");
  fig.polyline(p, hi, "#b22222");
  std::vector<double> cx, cy, sx, sy;
  for (const auto& fp : fps) {
    auto& X = fp.stability == meanfield::Stability::Center ? cx : sx;
    auto& Y = fp.stability == meanfield::Stability::Center ? cy : sy;
    X.push_back(fp.p);
    Y.push_back(fp.energy);
  }
  fig.scatter(cx, cy, "#2e8b57", 4);
  fig.scatter(sx, sy, "black", 4);
  out.write(".svg", fig.svg());
}

}  // namespace detail

inline int run(const RunConfig& c, std::ostream& log = std::cout) {
  namespace fs = std::filesystem;
  const ModelSpec s = c.model();
  detail::Outputs out{c.out_dir, c.command};
  fs::create_directories(out.dir);
  std::ostringstream csv;

  if (c.command == "spectrum") {
    const auto r = quantum::eigen_spectrum(s);
    io::write_spectrum_csv(csv, r);
    out.write(".csv", csv.str());
    out.write(".json", io::to_json(r).dump(2) + "\n");
    if (c.plot) {
      plot::Figure fig("scaled eigenvalues  eps=" + io::fmt(s.eps()) + "  " + detail::title_of(s), "index", "eta E");
      std::vector<double> idx(r.scaled_eigenvalues.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = double(i);
      fig.scatter(idx, r.scaled_eigenvalues, "#1f4e9c", 2);
      out.write(".svg", fig.svg());
    }
    log << "dim=" << s.dim() << " min=" << io::fmt(r.scaled_eigenvalues.front())
        << " max=" << io::fmt(r.scaled_eigenvalues.back()) << "\n";
  } else if (c.command == "fixed-points") {
    const auto fps = meanfield::find_fixed_points(s);
    io::write_fixed_points_csv(csv, s, fps);
    out.write(".csv", csv.str());
    out.write(".json", io::json{{"model", io::to_json(s)}, {"fixed_points", io::array_json(fps)}}.dump(2) + "\n");
    if (c.plot) detail::potential_plot(s, fps, out);
    for (const auto& fp : fps)
      log << io::to_string(fp.location) << " p=" << io::fmt(fp.p) << " E=" << io::fmt(fp.energy) << " "
          << io::to_string(fp.stability) << "\n";
  } else if (c.command == "bifurcations") {
    const auto ev = meanfield::classify_bifurcations(s);
    io::write_bifurcations_csv(csv, s, ev);
    out.write(".csv", csv.str());
    out.write(".json", io::json{{"model", io::to_json(s)}, {"events", io::array_json(ev)}}.dump(2) + "\n");
    for (const auto& e : ev)
      log << io::to_string(e.kind) << " eps_c=" << io::fmt(e.eps_critical) << " p=" << io::fmt(e.p) << "\n";
  } else if (c.command == "sweep") {
    if (c.eps_steps < 1) throw UsageError("--eps-steps must be >= 1");
    const auto grid = linspace(c.eps_min, c.eps_max, c.eps_steps);
    const auto rows = quantum::sweep_epsilon(s, grid, resolve_jobs(c.jobs));
    io::write_sweep_csv(csv, s, rows);
    out.write(".csv", csv.str());
    io::json j{{"model", io::to_json(s)}, {"rows", io::json::array()}};
    for (const auto& row : rows)
      j["rows"].push_back({{"eps", row.eps}, {"scaled_eigenvalues", row.scaled_eigenvalues},
                           {"fixed_points", io::array_json(row.fixed_points)}});
    out.write(".json", j.dump(2) + "\n");
    if (c.plot) {
      plot::Figure fig("eta E vs eps  " + detail::title_of(s), "eps", "eta E");
      std::vector<double> x, y, fx, fy;
      for (const auto& row : rows) {
        for (double e : row.scaled_eigenvalues) x.push_back(row.eps), y.push_back(e);
        for (const auto& fp : row.fixed_points) fx.push_back(row.eps), fy.push_back(fp.energy);
      }
      fig.scatter(x, y, "#1f4e9c", 0.8);
      fig.scatter(fx, fy, "#d62728", 1.2);
      out.write(".svg", fig.svg());
    }
    log << rows.size() << " eps points written\n";
  } else if (c.command == "trajectory") {
    const auto st = meanfield::surface_point(s, c.p0, c.theta0);
    const auto rec = meanfield::integrate_trajectory(s, st, c.t_end, c.dt, c.stride);
    io::write_trajectory_csv(csv, s, rec);
    out.write(".csv", csv.str());
    out.write(".json", io::json{{"model", io::to_json(s)}, {"drift_H", rec.drift_H}, {"drift_C", rec.drift_C},
                                {"steps", rec.times.size()}}.dump(2) + "\n");
    if (c.plot) {
      plot::Figure fig("trajectory sz(t)  " + detail::title_of(s), "t", "sz");
      std::vector<double> z;
      for (const auto& v : rec.states) z.push_back(v[2]);
      fig.polyline(rec.times, z, "#1f4e9c");
      out.write(".svg", fig.svg());
    }
    log << "drift_H=" << io::fmt(rec.drift_H) << " drift_C=" << io::fmt(rec.drift_C) << "\n";
  } else if (c.command == "quantize") {
    const auto sc = c.method == "single" ? semiclassics::quantize_single_well(s)
                                         : semiclassics::quantize_double_well(s);
    const auto exact = quantum::eigen_spectrum(s).scaled_eigenvalues;
    io::write_levels_csv(csv, s, sc, &exact);
    out.write(".csv", csv.str());
    out.write(".json", io::json{{"model", io::to_json(s)}, {"levels", io::to_json(sc)}, {"exact", exact}}.dump(2) + "\n");
    double worst = 0.0;
    for (const auto& l : sc.levels) worst = std::max(worst, std::abs(l.energy - exact[std::size_t(l.nu)]));
    if (c.plot) {
      plot::Figure fig("semiclassical (red) vs exact (blue)  " + detail::title_of(s), "nu", "eta E");
      std::vector<double> nu, es;
      for (const auto& l : sc.levels) nu.push_back(l.nu), es.push_back(l.energy);
      fig.scatter(nu, exact, "#1f4e9c", 3);
      fig.scatter(nu, es, "#d62728", 1.5);
      out.write(".svg", fig.svg());
    }
    log << sc.levels.size() << " levels, max |semiclassical - exact| = " << io::fmt(worst) << "\n";
  } else if (c.command == "dos") {
    if (c.bins < 2) throw UsageError("--bins must be >= 2");
    const auto r = quantum::eigen_spectrum(s);
    const auto h = quantum::dos_histogram(r, c.bins);
    const semiclassics::WkbModel wkb(s);
    std::vector<double> rho(h.bins());
    for (std::size_t k = 0; k < h.bins(); ++k) {
      const auto T = wkb.period(h.center(k));
      rho[k] = T.divergent ? NAN : T.T / (2.0 * std::numbers::pi);
    }
    io::write_dos_csv(csv, s, h, rho);
    out.write(".csv", csv.str());
    out.write(".json", io::json{{"model", io::to_json(s)}, {"histogram", io::to_json(h)},
                                {"T_over_2pi", rho}}.dump(2) + "\n");
    if (c.plot) {
      plot::Figure fig("density of states  eps=" + io::fmt(s.eps()) + "  " + detail::title_of(s), "eta E", "density");
      fig.histogram(h.bin_edges, h.density, "#1f4e9c");
      std::vector<double> x, y;
      const int fine = 600;
      for (int k = 0; k <= fine; ++k) {
        const double E = wkb.E_min() + (wkb.E_max() - wkb.E_min()) * (k + 0.5) / (fine + 1);
        const auto T = wkb.period(E);
        x.push_back(E);
        y.push_back(T.divergent ? NAN : T.T / (2.0 * std::numbers::pi));
      }
      double ymax = 0.0;
      for (double d : h.density) ymax = std::max(ymax, d);
      // clip the logarithmic peaks so the bars stay readable
      for (double& yy : y)
        if (yy > 1.3 * ymax) yy = 1.3 * ymax;
      fig.polyline(x, y, "#d62728");
      fig.set_yrange(0.0, 1.3 * ymax);
      for (double e : meanfield::saddle_energies(s)) fig.vline(e, "gray");
      out.write(".svg", fig.svg());
    }
    log << "dim=" << s.dim() << " bins=" << h.bins() << "\n";
  } else if (c.command == "kummer-mesh") {
    const auto mesh = meanfield::kummer_mesh(s, c.n_theta, c.n_p);
    io::write_mesh_csv(csv, s, mesh, c.n_theta, c.n_p);
    out.write(".csv", csv.str());
    if (c.plot) {
      plot::Figure fig("Kummer shape profile  " + detail::title_of(s), "sz", "+- r(sz)");
      std::vector<double> p, r, mr;
      for (int k = 0; k <= 400; ++k) {
        p.push_back(-0.5 + k / 400.0);
        r.push_back(meanfield::radius(s, p.back()));
        mr.push_back(-r.back());
      }
      fig.polyline(p, r, "#1f4e9c");
      fig.polyline(p, mr, "#1f4e9c");
      out.write(".svg", fig.svg());
    }
    log << mesh.size() << " vertices\n";
  } else if (c.command == "verify") {
    const auto checks = run_invariant_suite(s);
    bool all = true;
    io::json j = io::json::array();
    for (const auto& ch : checks) {
      all = all && ch.pass;
      char line[160];
      std::snprintf(line, sizeof line, "%-4s %-48s %12.3e  (tol %.1e)\n", ch.pass ? "PASS" : "FAIL",
                    ch.name.c_str(), ch.value, ch.tolerance);
      log << line;
      j.push_back({{"name", ch.name}, {"value", ch.value}, {"tolerance", ch.tolerance}, {"pass", ch.pass}});
    }
    out.write(".json", io::json{{"model", io::to_json(s)}, {"checks", j}}.dump(2) + "\n");
    return all ? kExitOk : kExitFailure;
  } else {
    throw UsageError("unknown command '" + c.command + "'");
  }
  return kExitOk;
}

inline int main_entry(int argc, const char* const* argv) {
  RunConfig c;
  try {
    c = parse_config(argc, argv);
  } catch (const HelpRequested& e) {
    std::cout << e.what();
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return run(c);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << c.command << ": " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace kummer::cli

#endif  // KUMMER_CLI_HPP
