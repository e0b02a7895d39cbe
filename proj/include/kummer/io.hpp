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

#ifndef KUMMER_IO_HPP
#define KUMMER_IO_HPP

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "kummer/meanfield.hpp"
#include "kummer/model.hpp"
#include "kummer/quantum.hpp"
#include "kummer/semiclassics.hpp"
#include "kummer/sweep.hpp"

namespace kummer::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// 17 significant digits: enough to read back the identical double.
inline std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline double parse_double(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("bad number in CSV: " + s);
  return v;
}

inline const char* to_string(meanfield::Stability s) {
  switch (s) {
    case meanfield::Stability::Center: return "center";
    case meanfield::Stability::Saddle: return "saddle";
    default: return "degenerate";
  }
}

inline const char* to_string(meanfield::Location l) {
  switch (l) {
    case meanfield::Location::NorthPole: return "north_pole";
    case meanfield::Location::SouthPole: return "south_pole";
    default: return "interior";
  }
}

inline const char* to_string(meanfield::BifurcationKind k) {
  return k == meanfield::BifurcationKind::SaddleNode ? "saddle_node" : "transcritical";
}

inline const char* to_string(semiclassics::Regime r) {
  switch (r) {
    case semiclassics::Regime::DoubleWellBelow: return "double_well_below";
    case semiclassics::Regime::AboveBarrier: return "above_barrier";
    default: return "single_well";
  }
}

inline void write_preamble(std::ostream& os, const ModelSpec& s) {
  os << "# schema=" << kSchemaVersion << "\n";
  os << "# m=" << s.m() << " n=" << s.n() << " N=" << s.N() << " eps=" << fmt(s.eps())
     << " v=" << fmt(s.v()) << " eta=" << fmt(s.eta()) << "\n";
}

// ---- CSV ------------------------------------------------------------------

inline void write_spectrum_csv(std::ostream& os, const quantum::SpectrumResult& r) {
  write_preamble(os, r.spec);
  os << "index,raw,scaled\n";
  for (std::size_t i = 0; i < r.raw_eigenvalues.size(); ++i)
    os << i << ',' << fmt(r.raw_eigenvalues[i]) << ',' << fmt(r.scaled_eigenvalues[i]) << '\n';
}

namespace detail {
inline std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}
}  // namespace detail

// Reads the raw and scaled columns written by write_spectrum_csv.
inline void read_spectrum_csv(std::istream& is, std::vector<double>& raw, std::vector<double>& scaled) {
  std::string line;
  bool schema_ok = false, header = false;
  raw.clear();
  scaled.clear();
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# schema=", 0) == 0) schema_ok = std::stoi(line.substr(9)) == kSchemaVersion;
      continue;
    }
    if (!header) {
      header = true;
      continue;
    }
    const auto cells = detail::split(line);
    if (cells.size() != 3) throw std::runtime_error("spectrum CSV: expected 3 columns");
    raw.push_back(parse_double(cells[1]));
    scaled.push_back(parse_double(cells[2]));
  }
  if (!schema_ok) throw std::runtime_error("spectrum CSV: missing or unsupported schema");
}

inline void write_fixed_points_csv(std::ostream& os, const ModelSpec& s,
                                   const std::vector<meanfield::FixedPoint>& fps) {
  write_preamble(os, s);
  os << "p,q,sx,energy,stability,rate,location\n";
  for (const auto& fp : fps)
    os << fmt(fp.p) << ',' << fmt(fp.q) << ',' << fmt(fp.sx) << ',' << fmt(fp.energy) << ','
       << to_string(fp.stability) << ',' << fmt(fp.rate) << ',' << to_string(fp.location) << '\n';
}

inline void write_bifurcations_csv(std::ostream& os, const ModelSpec& s,
                                   const std::vector<meanfield::BifurcationEvent>& ev) {
  write_preamble(os, s);
  os << "eps_critical,kind,p,energy\n";
  for (const auto& e : ev)
    os << fmt(e.eps_critical) << ',' << to_string(e.kind) << ',' << fmt(e.p) << ',' << fmt(e.energy) << '\n';
}

// Long format: one row per eigenvalue and per fixed point.
inline void write_sweep_csv(std::ostream& os, const ModelSpec& tmpl,
                            const std::vector<quantum::SweepRow>& rows) {
  write_preamble(os, tmpl);
  os << "eps,kind,index,energy,stability\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.scaled_eigenvalues.size(); ++i)
      os << fmt(row.eps) << ",level," << i << ',' << fmt(row.scaled_eigenvalues[i]) << ",\n";
    for (std::size_t i = 0; i < row.fixed_points.size(); ++i)
      os << fmt(row.eps) << ",fixed_point," << i << ',' << fmt(row.fixed_points[i].energy) << ','
         << to_string(row.fixed_points[i].stability) << '\n';
  }
}

inline void write_levels_csv(std::ostream& os, const ModelSpec& s,
                             const semiclassics::SemiclassicalSpectrum& sc,
                             const std::vector<double>* exact = nullptr) {
  write_preamble(os, s);
  os << "nu,energy,regime,mirrored" << (exact ? ",exact,deviation" : "") << '\n';
  for (const auto& l : sc.levels) {
    os << l.nu << ',' << fmt(l.energy) << ',' << to_string(l.regime) << ',' << (l.mirrored ? 1 : 0);
    if (exact) {
      const double e = exact->at(std::size_t(l.nu));
      os << ',' << fmt(e) << ',' << fmt(l.energy - e);
    }
    os << '\n';
  }
}

inline void write_dos_csv(std::ostream& os, const ModelSpec& s, const quantum::DosHistogram& h,
                          const std::vector<double>& t_over_2pi) {
  write_preamble(os, s);
  os << "bin_lo,bin_hi,center,density,T_over_2pi\n";
  for (std::size_t k = 0; k < h.bins(); ++k)
    os << fmt(h.bin_edges[k]) << ',' << fmt(h.bin_edges[k + 1]) << ',' << fmt(h.center(k)) << ','
       << fmt(h.density[k]) << ',' << fmt(k < t_over_2pi.size() ? t_over_2pi[k] : NAN) << '\n';
}

inline void write_trajectory_csv(std::ostream& os, const ModelSpec& s,
                                 const meanfield::TrajectoryRecord& rec) {
  write_preamble(os, s);
  os << "# drift_H=" << fmt(rec.drift_H) << " drift_C=" << fmt(rec.drift_C) << '\n';
  os << "t,sx,sy,sz\n";
  for (std::size_t i = 0; i < rec.times.size(); ++i)
    os << fmt(rec.times[i]) << ',' << fmt(rec.states[i][0]) << ',' << fmt(rec.states[i][1]) << ','
       << fmt(rec.states[i][2]) << '\n';
}

inline void write_mesh_csv(std::ostream& os, const ModelSpec& s,
                           const std::vector<std::array<double, 3>>& mesh, int n_theta, int n_p) {
  write_preamble(os, s);
  os << "# grid: " << n_p << " rows in p (-1/2 .. 1/2, outer) x " << n_theta
     << " columns in theta ([0, 2pi), inner)\n";
  os << "sx,sy,sz\n";
  for (const auto& v : mesh) os << fmt(v[0]) << ',' << fmt(v[1]) << ',' << fmt(v[2]) << '\n';
}

// ---- JSON -----------------------------------------------------------------

inline json to_json(const ModelSpec& s) {
  return {{"m", s.m()}, {"n", s.n()}, {"N", s.N()}, {"eps", s.eps()}, {"v", s.v()},
          {"eta", s.eta()}, {"dim", s.dim()}};
}

inline ModelSpec model_from_json(const json& j) {
  return ModelSpec(j.at("m").get<int>(), j.at("n").get<int>(), j.at("N").get<std::int64_t>(),
                   j.at("eps").get<double>(), j.at("v").get<double>());
}

inline json to_json(const quantum::SpectrumResult& r) {
  return {{"schema", kSchemaVersion}, {"model", to_json(r.spec)},
          {"raw_eigenvalues", r.raw_eigenvalues}, {"scaled_eigenvalues", r.scaled_eigenvalues}};
}

inline quantum::SpectrumResult spectrum_from_json(const json& j) {
  return {model_from_json(j.at("model")), j.at("scaled_eigenvalues").get<std::vector<double>>(),
          j.at("raw_eigenvalues").get<std::vector<double>>()};
}

inline json to_json(const meanfield::FixedPoint& fp) {
  json j{{"p", fp.p}, {"sx", fp.sx}, {"energy", fp.energy}, {"stability", to_string(fp.stability)},
         {"rate", fp.rate}, {"location", to_string(fp.location)}};
  j["q"] = std::isnan(fp.q) ? json(nullptr) : json(fp.q);
  return j;
}

inline json to_json(const meanfield::BifurcationEvent& e) {
  return {{"eps_critical", e.eps_critical}, {"kind", to_string(e.kind)}, {"p", e.p}, {"energy", e.energy}};
}

inline json to_json(const semiclassics::SemiclassicalSpectrum& sc) {
  json levels = json::array();
  for (const auto& l : sc.levels)
    levels.push_back({{"nu", l.nu}, {"energy", l.energy}, {"regime", to_string(l.regime)},
                      {"mirrored", l.mirrored}});
  return levels;
}

inline json to_json(const quantum::DosHistogram& h) {
  return {{"bin_edges", h.bin_edges}, {"density", h.density}};
}

template <class T>
json array_json(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

}  // namespace kummer::io

#endif  // KUMMER_IO_HPP
