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

#ifndef KUMMER_PLOT_HPP
#define KUMMER_PLOT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace kummer::plot {

// Minimal SVG figure: one axes box, fixed pixel size, linear data mapping.
// Output is a pure function of the calls made, so files are reproducible.
class Figure {
 public:
  Figure(std::string title, std::string xlabel, std::string ylabel, int width = 720, int height = 480)
      : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)),
        w_(width), h_(height) {}

  void polyline(const std::vector<double>& x, const std::vector<double>& y,
                const std::string& color, double stroke = 1.5) {
    items_.push_back({Kind::Line, x, y, color, stroke});
    extend(x, y);
  }

  void scatter(const std::vector<double>& x, const std::vector<double>& y,
               const std::string& color, double radius = 1.2) {
    items_.push_back({Kind::Dots, x, y, color, radius});
    extend(x, y);
  }

  // Bars from y = 0 over consecutive edges.
  void histogram(const std::vector<double>& edges, const std::vector<double>& heights,
                 const std::string& color) {
    items_.push_back({Kind::Bars, edges, heights, color, 0.0});
    extend(edges, heights);
    extend({edges.front()}, {0.0});
  }

  void vline(double x, const std::string& color) {
    vlines_.push_back({x, color});
  }

  void set_xrange(double a, double b) { xr_[0] = a; xr_[1] = b; }
  void set_yrange(double a, double b) { yr_[0] = a; yr_[1] = b; }

  std::string svg() const {
    const double L = 70, R = 20, T = 36, B = 50;
    const double pw = w_ - L - R, ph = h_ - T - B;
    double x0 = xr_[0], x1 = xr_[1], y0 = yr_[0], y1 = yr_[1];
    if (!(x1 > x0)) x0 -= 0.5, x1 += 0.5;
    if (!(y1 > y0)) y0 -= 0.5, y1 += 0.5;
    const double padx = 0.02 * (x1 - x0), pady = 0.04 * (y1 - y0);
    x0 -= padx; x1 += padx; y0 -= pady; y1 += pady;
    const auto X = [&](double x) { return L + (x - x0) / (x1 - x0) * pw; };
    const auto Y = [&](double y) { return T + (y1 - y) / (y1 - y0) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
       << "\" viewBox=\"0 0 " << w_ << ' ' << h_ << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<clipPath id=\"plot\"><rect x=\"" << num(L) << "\" y=\"" << num(T) << "\" width=\"" << num(pw)
       << "\" height=\"" << num(ph) << "\"/></clipPath>\n";
    os << "<g clip-path=\"url(#plot)\">\n";
    for (const auto& it : items_) {
      if (it.kind == Kind::Bars) {
        for (std::size_t k = 0; k + 1 < it.x.size() && k < it.y.size(); ++k) {
          const double top = Y(it.y[k]), base = Y(0.0);
          os << "<rect x=\"" << num(X(it.x[k])) << "\" y=\"" << num(std::min(top, base))
             << "\" width=\"" << num(X(it.x[k + 1]) - X(it.x[k])) << "\" height=\""
             << num(std::abs(base - top)) << "\" fill=\"" << it.color << "\" fill-opacity=\"0.45\"/>\n";
        }
      } else if (it.kind == Kind::Line) {
        os << "<polyline fill=\"none\" stroke=\"" << it.color << "\" stroke-width=\"" << num(it.size)
           << "\" points=\"";
        for (std::size_t k = 0; k < it.x.size(); ++k) {
          if (!std::isfinite(it.y[k])) continue;
          os << num(X(it.x[k])) << ',' << num(Y(it.y[k])) << ' ';
        }
        os << "\"/>\n";
      } else {
        for (std::size_t k = 0; k < it.x.size(); ++k)
          os << "<circle cx=\"" << num(X(it.x[k])) << "\" cy=\"" << num(Y(it.y[k])) << "\" r=\""
             << num(it.size) << "\" fill=\"" << it.color << "\"/>\n";
      }
    }
    for (const auto& [x, c] : vlines_)
      os << "<line x1=\"" << num(X(x)) << "\" y1=\"" << num(T) << "\" x2=\"" << num(X(x)) << "\" y2=\""
         << num(T + ph) << "\" stroke=\"" << c << "\" stroke-dasharray=\"4 3\"/>\n";
    os << "</g>\n";
    os << "<rect x=\"" << num(L) << "\" y=\"" << num(T) << "\" width=\"" << num(pw) << "\" height=\""
       << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
      const double xv = x0 + padx + (x1 - x0 - 2 * padx) * k / 4;
      const double yv = y0 + pady + (y1 - y0 - 2 * pady) * k / 4;
      os << "<text x=\"" << num(X(xv)) << "\" y=\"" << num(T + ph + 18)
         << "\" font-size=\"12\" text-anchor=\"middle\">" << num(xv) << "</text>\n";
      os << "<text x=\"" << num(L - 6) << "\" y=\"" << num(Y(yv) + 4)
         << "\" font-size=\"12\" text-anchor=\"end\">" << num(yv) << "</text>\n";
    }
    os << "<text x=\"" << num(L + pw / 2) << "\" y=\"22\" font-size=\"15\" text-anchor=\"middle\">"
       << escape(title_) << "</text>\n";
    os << "<text x=\"" << num(L + pw / 2) << "\" y=\"" << num(h_ - 10)
       << "\" font-size=\"13\" text-anchor=\"middle\">" << escape(xlabel_) << "</text>\n";
    os << "<text x=\"16\" y=\"" << num(T + ph / 2) << "\" font-size=\"13\" text-anchor=\"middle\" "
       << "transform=\"rotate(-90 16 " << num(T + ph / 2) << ")\">" << escape(ylabel_) << "</text>\n";
    os << "</svg>\n";
    return os.str();
  }

 private:
  enum class Kind { Line, Dots, Bars };
  struct Item {
    Kind kind;
    std::vector<double> x, y;
    std::string color;
    double size;
  };

  void extend(const std::vector<double>& x, const std::vector<double>& y) {
    for (double v : x)
      if (std::isfinite(v)) xr_[0] = std::min(xr_[0], v), xr_[1] = std::max(xr_[1], v);
    for (double v : y)
      if (std::isfinite(v)) yr_[0] = std::min(yr_[0], v), yr_[1] = std::max(yr_[1], v);
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
  }

  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '<') out += "&lt;";
      else if (c == '>') out += "&gt;";
      else if (c == '&') out += "&amp;";
      else out += c;
    }
    return out;
  }

  std::string title_, xlabel_, ylabel_;
  int w_, h_;
  std::vector<Item> items_;
  std::vector<std::pair<double, std::string>> vlines_;
  double xr_[2] = {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  double yr_[2] = {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
};

}  // namespace kummer::plot

#endif  // KUMMER_PLOT_HPP
