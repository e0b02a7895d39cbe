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

#ifndef KUMMER_NUMERICS_GAMMA_HPP
#define KUMMER_NUMERICS_GAMMA_HPP

#include <cmath>
#include <complex>
#include <numbers>

namespace kummer::numerics {

// log Gamma for complex argument, Lanczos g=7 with nine terms. The imaginary
// part is the continuous branch along lines Re z = const >= 1/2 (it is built
// from principal logs of quantities with positive real part), which is what
// phase integrals need; it is not reduced mod 2*pi.
inline std::complex<double> log_gamma(std::complex<double> z) {
  static constexpr double kCoef[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection; only used for completeness, the callers stay at Re z = 1/2
    const std::complex<double> pi(std::numbers::pi, 0.0);
    return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  std::complex<double> x = kCoef[0];
  for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + double(i));
  const std::complex<double> t = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(x);
}

}  // namespace kummer::numerics

#endif  // KUMMER_NUMERICS_GAMMA_HPP
