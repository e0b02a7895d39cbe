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

#ifndef KUMMER_SWEEP_HPP
#define KUMMER_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "kummer/meanfield.hpp"
#include "kummer/model.hpp"
#include "kummer/quantum.hpp"

namespace kummer {

// Worker count: explicit value if positive, else KUMMER_JOBS, else the
// hardware concurrency.
inline int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KUMMER_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, count) on `jobs` threads. Each index is visited
// once; results must be written to per-index slots so order never depends on
// scheduling. The first exception is rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t count, int jobs, const Body& body) {
  jobs = std::max(1, std::min<int>(jobs, int(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Evenly spaced grid including both ends.
inline std::vector<double> linspace(double a, double b, int count) {
  if (count < 1) throw std::invalid_argument("linspace: count must be >= 1");
  std::vector<double> x(count);
  for (int k = 0; k < count; ++k) x[k] = count == 1 ? a : a + (b - a) * k / (count - 1);
  return x;
}

namespace quantum {

struct SweepRow {
  double eps;
  std::vector<double> scaled_eigenvalues;
  std::vector<meanfield::FixedPoint> fixed_points;
};

inline std::vector<SweepRow> sweep_epsilon(const ModelSpec& tmpl, const std::vector<double>& eps_grid,
                                           int jobs = 1) {
  if (eps_grid.empty()) throw std::invalid_argument("sweep_epsilon: empty eps grid");
  std::vector<SweepRow> rows(eps_grid.size());
  parallel_for(eps_grid.size(), jobs, [&](std::size_t i) {
    const ModelSpec s = tmpl.with_eps(eps_grid[i]);
    rows[i] = {eps_grid[i], eigen_spectrum(s).scaled_eigenvalues, meanfield::find_fixed_points(s)};
  });
  return rows;
}

}  // namespace quantum
}  // namespace kummer

#endif  // KUMMER_SWEEP_HPP
