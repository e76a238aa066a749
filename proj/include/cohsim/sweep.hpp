#pragma once

#include <cstdint>
#include <future>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cohsim/errors.hpp"
#include "cohsim/fock.hpp"

namespace cohsim {

/// Closed parameter interval. A resolution-r grid places r evenly spaced
/// points on [lo, hi] including both endpoints (r = 1 gives {lo}).
struct Axis {
  std::string name;
  double lo;
  double hi;
};

std::vector<double> axis_grid(const Axis& axis, std::size_t resolution);

struct SweepResult {
  std::vector<std::string> axis_names;
  std::vector<std::size_t> best_indices;
  std::vector<double> best_params;
  double best_value = 0.0;
  std::size_t grid_resolution = 0;
  std::uint64_t evaluations = 0;
};

namespace detail {

/// Lexicographic scan over [first_lo, first_hi) x full remaining axes.
/// The objective sees grid indices, parameter values, and the lowest axis
/// whose value changed since the previous call (0 on the first call), so
/// it can reuse partial work across the inner loops.
template <class F>
void scan_chunk(const std::vector<std::vector<double>>& grids, std::size_t first_lo,
                std::size_t first_hi, F& objective, double& best_value,
                std::vector<std::size_t>& best_idx) {
  const std::size_t n = grids.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> values(n);
  idx[0] = first_lo;
  for (std::size_t k = 0; k < n; ++k) values[k] = grids[k][idx[k]];

  bool have_best = false;
  std::size_t changed_from = 0;
  while (true) {
    const double v = objective(std::span<const std::size_t>(idx),
                               std::span<const double>(values), changed_from);
    if (!have_best || v > best_value) {
      best_value = v;
      best_idx = idx;
      have_best = true;
    }
    // Odometer step, last axis fastest.
    std::size_t k = n;
    while (k > 0) {
      --k;
      const std::size_t limit = (k == 0) ? first_hi : grids[k].size();
      if (++idx[k] < limit) {
        values[k] = grids[k][idx[k]];
        changed_from = k;
        break;
      }
      if (k == 0) return;
      idx[k] = 0;
      values[k] = grids[k][0];
    }
  }
}

}  // namespace detail

/// Exhaustive evaluation over the product grid; returns the maximizer,
/// ties broken by the lexicographically smallest index tuple. The
/// objective must be pure; it is copied per worker, and the reduction is
/// deterministic regardless of scheduling. threads = 0 picks the
/// hardware default.
template <class F>
SweepResult grid_search(std::span<const Axis> axes, std::size_t resolution, F objective,
                        unsigned threads = 0) {
  if (axes.empty()) throw ConfigError("grid_search needs at least one axis");
  if (resolution < 1) throw ConfigError("grid resolution must be at least 1");

  std::vector<std::vector<double>> grids;
  grids.reserve(axes.size());
  std::uint64_t total = 1;
  for (const Axis& axis : axes) {
    grids.push_back(axis_grid(axis, resolution));
    if (total > (std::uint64_t(1) << 62) / resolution) {
      throw ConfigError("grid too large");
    }
    total *= resolution;
  }

  unsigned worker_count = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (worker_count == 0) worker_count = 1;
  worker_count = static_cast<unsigned>(
      std::min<std::uint64_t>(worker_count, grids[0].size()));
  if (total < 100000) worker_count = 1;

  struct Local {
    double value = 0.0;
    std::vector<std::size_t> idx;
  };

  std::vector<Local> locals(worker_count);
  {
    // Contiguous slabs of the first axis, one per worker.
    std::vector<std::future<void>> futures;
    const std::size_t first_size = grids[0].size();
    const std::size_t chunk = (first_size + worker_count - 1) / worker_count;
    for (unsigned w = 0; w < worker_count; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(first_size, lo + chunk);
      if (lo >= hi) continue;
      futures.push_back(std::async(std::launch::async, [&, lo, hi, w]() {
        F local_objective = objective;
        detail::scan_chunk(grids, lo, hi, local_objective, locals[w].value, locals[w].idx);
      }));
    }
    for (auto& f : futures) f.get();
  }

  SweepResult result;
  result.grid_resolution = resolution;
  result.evaluations = total;
  bool have = false;
  for (const Local& local : locals) {
    if (local.idx.empty()) continue;
    // Strictly-greater keeps the earliest slab on ties, which is the
    // lexicographically smallest tuple.
    if (!have || local.value > result.best_value) {
      result.best_value = local.value;
      result.best_indices = local.idx;
      have = true;
    }
  }
  for (const Axis& axis : axes) result.axis_names.push_back(axis.name);
  result.best_params.reserve(axes.size());
  for (std::size_t k = 0; k < axes.size(); ++k) {
    result.best_params.push_back(grids[k][result.best_indices[k]]);
  }
  return result;
}

/// Win-probability sweep of the shared-ancilla scheme over the four
/// observable angles (theta_a, phi_a, theta_b, phi_b).
SweepResult sweep_scheme_one(Statistics stats, std::size_t resolution, unsigned threads = 0);

/// Win-probability sweep of the single-particle scheme over
/// (alpha, delta, theta_a, phi_a, theta_b, phi_b), where the source is
/// s0 = cos(alpha), s1 = sin(alpha) e^{i delta}. Uniform in the mixing
/// angle, so the balanced source sits exactly on odd-resolution grids.
SweepResult sweep_scheme_two(std::size_t resolution, unsigned threads = 0);

std::vector<Axis> scheme_one_axes();
std::vector<Axis> scheme_two_axes();

}  // namespace cohsim
