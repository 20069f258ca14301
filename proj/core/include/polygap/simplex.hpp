// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace polygap {

struct SimplexOptions {
  std::size_t max_iterations = 2000;
  double size_tolerance = 1e-9;  // stop when the simplex characteristic size drops below this
  double initial_step = 0.25;
};

struct SimplexOutcome {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free Nelder-Mead minimization (GSL nmsimplex2).
SimplexOutcome minimize_simplex(const Objective& objective, std::span<const double> start,
                                const SimplexOptions& options);

}  // namespace polygap
