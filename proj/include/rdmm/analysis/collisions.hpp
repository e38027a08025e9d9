// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "rdmm/sim/monte_carlo.hpp"

namespace rdmm {

/// First k zeros of g_t = J1(2t)/t, i.e. j_{1,i} / 2.
std::vector<double> collision_times(std::size_t k);

/// <lambda_1> - <lambda_2> per time point.
std::vector<double> gap_trace(const RunRecord& run);

struct GapMinimum {
  std::size_t index = 0;
  double time = 0.0;
  double gap = 0.0;
};

GapMinimum gap_minimum(const RunRecord& run);

}  // namespace rdmm
