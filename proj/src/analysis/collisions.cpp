// SPDX-License-Identifier: Apache-2.0
#include "rdmm/analysis/collisions.hpp"

#include "rdmm/core/error.hpp"
#include "rdmm/core/special.hpp"

namespace rdmm {

std::vector<double> collision_times(std::size_t k) {
  require(k >= 1, "collision_times: k must be >= 1");
  std::vector<double> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = 0.5 * bessel_j1_zero(static_cast<int>(i + 1));
  return t;
}

std::vector<double> gap_trace(const RunRecord& run) {
  std::vector<double> gap(run.times.size());
  for (std::size_t b = 0; b < gap.size(); ++b) {
    require(run.eig_mean[b].size() >= 2, "gap_trace: need at least two eigenvalue means");
    gap[b] = run.eig_mean[b][0] - run.eig_mean[b][1];
  }
  return gap;
}

GapMinimum gap_minimum(const RunRecord& run) {
  const auto gap = gap_trace(run);
  require(!gap.empty(), "gap_minimum: empty run");
  GapMinimum m{0, run.times[0], gap[0]};
  for (std::size_t b = 1; b < gap.size(); ++b)
    if (gap[b] < m.gap) m = {b, run.times[b], gap[b]};
  return m;
}

}  // namespace rdmm
