// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace rdmm {

inline constexpr double kTw2Mean = -1.7710868074;
inline constexpr double kTw2Variance = 0.8131947928;

/// F2(s) from the shipped table on [-10, 6] (monotone cubic interpolation),
/// 0 below and 1 above.
double tw2_cdf(double s);

/// Inverse of tw2_cdf for u in (0, 1).
double tw2_quantile(double u);

}  // namespace rdmm
