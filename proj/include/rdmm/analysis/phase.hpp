// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string_view>

namespace rdmm {

enum class Phase { Gaussian, TracyWidom };

std::string_view phase_name(Phase p);

/// Gaussian and affine TW2 fits by moment matching, classified by the
/// smaller KS distance.
struct PhaseVerdict {
  Phase classification = Phase::Gaussian;
  double ks_gauss = 0.0;
  double ks_tw = 0.0;
  double gauss_mu = 0.0;
  double gauss_sigma = 0.0;
  /// sample = tw_location + tw_scale * s, s ~ TW2
  double tw_location = 0.0;
  double tw_scale = 0.0;
};

/// Needs at least 200 samples.
PhaseVerdict phase_classify(std::span<const double> lambda1_samples);

}  // namespace rdmm
