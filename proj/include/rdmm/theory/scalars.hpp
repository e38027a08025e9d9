// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rdmm/core/types.hpp"

namespace rdmm {

/// Per-spectrum form factors f_t = (1/D) sum exp(-i E t), f_2t, and
/// v_t = conj(f_t^2) f_2t + f_t^2 conj(f_2t).
struct SpectralScalars {
  Complex f_t{1.0, 0.0};
  Complex f_2t{1.0, 0.0};
  double v_t = 2.0;
};

/// GUE averages: g_t = <f_t>, g_2t, and h2_t = <|f_t|^2> taken as g_t^2.
struct EnsembleScalars {
  double g_t = 1.0;
  double g_2t = 1.0;
  double h2_t = 1.0;
};

}  // namespace rdmm
