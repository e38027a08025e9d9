// SPDX-License-Identifier: Apache-2.0
#include "rdmm/analysis/phase.hpp"

#include <cmath>

#include "rdmm/analysis/density.hpp"
#include "rdmm/analysis/tracy_widom.hpp"
#include "rdmm/core/error.hpp"

namespace rdmm {

std::string_view phase_name(Phase p) { return p == Phase::Gaussian ? "Gaussian" : "TracyWidom"; }

PhaseVerdict phase_classify(std::span<const double> x) {
  if (x.size() < 200) throw DomainError("phase_classify: need at least 200 samples");
  const GaussianFit fit = gaussian_fit(x);
  if (!(fit.sigma > 0.0)) throw DomainError("phase_classify: samples have zero spread");
  PhaseVerdict v;
  v.gauss_mu = fit.mu;
  v.gauss_sigma = fit.sigma;
  v.tw_scale = fit.sigma / std::sqrt(kTw2Variance);
  v.tw_location = fit.mu - v.tw_scale * kTw2Mean;
  v.ks_gauss = ks_distance(x, [&](double y) { return normal_cdf((y - fit.mu) / fit.sigma); });
  v.ks_tw = ks_distance(x, [&](double y) { return tw2_cdf((y - v.tw_location) / v.tw_scale); });
  v.classification = v.ks_tw < v.ks_gauss ? Phase::TracyWidom : Phase::Gaussian;
  return v;
}

}  // namespace rdmm
