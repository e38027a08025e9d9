// SPDX-License-Identifier: Apache-2.0
#include "rdmm/sim/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rdmm/core/error.hpp"
#include "rdmm/core/linalg.hpp"
#include "rdmm/core/parallel.hpp"
#include "rdmm/core/sampling.hpp"
#include "rdmm/sim/rdmm.hpp"
#include "rdmm/theory/theory.hpp"

namespace rdmm {

std::vector<double> linear_grid(double tmin, double tmax, std::size_t steps) {
  require(steps >= 1, "time grid: steps must be >= 1");
  if (!std::isfinite(tmin) || !std::isfinite(tmax)) throw DomainError("time grid: bounds must be finite");
  if (steps == 1) return {tmin};
  std::vector<double> t(steps);
  for (std::size_t k = 0; k < steps; ++k)
    t[k] = tmin + (tmax - tmin) * static_cast<double>(k) / static_cast<double>(steps - 1);
  return t;
}

namespace {

struct Realization {
  std::vector<double> purity;
  std::vector<std::vector<double>> eigs;
};

}  // namespace

RunRecord monte_carlo(const CoefficientMatrix& a0, std::span<const double> times, std::size_t realizations,
                      std::uint64_t seed, const McOptions& opt) {
  if (times.empty()) throw DomainError("monte_carlo: time grid is empty");
  require(realizations >= 1, "monte_carlo: realizations must be >= 1");
  const std::size_t nt = times.size();
  const std::size_t n = a0.dims.n();

  std::vector<Realization> runs(realizations);
  parallel_for(realizations, opt.workers, [&](std::size_t r) {
    RngStream rng(seed, r);
    Realization& out = runs[r];
    out.purity.resize(nt);
    out.eigs.resize(nt);
    sample_trajectory(opt.backend, a0, times, rng, [&](std::size_t b, const CoefficientMatrix& a) {
      const HermitianMatrix rho = reduced_density(a);
      out.purity[b] = purity(rho);
      auto ev = eigvalsh(rho);
      std::reverse(ev.begin(), ev.end());
      out.eigs[b] = std::move(ev);
    });
  });

  RunRecord rec;
  rec.dims = a0.dims;
  rec.times.assign(times.begin(), times.end());
  rec.realizations = realizations;
  rec.seed = seed;
  rec.backend = resolve_backend(opt.backend, a0.dims.total());
  rec.purity_mean.assign(nt, 0.0);
  rec.purity_se.assign(nt, 0.0);
  rec.eig_mean.assign(nt, std::vector<double>(n, 0.0));
  rec.lambda1.assign(nt, std::vector<double>(realizations));
  rec.hist_max = opt.hist_max;
  if (opt.hist_bins > 0) {
    rec.hist_counts.assign(nt, std::vector<std::uint64_t>(opt.hist_bins, 0));
    rec.hist_overflow.assign(nt, 0);
  }
  if (opt.keep_spectra) rec.spectra.assign(nt, std::vector<std::vector<double>>(realizations));

  const double inv_r = 1.0 / static_cast<double>(realizations);
  for (std::size_t b = 0; b < nt; ++b) {
    double sum = 0.0;
    for (std::size_t r = 0; r < realizations; ++r) sum += runs[r].purity[b];
    const double mean = sum * inv_r;
    double ss = 0.0;
    for (std::size_t r = 0; r < realizations; ++r) ss += (runs[r].purity[b] - mean) * (runs[r].purity[b] - mean);
    rec.purity_mean[b] = mean;
    rec.purity_se[b] = realizations > 1 ? std::sqrt(ss / static_cast<double>(realizations - 1) * inv_r) : 0.0;

    for (std::size_t r = 0; r < realizations; ++r) {
      const auto& ev = runs[r].eigs[b];
      for (std::size_t k = 0; k < n; ++k) rec.eig_mean[b][k] += ev[k] * inv_r;
      rec.lambda1[b][r] = ev[0];
      rec.max_trace_error = std::max(rec.max_trace_error, std::abs(std::accumulate(ev.begin(), ev.end(), 0.0) - 1.0));
      if (opt.hist_bins > 0) {
        for (std::size_t k = opt.bulk_only ? 1 : 0; k < n; ++k) {
          const double x = std::max(ev[k], 0.0) / opt.hist_max * static_cast<double>(opt.hist_bins);
          if (x >= static_cast<double>(opt.hist_bins))
            ++rec.hist_overflow[b];
          else
            ++rec.hist_counts[b][static_cast<std::size_t>(x)];
        }
      }
      if (opt.keep_spectra) rec.spectra[b][r] = ev;
    }
  }
  return rec;
}

RunRecord monte_carlo(const BipartiteDims& dims, const InitialStateSpec& spec, std::span<const double> times,
                      std::size_t realizations, std::uint64_t seed, const McOptions& opt) {
  return monte_carlo(make_initial_state(spec, dims), times, realizations, seed, opt);
}

SpectralPurityAverage spectral_average_purity(const BipartiteDims& dims, std::span<const double> times,
                                              std::size_t spectra, std::uint64_t seed, unsigned workers) {
  if (times.empty()) throw DomainError("spectral average: time grid is empty");
  require(spectra >= 2, "spectral average: need at least 2 spectra");
  const std::size_t nt = times.size();
  std::vector<std::vector<double>> p(spectra, std::vector<double>(nt));
  parallel_for(spectra, workers, [&](std::size_t s) {
    RngStream rng(seed, s);
    const auto e = sample_gue_spectrum(dims.total(), rng);
    for (std::size_t b = 0; b < nt; ++b) p[s][b] = purity_exact(empirical_spectral_scalars(e, times[b]), dims);
  });
  auto stats = [&](auto value) {
    double sum = 0.0;
    for (std::size_t s = 0; s < spectra; ++s) sum += value(s);
    const double mean = sum / static_cast<double>(spectra);
    double ss = 0.0;
    for (std::size_t s = 0; s < spectra; ++s) ss += (value(s) - mean) * (value(s) - mean);
    return std::pair{mean, std::sqrt(ss / static_cast<double>(spectra - 1) / static_cast<double>(spectra))};
  };
  SpectralPurityAverage out;
  out.mean.resize(nt);
  out.se.resize(nt);
  for (std::size_t b = 0; b < nt; ++b) std::tie(out.mean[b], out.se[b]) = stats([&](std::size_t s) { return p[s][b]; });
  std::tie(out.time_average_mean, out.time_average_se) = stats([&](std::size_t s) {
    return std::accumulate(p[s].begin(), p[s].end(), 0.0) / static_cast<double>(nt);
  });
  return out;
}

}  // namespace rdmm
