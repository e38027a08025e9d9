// SPDX-License-Identifier: Apache-2.0
#include "rdmm/sim/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdmm/core/error.hpp"
#include "rdmm/core/kernels.hpp"
#include "rdmm/sim/rdmm.hpp"

namespace rdmm {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Dense: return "dense";
    case Backend::Frame: return "frame";
    default: return "auto";
  }
}

Backend parse_backend(std::string_view s) {
  if (s == "auto") return Backend::Auto;
  if (s == "dense") return Backend::Dense;
  if (s == "frame") return Backend::Frame;
  throw DomainError("unknown backend '" + std::string(s) + "'");
}

Backend resolve_backend(Backend b, std::size_t total_dim) {
  if (b != Backend::Auto) return b;
  return total_dim <= kDenseAutoLimit ? Backend::Dense : Backend::Frame;
}

std::size_t frame_block_size(std::size_t total_dim, double tau_max) {
  const double want = std::ceil(1.5 * std::abs(tau_max)) + 48.0;
  return std::min<std::size_t>(total_dim, static_cast<std::size_t>(want));
}

ComplexMatrix semidefinite_cholesky(const ComplexMatrix& g, double tol) {
  const std::size_t k = g.rows();
  require(g.cols() == k, "semidefinite_cholesky: matrix must be square");
  std::vector<double> resid(k);
  for (std::size_t b = 0; b < k; ++b) resid[b] = g(b, b).real();
  std::vector<bool> used(k, false);
  std::vector<std::vector<Complex>> rows;
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t p = k;
    double best = tol;
    for (std::size_t b = 0; b < k; ++b)
      if (!used[b] && resid[b] > best) {
        best = resid[b];
        p = b;
      }
    if (p == k) break;
    used[p] = true;
    std::vector<Complex> r(k, 0.0);
    const double d = std::sqrt(resid[p]);
    r[p] = d;
    for (std::size_t b = 0; b < k; ++b) {
      if (used[b]) continue;
      Complex s = g(p, b);
      for (std::size_t i = 0; i < rows.size(); ++i) s -= std::conj(rows[i][p]) * rows[i][b];
      r[b] = s / d;
      resid[b] -= std::norm(r[b]);
    }
    rows.push_back(std::move(r));
  }
  ComplexMatrix out(rows.size(), k);
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy(rows[i].begin(), rows[i].end(), out.row(i).begin());
  return out;
}

namespace {

void dense_trajectory(const CoefficientMatrix& a0, std::span<const double> times, RngStream& rng,
                      const StateVisitor& visit) {
  const HermitianMatrix h = sample_gue(a0.dims.total(), rng);
  const Propagator prop(h, a0);
  for (std::size_t b = 0; b < times.size(); ++b) visit(b, prop.at(times[b]));
}

void frame_trajectory(const CoefficientMatrix& a0, std::span<const double> times, RngStream& rng,
                      const StateVisitor& visit) {
  const std::size_t dim = a0.dims.total();
  // Column 0 is t = 0 so that the first frame vector is psi(0) itself.
  std::vector<double> t(times.size() + 1, 0.0);
  std::copy(times.begin(), times.end(), t.begin() + 1);
  const auto [lo, hi] = std::minmax_element(t.begin(), t.end());
  const SpectralMeasure mu = sample_gue_spectral_measure(dim, frame_block_size(dim, *hi - *lo), rng);

  const std::size_t k = t.size();
  ComplexMatrix g(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    g(a, a) = 1.0;  // alpha(0)
    for (std::size_t b = a + 1; b < k; ++b) {
      g(a, b) = kernels::phase_sum(mu.weights, mu.nodes, t[b] - t[a]);
      g(b, a) = std::conj(g(a, b));
    }
  }
  const ComplexMatrix r = semidefinite_cholesky(g);
  const std::size_t rank = r.rows();

  ComplexMatrix frame(rank, dim);
  std::copy(a0.a.flat().begin(), a0.a.flat().end(), frame.row(0).begin());
  for (std::size_t j = 1; j < rank; ++j) {
    auto v = frame.row(j);
    for (auto& z : v) z = rng.complex_normal(1.0);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < j; ++i) {
        const Complex c = kernels::dotc(frame.row(i), v);
        kernels::axpy(-c, frame.row(i), v);
      }
    kernels::scale(1.0 / std::sqrt(kernels::norm2(v)), v);
  }

  ComplexMatrix a(a0.dims.n(), a0.dims.m());
  for (std::size_t b = 1; b < k; ++b) {
    std::fill(a.flat().begin(), a.flat().end(), Complex{});
    for (std::size_t j = 0; j < rank; ++j)
      if (r(j, b) != Complex{}) kernels::axpy(r(j, b), frame.row(j), a.flat());
    visit(b - 1, CoefficientMatrix{a0.dims, a});
  }
}

}  // namespace

void sample_trajectory(Backend backend, const CoefficientMatrix& a0, std::span<const double> times, RngStream& rng,
                       const StateVisitor& visit) {
  for (double t : times)
    if (!std::isfinite(t)) throw DomainError("trajectory: times must be finite");
  if (times.empty()) return;
  if (resolve_backend(backend, a0.dims.total()) == Backend::Dense)
    dense_trajectory(a0, times, rng, visit);
  else
    frame_trajectory(a0, times, rng, visit);
}

}  // namespace rdmm
