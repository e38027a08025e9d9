// SPDX-License-Identifier: Apache-2.0
#include "rdmm/theory/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "rdmm/core/error.hpp"
#include "rdmm/core/parallel.hpp"
#include "rdmm/core/types.hpp"

namespace rdmm {

std::size_t ResolventDensity::failures() const {
  return static_cast<std::size_t>(std::count(converged.begin(), converged.end(), 0));
}

namespace {

struct Map {
  std::span<const double> xi;
  double c;      // sigma^2 / kappa
  double shift;  // kappa - 1

  // F(G) and dF/dG
  std::pair<Complex, Complex> eval(Complex z, Complex g) const {
    const Complex a = shift + z * g;
    Complex f = 0.0, df = 0.0;
    for (double x : xi) {
      const Complex inv = 1.0 / (z - c * a * x);
      f += inv;
      df += inv * inv * (c * x * z);
    }
    const double n = static_cast<double>(xi.size());
    return {f / n, df / n};
  }

  double residual(Complex z, Complex g) const { return std::abs(eval(z, g).first - g) / std::max(1.0, std::abs(g)); }
};

}  // namespace

ResolventDensity resolvent_density(std::span<const double> xi_eigs, const BipartiteDims& dims,
                                   std::span<const double> grid, const ResolventOptions& opt) {
  require(xi_eigs.size() == dims.n(), "resolvent: need n eigenvalues of xi");
  for (double x : xi_eigs)
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("resolvent: xi eigenvalues must be finite and >= 0");
  if (!(opt.damping > 0.0 && opt.damping <= 1.0)) throw DomainError("resolvent: damping must lie in (0, 1]");

  const double q = 1.0 / std::sqrt(dims.kappa());
  const double lplus = dims.sigma2() * (1.0 + q) * (1.0 + q);
  ResolventDensity out;
  out.eps = opt.eps > 0.0 ? opt.eps : 1e-4 * lplus;
  out.grid.assign(grid.begin(), grid.end());
  out.density.assign(grid.size(), 0.0);
  out.converged.assign(grid.size(), 0);
  out.residual.assign(grid.size(), 0.0);
  const Map map{xi_eigs, dims.sigma2() / dims.kappa(), dims.kappa() - 1.0};
  std::vector<Complex> sol(grid.size());

  parallel_for(grid.size(), opt.workers, [&](std::size_t i) {
    const Complex z(grid[i], -out.eps);
    Complex g = 1.0 / z;
    for (std::size_t it = 0; it < opt.max_iter; ++it) {
      const Complex f = map.eval(z, g).first;
      const bool done = std::abs(f - g) < opt.tolerance * std::max(1.0, std::abs(g));
      g = (1.0 - opt.damping) * g + opt.damping * f;
      if (done) break;
    }
    sol[i] = g;
    out.residual[i] = map.residual(z, g);
    out.converged[i] = out.residual[i] < opt.tolerance && g.imag() >= 0.0;
  });

  // Newton on F(G) - G, warm-started from the nearest converged neighbour.
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (out.converged[i]) continue;
    const Complex z(grid[i], -out.eps);
    std::vector<Complex> starts;
    if (i > 0 && out.converged[i - 1]) starts.push_back(sol[i - 1]);
    starts.push_back(1.0 / z);
    for (Complex g : starts) {
      for (int it = 0; it < 200; ++it) {
        const auto [f, df] = map.eval(z, g);
        const Complex step = (f - g) / (df - 1.0);
        g -= step;
        if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(g))) break;
      }
      const double res = map.residual(z, g);
      if (res < opt.tolerance && g.imag() >= 0.0 && std::isfinite(g.real())) {
        sol[i] = g;
        out.residual[i] = res;
        out.converged[i] = 1;
        break;
      }
    }
  }

  for (std::size_t i = 0; i < grid.size(); ++i) out.density[i] = sol[i].imag() / std::numbers::pi;
  return out;
}

}  // namespace rdmm
