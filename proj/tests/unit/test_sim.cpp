// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rdmm/analysis/density.hpp"
#include "rdmm/core/error.hpp"
#include "rdmm/core/linalg.hpp"
#include "rdmm/core/sampling.hpp"
#include "rdmm/sim/monte_carlo.hpp"
#include "rdmm/sim/rdmm.hpp"
#include "rdmm/sim/trajectory.hpp"
#include "rdmm/theory/theory.hpp"

using namespace rdmm;

namespace {

double frob2(const ComplexMatrix& a) {
  double s = 0;
  for (const auto& z : a.flat()) s += std::norm(z);
  return s;
}

std::vector<double> descending_eigs(const HermitianMatrix& rho) {
  auto e = eigvalsh(rho);
  std::sort(e.rbegin(), e.rend());
  return e;
}

}  // namespace

TEST_CASE("dims validation") {
  CHECK_THROWS_AS(BipartiteDims(1, 4), DomainError);
  CHECK_THROWS_AS(BipartiteDims(4, 3), DomainError);
  BipartiteDims d(4, 8);
  CHECK(d.total() == 32);
  CHECK(d.kappa() == 2.0);
  CHECK(d.sigma2() == 0.25);
}

TEST_CASE("initial states") {
  BipartiteDims d(4, 4);
  auto p = make_initial_state(InitialStateSpec::product(), d);
  CHECK(p.a(0, 0) == Complex(1.0));
  CHECK(frob2(p.a) == 1.0);
  CHECK(is_product_state(p));
  auto rho = reduced_density(p);
  const auto e = descending_eigs(rho);
  CHECK(e[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(e[1]) < 1e-14);

  auto two = make_initial_state(InitialStateSpec::two_schmidt(0.75), d);
  CHECK(two.a(0, 0).real() == doctest::Approx(std::sqrt(0.25)));
  CHECK(two.a(1, 1).real() == doctest::Approx(std::sqrt(0.75)));
  CHECK_FALSE(is_product_state(two));
  const auto e2 = descending_eigs(reduced_density(two));
  CHECK(e2[0] == doctest::Approx(0.75));
  CHECK(e2[1] == doctest::Approx(0.25));
  CHECK(std::abs(e2[2]) < 1e-14);
  CHECK(purity(reduced_density(two)) == doctest::Approx(0.625));

  const auto w = schmidt_weights(InitialStateSpec::linear(), 32);
  REQUIRE(w.size() == 32);
  for (std::size_t j = 0; j < 32; ++j) CHECK(w[j] == doctest::Approx(2.0 * (j + 1) / (32.0 * 33.0)));
  CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(schmidt_weights(InitialStateSpec::custom({0.5, 0.4}), 4), DomainError);
  CHECK_THROWS_AS(schmidt_weights(InitialStateSpec::custom({0.2, 0.2, 0.2, 0.2, 0.2}), 4), DomainError);
  CHECK_THROWS_AS(make_coefficients(d, ComplexMatrix(4, 4)), DomainError);
}

TEST_CASE("maximally entangled state") {
  BipartiteDims d(4, 4);
  ComplexMatrix a(4, 4);
  for (std::size_t j = 0; j < 4; ++j) a(j, j) = 0.5;
  auto a0 = make_coefficients(d, a);
  auto rho = reduced_density(a0);
  for (double e : eigvalsh(rho)) CHECK(e == doctest::Approx(0.25));
  CHECK(purity(rho) == doctest::Approx(0.25));
}

TEST_CASE("evolution is unitary and trivial at t = 0") {
  BipartiteDims d(3, 5);
  RngStream r(5);
  auto h = sample_gue(d.total(), r);
  auto a0 = make_initial_state(InitialStateSpec::two_schmidt(0.3), d);
  Propagator prop(h, a0);
  CHECK(max_abs_diff(prop.at(0.0).a, a0.a) < 1e-13);
  for (double t : {0.1, 1.0, 7.5, 300.0}) {
    auto at = evolve(h, a0, t);
    CHECK(std::abs(frob2(at.a) - 1.0) < 1e-10);
    CHECK(std::abs(reduced_density(at).trace() - 1.0) < 1e-10);
    CHECK(max_abs_diff(at.a, prop.at(t).a) < 1e-12);
  }
}

TEST_CASE("diagonal Hamiltonian only adds phases") {
  BipartiteDims d(2, 3);
  std::vector<double> en{0.3, -1.2, 0.7, 2.0, -0.4, 1.1};
  auto h = HermitianMatrix::diagonal(en);
  RngStream r(6);
  ComplexMatrix a = sample_ginibre(2, 3, 1.0, r);
  a *= Complex(1.0 / std::sqrt(frob2(a)));
  auto a0 = make_coefficients(d, a);
  const double t = 1.3;
  auto at = evolve(h, a0, t);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t nu = 0; nu < 3; ++nu) {
      const Complex expect = a(j, nu) * std::exp(Complex(0.0, -en[j * 3 + nu] * t));
      CHECK(std::abs(at.a(j, nu) - expect) < 1e-13);
    }
}

TEST_CASE("empirical spectral scalars") {
  std::vector<double> e{0.3, -0.2, 1.5};
  auto s0 = empirical_spectral_scalars(e, 0.0);
  CHECK(std::abs(s0.f_t - 1.0) < 1e-15);
  CHECK(std::abs(s0.f_2t - 1.0) < 1e-15);
  CHECK(s0.v_t == doctest::Approx(2.0));
  std::vector<double> pm{1.0, -1.0};
  for (double t : {0.4, 2.2}) CHECK(empirical_spectral_scalars(pm, t).f_t.real() == doctest::Approx(std::cos(t)));
  std::vector<double> flat(5, 0.8);
  for (double t : {0.4, 9.0}) CHECK(std::abs(empirical_spectral_scalars(flat, t).f_t) == doctest::Approx(1.0));
}

TEST_CASE("semidefinite Cholesky") {
  RngStream r(8);
  ComplexMatrix b = sample_ginibre(3, 6, 1.0, r);  // rank 3 Gram of 6 columns
  ComplexMatrix g = b.adjoint() * b;
  auto rr = semidefinite_cholesky(g);
  CHECK(rr.rows() == 3);
  CHECK(max_abs_diff(rr.adjoint() * rr, g) < 1e-12);
  ComplexMatrix id = ComplexMatrix::identity(4);
  auto ri = semidefinite_cholesky(id);
  CHECK(ri.rows() == 4);
  CHECK(max_abs_diff(ri, id) < 1e-15);
}

TEST_CASE("backend selection") {
  CHECK(resolve_backend(Backend::Auto, 512) == Backend::Dense);
  CHECK(resolve_backend(Backend::Auto, 513) == Backend::Frame);
  CHECK(resolve_backend(Backend::Dense, 4096) == Backend::Dense);
  CHECK(parse_backend("frame") == Backend::Frame);
  CHECK(backend_name(Backend::Dense) == "dense");
  CHECK_THROWS_AS(parse_backend("gpu"), DomainError);
  CHECK(frame_block_size(100, 10.0) == 63);
  CHECK(frame_block_size(40, 10.0) == 40);
}

TEST_CASE("frame trajectories keep the norm and the t = 0 state") {
  BipartiteDims d(8, 8);
  auto a0 = make_initial_state(InitialStateSpec::two_schmidt(0.4), d);
  const auto times = linear_grid(0.0, 3.0, 7);
  RngStream r(9);
  std::size_t seen = 0;
  sample_trajectory(Backend::Frame, a0, times, r, [&](std::size_t b, const CoefficientMatrix& a) {
    CHECK(b == seen++);
    CHECK(std::abs(frob2(a.a) - 1.0) < 1e-10);
    if (b == 0) CHECK(max_abs_diff(a.a, a0.a) < 1e-12);
  });
  CHECK(seen == times.size());
}

TEST_CASE("dense and frame backends sample the same law") {
  BipartiteDims d(3, 4);
  const std::vector<double> times{0.0, 0.4, 1.0, 1.9, 4.0, 15.0};
  McOptions dense{Backend::Dense};
  McOptions frame{Backend::Frame};
  dense.keep_spectra = frame.keep_spectra = true;
  const std::size_t rz = 3000;
  auto a0 = make_initial_state(InitialStateSpec::two_schmidt(0.25), d);
  auto rd = monte_carlo(a0, times, rz, 11, dense);
  auto rf = monte_carlo(a0, times, rz, 12, frame);
  for (std::size_t b = 0; b < times.size(); ++b) {
    CAPTURE(times[b]);
    const double se = std::hypot(rd.purity_se[b], rf.purity_se[b]);
    CHECK(std::abs(rd.purity_mean[b] - rf.purity_mean[b]) <= 4.0 * se + 1e-14);
    if (b > 0) CHECK(ks_distance_two_sample(rd.lambda1[b], rf.lambda1[b]) < 1.95 * std::sqrt(2.0 / rz));
  }
  CHECK(rd.max_trace_error < 1e-10);
  CHECK(rf.max_trace_error < 1e-10);
}

TEST_CASE("Monte Carlo at t = 0 and determinism") {
  BipartiteDims d(4, 6);
  const std::vector<double> times{0.0, 0.8};
  for (Backend b : {Backend::Dense, Backend::Frame}) {
    McOptions o{b};
    auto r1 = monte_carlo(d, InitialStateSpec::product(), times, 5, 3, o);
    CHECK(r1.purity_mean[0] == doctest::Approx(1.0).epsilon(1e-13));
    for (double l : r1.lambda1[0]) CHECK(l == doctest::Approx(1.0).epsilon(1e-13));
    auto r2 = monte_carlo(d, InitialStateSpec::product(), times, 5, 3, o);
    CHECK(r1.purity_mean == r2.purity_mean);
    CHECK(r1.lambda1 == r2.lambda1);
    o.workers = 3;
    auto r3 = monte_carlo(d, InitialStateSpec::product(), times, 5, 3, o);
    CHECK(r1.purity_mean == r3.purity_mean);
    CHECK(r1.purity_se == r3.purity_se);
    CHECK(r1.eig_mean == r3.eig_mean);
    auto single = monte_carlo(d, InitialStateSpec::product(), times, 1, 3, o);
    auto single2 = monte_carlo(d, InitialStateSpec::product(), times, 1, 3, o);
    CHECK(single.lambda1 == single2.lambda1);
  }
}

TEST_CASE("histogram counts every eigenvalue") {
  BipartiteDims d(4, 4);
  McOptions o{Backend::Dense};
  o.hist_bins = 10;
  const std::vector<double> times{0.5};
  auto rec = monte_carlo(d, InitialStateSpec::product(), times, 7, 1, o);
  std::uint64_t total = rec.hist_overflow[0];
  for (auto c : rec.hist_counts[0]) total += c;
  CHECK(total == 7 * 4);
  o.bulk_only = true;
  rec = monte_carlo(d, InitialStateSpec::product(), times, 7, 1, o);
  total = rec.hist_overflow[0];
  for (auto c : rec.hist_counts[0]) total += c;
  CHECK(total == 7 * 3);
}

TEST_CASE("largest eigenvalue follows the spike formula") {
  BipartiteDims d(64, 64);
  const std::vector<double> times{0.5};
  auto rec = monte_carlo(d, InitialStateSpec::product(), times, 200, 2024);
  const double g = g_t(0.5);
  const auto th = lambda1_mean(g * g, d);
  REQUIRE(th.separated);
  CHECK(std::abs(rec.eig_mean[0][0] - th.mean) / th.mean < 0.02);
}

TEST_CASE("spectral purity average is exact at t = 0") {
  BipartiteDims d(3, 3);
  const std::vector<double> times{0.0, 1.0};
  auto avg = spectral_average_purity(d, times, 20, 4);
  CHECK(avg.mean[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(avg.se[0] < 1e-12);
  auto avg2 = spectral_average_purity(d, times, 20, 4, 3);
  CHECK(avg.mean == avg2.mean);
}

TEST_CASE("linear grid") {
  auto g = linear_grid(0.0, 6.0, 61);
  REQUIRE(g.size() == 61);
  CHECK(g[0] == 0.0);
  CHECK(g[60] == 6.0);
  CHECK(g[10] == doctest::Approx(1.0));
  CHECK(linear_grid(2.0, 5.0, 1) == std::vector<double>{2.0});
}

TEST_CASE("every realization is a unit-trace PSD state") {
  const std::vector<double> times{0.0, 0.7, 2.0, 9.0};
  for (Backend b : {Backend::Dense, Backend::Frame}) {
    McOptions o{b};
    o.keep_spectra = true;
    auto rec = monte_carlo(BipartiteDims(5, 7), InitialStateSpec::linear(), times, 30, 21, o);
    CHECK(rec.max_trace_error < 1e-10);
    for (const auto& at_t : rec.spectra)
      for (const auto& spec : at_t) {
        CHECK(spec.back() > -1e-12);
        CHECK(std::is_sorted(spec.rbegin(), spec.rend()));
      }
  }
}
