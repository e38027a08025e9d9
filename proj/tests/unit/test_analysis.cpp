// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rdmm/analysis/collisions.hpp"
#include "rdmm/analysis/density.hpp"
#include "rdmm/analysis/phase.hpp"
#include "rdmm/analysis/tracy_widom.hpp"
#include "rdmm/core/error.hpp"
#include "rdmm/core/rng.hpp"
#include "rdmm/sim/monte_carlo.hpp"
#include "rdmm/theory/theory.hpp"

using namespace rdmm;

TEST_CASE("histograms") {
  const std::vector<double> c(7, 2.5);
  auto h1 = histogram(c, 1);
  REQUIRE(h1.density.size() == 1);
  CHECK(h1.density[0] == doctest::Approx(1.0 / (h1.edges[1] - h1.edges[0])));
  CHECK(h1.integral() == doctest::Approx(1.0).epsilon(1e-12));

  RngStream r(1);
  std::vector<double> u(100000);
  for (auto& x : u) x = r.uniform();
  const std::vector<double> edges{0, .1, .2, .3, .4, .5, .6, .7, .8, .9, 1.0};
  auto h = histogram(u, edges);
  const double se = std::sqrt(0.1 * 0.9 / u.size()) / 0.1;
  for (double dens : h.density) CHECK(std::abs(dens - 1.0) < 4 * se);
  CHECK(std::abs(h.integral() - 1.0) < 1e-9);
  std::vector<double> g(5000);
  for (auto& x : g) x = r.normal();
  auto hg = histogram(g, 37);
  CHECK(std::abs(hg.integral() - 1.0) < 1e-9);
  CHECK(hg.sample_count == 5000);
  CHECK_THROWS_AS(histogram(std::vector<double>{}, 4), DomainError);
}

TEST_CASE("Gaussian fit") {
  auto f = gaussian_fit(std::vector<double>{0.0, 2.0});
  CHECK(f.mu == doctest::Approx(1.0));
  CHECK(f.sigma == doctest::Approx(std::sqrt(2.0)));
  RngStream r(2);
  std::vector<double> x(300), y(300);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = r.normal();
    y[i] = x[i] + 7.25;
  }
  CHECK(gaussian_fit(y).mu == doctest::Approx(gaussian_fit(x).mu + 7.25).epsilon(1e-12));
  CHECK(gaussian_fit(y).sigma == doctest::Approx(gaussian_fit(x).sigma).epsilon(1e-10));
  CHECK_THROWS_AS(gaussian_fit(std::vector<double>{1.0}), DomainError);
}

TEST_CASE("spike fit against theory") {
  BipartiteDims d(256, 256);
  const std::vector<double> times{0.5};
  auto rec = monte_carlo(d, InitialStateSpec::product(), times, 400, 505);
  const auto f = gaussian_fit(rec.lambda1[0]);
  const auto s = gue_scalars(0.5);
  const double mean = lambda1_mean(s.h2_t, d).mean;
  const double var = lambda1_variance(s.g_t, s.g_2t, d);
  CHECK(std::abs(f.mu - mean) < 3 * f.sigma / std::sqrt(400.0));
  CHECK(std::abs(f.sigma * f.sigma - var) / var < 0.15);
}

TEST_CASE("Tracy-Widom distribution") {
  CHECK(tw2_cdf(-50) == 0.0);
  CHECK(tw2_cdf(50) == 1.0);
  CHECK(tw2_cdf(-9.5) < 1e-20);
  CHECK(tw2_cdf(5.5) > 1 - 1e-9);
  double prev = 0;
  for (double s = -12; s <= 8; s += 0.0037) {
    const double v = tw2_cdf(s);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(tw2_cdf(-1.8049) == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(tw2_cdf(kTw2Mean) == doctest::Approx(0.51501).epsilon(1e-4));
  // moments of the tabulated law
  double m1 = 0, m2 = 0;
  const double h = 1e-3;
  for (double s = -10; s < 6; s += h) {
    const double p = tw2_cdf(s + h) - tw2_cdf(s);
    const double x = s + h / 2;
    m1 += x * p;
    m2 += x * x * p;
  }
  CHECK(m1 == doctest::Approx(kTw2Mean).epsilon(1e-5));
  CHECK(m2 - m1 * m1 == doctest::Approx(kTw2Variance).epsilon(1e-4));
  for (double u : {0.01, 0.3, 0.5, 0.97}) CHECK(tw2_cdf(tw2_quantile(u)) == doctest::Approx(u).epsilon(1e-10));
  CHECK_THROWS_AS(tw2_quantile(1.0), DomainError);
}

TEST_CASE("KS distance") {
  RngStream r(3);
  const std::size_t n = 10000;
  std::vector<double> x(n);
  for (auto& v : x) v = r.normal();
  const double d = ks_distance(x, normal_cdf);
  CHECK(d < 1.63 / std::sqrt(double(n)));
  CHECK(d >= 0.0);
  std::vector<double> z(n, 0.0);
  const double step = ks_distance(z, [](double s) { return s < 0 ? 0.0 : 0.5; });
  CHECK(step >= 0.5 - 1.0 / n);
  CHECK(step <= 1.0);
  CHECK(ks_distance(x, [](double) { return 2.0; }) <= 1.0);
  std::vector<double> y(n);
  for (auto& v : y) v = r.normal() + 0.2;
  CHECK(ks_distance_two_sample(x, x) == 0.0);
  CHECK(ks_distance_two_sample(x, y) == doctest::Approx(normal_cdf(0.1) - normal_cdf(-0.1)).epsilon(0.15));
  CHECK_THROWS_AS(ks_distance(std::vector<double>(5, 1.0), normal_cdf), DomainError);
}

TEST_CASE("phase classification") {
  RngStream r(4);
  std::vector<double> g(500), t(500);
  for (auto& v : g) v = 0.3 + 0.01 * r.normal();
  for (auto& v : t) v = 0.3 + 0.01 * tw2_quantile(r.uniform());
  auto vg = phase_classify(g);
  CHECK(vg.classification == Phase::Gaussian);
  CHECK(vg.gauss_mu == doctest::Approx(0.3).epsilon(0.01));
  auto vt = phase_classify(t);
  CHECK(vt.classification == Phase::TracyWidom);
  CHECK(vt.tw_scale == doctest::Approx(0.01).epsilon(0.1));
  CHECK(vt.tw_location == doctest::Approx(0.3).epsilon(0.01));
  CHECK(phase_name(Phase::TracyWidom) == "TracyWidom");
  CHECK_THROWS_AS(phase_classify(std::vector<double>(100, 1.0)), DomainError);
}

TEST_CASE("collision times") {
  auto c = collision_times(40);
  CHECK(c[0] == doctest::Approx(1.9159).epsilon(1e-4));
  CHECK(c[1] == doctest::Approx(3.5078).epsilon(1e-4));
  CHECK(c[2] == doctest::Approx(5.0868).epsilon(1e-4));
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] > c[i - 1]);
  CHECK(c[39] - c[38] == doctest::Approx(std::numbers::pi / 2).epsilon(1e-3));
  for (double x : c) CHECK(std::abs(g_t(x)) < 1e-14);
}

TEST_CASE("gap trace") {
  BipartiteDims d(32, 32);
  const auto times = linear_grid(0.0, 2.4, 13);
  auto rec = monte_carlo(d, InitialStateSpec::product(), times, 20, 8);
  auto gap = gap_trace(rec);
  REQUIRE(gap.size() == times.size());
  CHECK(gap[0] == doctest::Approx(1.0 - rec.eig_mean[0][1]));
  CHECK(rec.eig_mean[0][1] < 1e-12);
  CHECK(rec.eig_mean[1][1] < 4.0 / 32);
  for (double v : gap) CHECK(v > 0);
  auto gm = gap_minimum(rec);
  CHECK(gm.gap == *std::min_element(gap.begin(), gap.end()));
  CHECK(gm.time == times[gm.index]);
  CHECK(gm.time > 1.9159 - 0.25);
}

TEST_CASE("classification is affine equivariant") {
  RngStream r(5);
  for (int rep = 0; rep < 6; ++rep) {
    std::vector<double> x(250);
    const bool tw = rep % 2;
    for (auto& v : x) v = tw ? tw2_quantile(r.uniform()) : r.normal();
    const auto base = phase_classify(x);
    for (auto [a, b] : {std::pair{3.0, -1.0}, std::pair{1e-3, 0.25}, std::pair{40.0, 7.0}}) {
      std::vector<double> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = a * x[i] + b;
      const auto v = phase_classify(y);
      CHECK(v.classification == base.classification);
      CHECK(v.ks_gauss == doctest::Approx(base.ks_gauss).epsilon(1e-9));
      CHECK(v.ks_tw == doctest::Approx(base.ks_tw).epsilon(1e-9));
    }
  }
}

TEST_CASE("purity revivals sit between collisions") {
  const auto c = collision_times(4);
  std::vector<double> peaks;
  const double h = 1e-4;
  for (double t = h; t < c.back(); t += h) {
    const double a = std::pow(g_t(t - h), 4), b = std::pow(g_t(t), 4), d = std::pow(g_t(t + h), 4);
    if (b > a && b > d) peaks.push_back(t);
  }
  REQUIRE(peaks.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(peaks[i] > c[i]);
    CHECK(peaks[i] < c[i + 1]);
  }
  CHECK(peaks[0] == doctest::Approx(2.5).epsilon(0.08));
  CHECK(peaks[1] == doctest::Approx(4.2).epsilon(0.08));
}
