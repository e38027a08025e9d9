// SPDX-License-Identifier: Apache-2.0
#include "rdmm/io/run.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>

#include "rdmm/analysis/collisions.hpp"
#include "rdmm/analysis/density.hpp"
#include "rdmm/analysis/phase.hpp"
#include "rdmm/analysis/tracy_widom.hpp"
#include "rdmm/core/error.hpp"
#include "rdmm/core/kernels.hpp"
#include "rdmm/core/linalg.hpp"
#include "rdmm/core/parallel.hpp"
#include "rdmm/haar/weingarten.hpp"
#include "rdmm/io/output.hpp"
#include "rdmm/sim/monte_carlo.hpp"
#include "rdmm/sim/rdmm.hpp"
#include "rdmm/theory/theory.hpp"
#include "rdmm/wishart/wishart.hpp"

namespace rdmm {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Outputs {
  const ExperimentConfig& cfg;
  std::vector<std::string> files;

  std::ofstream open(const std::string& name) {
    fs::create_directories(cfg.out);
    const fs::path p = fs::path(cfg.out) / name;
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot write " + p.string());
    files.push_back(p.string());
    return os;
  }

  void summary(json extra) {
    json j;
    json c;
    for (const auto& [k, v] : cfg.echo()) c[k] = v;
    j["config"] = c;
    j["seed"] = cfg.seed;
    j["kernels"] = std::string(kernels::isa_name(kernels::active_isa()));
    j.update(extra);
    std::vector<std::string> listed = files;
    std::ofstream os = open(cfg.command + ".json");
    j["files"] = listed;
    os << std::setw(2) << j << '\n';
  }
};

// Spike strength for the lambda_1 overlay: h^2 for a product state and
// (largest weight) h^2 for two Schmidt vectors; NaN otherwise.
double spike_r(const InitialStateSpec& spec, double h2) {
  if (spec.kind == StateKind::Product) return h2;
  if (spec.kind == StateKind::TwoSchmidt) return std::max(spec.p, 1.0 - spec.p) * h2;
  return kNaN;
}

double spike_mean(double r, const BipartiteDims& d) {
  if (std::isnan(r)) return kNaN;
  const SpikeResult s = lambda1_mean(r, d);
  return s.separated ? s.mean : kNaN;
}

double variance(const std::vector<double>& x) {
  if (x.size() < 2) return 0.0;
  return std::pow(gaussian_fit(x).sigma, 2);
}

int run_simulate(const ExperimentConfig& cfg, std::ostream& log) {
  const BipartiteDims dims(cfg.n, cfg.m);
  const InitialStateSpec spec = parse_state(cfg.state);
  const auto times = linear_grid(cfg.tmin, cfg.tmax, cfg.tsteps);
  McOptions opt;
  opt.backend = parse_backend(cfg.backend);
  opt.workers = cfg.workers;
  opt.hist_bins = cfg.bins;
  opt.bulk_only = cfg.bulk_only;
  opt.hist_max = cfg.bulk_only ? 8.0 * dims.sigma2() : 1.0;
  const RunRecord rec = monte_carlo(dims, spec, times, cfg.realizations, cfg.seed, opt);
  log << "simulate: " << cfg.realizations << " realizations, backend " << backend_name(rec.backend) << '\n';

  Outputs out{cfg, {}};
  {
    auto os = out.open("simulate.csv");
    write_header(os, cfg, {{"i_random", i_random(dims)}, {"heisenberg_time", 2.0 * static_cast<double>(dims.total())}});
    os << "t,purity_mean,purity_se,purity_asymptotic,lambda1_mean,lambda1_var,lambda2_mean,gap,lambda1_theory,"
          "lambda1_var_theory\n";
    for (std::size_t b = 0; b < times.size(); ++b) {
      const EnsembleScalars e = gue_scalars(times[b]);
      const double var_th = spec.kind == StateKind::Product ? lambda1_variance(e.g_t, e.g_2t, dims) : kNaN;
      write_row(os, {times[b], rec.purity_mean[b], rec.purity_se[b], purity_asymptotic(e.g_t, e.g_2t, dims),
                     rec.eig_mean[b][0], variance(rec.lambda1[b]), rec.eig_mean[b][1],
                     rec.eig_mean[b][0] - rec.eig_mean[b][1], spike_mean(spike_r(spec, e.h2_t), dims), var_th});
    }
  }
  if (cfg.bins > 0) {
    auto os = out.open("simulate_hist.csv");
    write_header(os, cfg, {{"hist_max", opt.hist_max}});
    os << "t,bin_lo,bin_hi,count\n";
    const double w = opt.hist_max / static_cast<double>(cfg.bins);
    for (std::size_t b = 0; b < times.size(); ++b) {
      for (std::size_t k = 0; k < cfg.bins; ++k)
        write_row(os, {times[b], w * k, w * (k + 1), static_cast<double>(rec.hist_counts[b][k])});
      write_row(os, {times[b], opt.hist_max, std::numeric_limits<double>::infinity(),
                     static_cast<double>(rec.hist_overflow[b])});
    }
  }
  const GapMinimum gm = gap_minimum(rec);
  out.summary({{"backend", std::string(backend_name(rec.backend))},
               {"max_trace_error", rec.max_trace_error},
               {"gap_minimum_time", gm.time},
               {"gap_minimum", gm.gap}});
  return 0;
}

WishartParams ensemble_params(const ExperimentConfig& cfg, const CoefficientMatrix& a0, double g) {
  const double h2 = g * g;
  if (cfg.ensemble == "ncwe") return ncwe_params(a0, g, h2, cfg.fixed_trace);
  if (cfg.ensemble == "cwe") return cwe_params(reduced_density(a0), h2, a0.dims, cfg.fixed_trace);
  return nwe_params(a0, g, h2, cfg.fixed_trace);
}

// lambda_1 of `count` draws at time index b; draw s uses stream b * count + s.
std::vector<std::vector<double>> wishart_spectra(const ExperimentConfig& cfg, const CoefficientMatrix& a0, double t,
                                                 std::size_t b) {
  const WishartSampler sampler(ensemble_params(cfg, a0, g_t(t)));
  std::vector<std::vector<double>> spectra(cfg.realizations);
  parallel_for(cfg.realizations, cfg.workers, [&](std::size_t s) {
    RngStream rng(cfg.seed, b * cfg.realizations + s);
    auto ev = eigvalsh(sampler.draw(rng));
    std::reverse(ev.begin(), ev.end());
    spectra[s] = std::move(ev);
  });
  return spectra;
}

int run_wishart(const ExperimentConfig& cfg, std::ostream& log) {
  const BipartiteDims dims(cfg.n, cfg.m);
  const InitialStateSpec spec = parse_state(cfg.state);
  const CoefficientMatrix a0 = make_initial_state(spec, dims);
  const auto times = linear_grid(cfg.tmin, cfg.tmax, cfg.tsteps);
  Outputs out{cfg, {}};
  auto os = out.open("wishart.csv");
  write_header(os, cfg);
  os << "t,lambda1_mean,lambda1_var,trace_mean,lambda1_theory,lambda1_var_theory\n";
  auto ev_os = out.open("wishart_eigenvalues.csv");
  write_header(ev_os, cfg);
  ev_os << "t,sample,k,lambda\n";
  for (std::size_t b = 0; b < times.size(); ++b) {
    const auto spectra = wishart_spectra(cfg, a0, times[b], b);
    std::vector<double> l1(spectra.size());
    double tr = 0.0;
    for (std::size_t s = 0; s < spectra.size(); ++s) {
      l1[s] = spectra[s][0];
      tr += std::accumulate(spectra[s].begin(), spectra[s].end(), 0.0) / static_cast<double>(spectra.size());
      for (std::size_t k = 0; k < spectra[s].size(); ++k)
        write_row(ev_os, {times[b], static_cast<double>(s), static_cast<double>(k), spectra[s][k]});
    }
    const EnsembleScalars e = gue_scalars(times[b]);
    const double var_th = spec.kind == StateKind::Product ? lambda1_variance(e.g_t, e.g_2t, dims) : kNaN;
    write_row(os, {times[b], gaussian_fit(l1).mu, variance(l1), tr, spike_mean(spike_r(spec, e.h2_t), dims), var_th});
  }
  log << "wishart: " << cfg.ensemble << ", " << cfg.realizations << " samples per time\n";
  out.summary({{"ensemble", cfg.ensemble}});
  return 0;
}

int run_theory(const ExperimentConfig& cfg, std::ostream& log) {
  const BipartiteDims dims(cfg.n, cfg.m);
  const InitialStateSpec spec = parse_state(cfg.state);
  const auto times = linear_grid(cfg.tmin, cfg.tmax, cfg.tsteps);
  Outputs out{cfg, {}};
  auto os = out.open("theory.csv");
  const double thr = lambda1_mean(0.5, dims).threshold;
  write_header(os, cfg,
               {{"i_random", i_random(dims)},
                {"purity_long_time", purity_long_time(dims.n(), dims.m())},
                {"spike_threshold", thr},
                {"first_collision", collision_times(1)[0]},
                {"heisenberg_time", 2.0 * static_cast<double>(dims.total())}});
  os << "t,g_t,g_2t,h2_t,purity_asymptotic,spike_r,lambda1_mean,lambda1_var,lambda_minus,lambda_plus\n";
  for (double t : times) {
    const EnsembleScalars e = gue_scalars(t);
    const double r = spike_r(spec, e.h2_t);
    double lo = kNaN, hi = kNaN;
    if (!std::isnan(r) && r < 1.0) {
      const MPBulk bulk = mp_bulk(r, dims);
      lo = bulk.lambda_minus();
      hi = bulk.lambda_plus();
    }
    write_row(os, {t, e.g_t, e.g_2t, e.h2_t, purity_asymptotic(e.g_t, e.g_2t, dims), r, spike_mean(r, dims),
                   lambda1_variance(e.g_t, e.g_2t, dims), lo, hi});
  }
  log << "theory: I_r = " << format_double(i_random(dims)) << '\n';
  out.summary({{"i_random", i_random(dims)}});
  return 0;
}

struct Check {
  std::size_t p;
  std::size_t dim;
  std::string name;
  double value;
  double tol;
  bool pass() const { return std::isfinite(value) && value <= tol; }
};

int run_haar_verify(const ExperimentConfig& cfg, std::ostream& log) {
  std::vector<Check> checks;
  for (std::size_t p = 1; p <= 4; ++p)
    for (std::size_t dim : {std::size_t{4}, std::size_t{8}}) {
      const WeingartenTable t(p, dim);
      checks.push_back({p, dim, "orthogonality", t.orthogonality_defect(), 1e-12});
      checks.push_back({p, dim, "class_spread", t.class_spread(), 1e-12});
    }
  RngStream rng(cfg.seed, 0);
  {
    const BipartiteDims d(2, 2);
    const CoefficientMatrix a0 = make_initial_state(InitialStateSpec::product(), d);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto e = sample_gue_spectrum(d.total(), rng);
      const double t = 5.0 * rng.uniform();
      worst = std::max(worst, std::abs(brute_force_purity(a0, e, t) - purity_exact(empirical_spectral_scalars(e, t), d)));
    }
    checks.push_back({4, 4, "brute_force_purity", worst, 1e-9});
  }
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 4}}) {
    const BipartiteDims d(n, m);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      std::vector<double> w(n);
      for (auto& x : w) x = rng.uniform();
      const double s = std::accumulate(w.begin(), w.end(), 0.0);
      for (auto& x : w) x /= s;
      w.back() = 1.0 - std::accumulate(w.begin(), w.end() - 1, 0.0);
      const HermitianMatrix rho0 = reduced_density(make_initial_state(InitialStateSpec::custom(w), d));
      const auto e = sample_gue_spectrum(d.total(), rng);
      const double t = 5.0 * rng.uniform();
      const auto bf = brute_force_avg_rho(rho0, e, t, d);
      const auto th = avg_rho(rho0, std::norm(empirical_spectral_scalars(e, t).f_t), d);
      worst = std::max(worst, max_abs_diff(bf.matrix(), th.matrix()));
    }
    checks.push_back({2, n * m, "brute_force_avg_rho", worst, 1e-10});
  }
  {
    const auto est = mc_haar_moment({0}, {0}, {0}, {0}, 4, 20000, rng);
    checks.push_back({1, 4, "mc_moment_sigmas", std::abs(est.estimate - 0.25) / est.standard_error, 4.0});
  }

  Outputs out{cfg, {}};
  auto os = out.open("haar-verify.csv");
  write_header(os, cfg);
  os << "p,dim,check,value,tolerance,pass\n";
  bool all = true;
  log << std::left << std::setw(4) << "p" << std::setw(5) << "dim" << std::setw(22) << "check" << std::setw(14)
      << "value" << "result\n";
  for (const auto& c : checks) {
    all = all && c.pass();
    os << c.p << ',' << c.dim << ',' << c.name << ',' << format_double(c.value) << ',' << format_double(c.tol) << ','
       << (c.pass() ? "pass" : "fail") << '\n';
    std::ostringstream v;
    v << std::scientific << std::setprecision(3) << c.value;
    log << std::setw(4) << c.p << std::setw(5) << c.dim << std::setw(22) << c.name << std::setw(14) << v.str()
        << (c.pass() ? "PASS" : "FAIL") << '\n';
  }
  out.summary({{"all_passed", all}});
  return all ? 0 : 1;
}

int run_phase_scan(const ExperimentConfig& cfg, std::ostream& log) {
  const BipartiteDims dims(cfg.n, cfg.m);
  const CoefficientMatrix a0 = make_initial_state(parse_state(cfg.state), dims);
  const auto times = linear_grid(cfg.tmin, cfg.tmax, cfg.tsteps);
  Outputs out{cfg, {}};
  auto os = out.open("phase-scan.csv");
  write_header(os, cfg, {{"tw2_mean", kTw2Mean}, {"tw2_variance", kTw2Variance}});
  os << "t,ks_gauss,ks_tw,classification,gauss_mu,gauss_sigma,tw_location,tw_scale\n";
  json verdicts = json::array();
  for (std::size_t b = 0; b < times.size(); ++b) {
    const auto spectra = wishart_spectra(cfg, a0, times[b], b);
    std::vector<double> l1(spectra.size());
    for (std::size_t s = 0; s < spectra.size(); ++s) l1[s] = spectra[s][0];
    const PhaseVerdict v = phase_classify(l1);
    os << format_double(times[b]) << ',' << format_double(v.ks_gauss) << ',' << format_double(v.ks_tw) << ','
       << phase_name(v.classification) << ',' << format_double(v.gauss_mu) << ',' << format_double(v.gauss_sigma)
       << ',' << format_double(v.tw_location) << ',' << format_double(v.tw_scale) << '\n';
    log << "t = " << format_double(times[b]) << ": " << phase_name(v.classification) << '\n';
    verdicts.push_back({{"t", times[b]}, {"classification", std::string(phase_name(v.classification))}});
  }
  out.summary({{"verdicts", verdicts}});
  return 0;
}

int run_converge(const ExperimentConfig& cfg, std::ostream& log) {
  const BipartiteDims dims(cfg.n, cfg.m);
  const double acc = cfg.accuracy > 0.0 ? cfg.accuracy : dims.sigma2();
  const ConvergenceTimes c = convergence_time(dims, acc);
  Outputs out{cfg, {}};
  auto os = out.open("converge.csv");
  write_header(os, cfg, {{"first_collision", collision_times(1)[0]}});
  os << "n,accuracy,first_passage,envelope_time\n";
  write_row(os, {static_cast<double>(dims.n()), acc, c.first_passage, c.envelope_time});
  log << "first passage " << format_double(c.first_passage) << ", envelope " << format_double(c.envelope_time) << '\n';
  out.summary({{"first_passage", c.first_passage}, {"envelope_time", c.envelope_time}, {"accuracy", acc}});
  return 0;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"simulate", "wishart", "theory", "haar-verify", "phase-scan", "converge"};
  return names;
}

int run(const ExperimentConfig& cfg, std::ostream& log) {
  cfg.validate();
  if (cfg.command == "simulate") return run_simulate(cfg, log);
  if (cfg.command == "wishart") return run_wishart(cfg, log);
  if (cfg.command == "theory") return run_theory(cfg, log);
  if (cfg.command == "haar-verify") return run_haar_verify(cfg, log);
  if (cfg.command == "phase-scan") return run_phase_scan(cfg, log);
  if (cfg.command == "converge") return run_converge(cfg, log);
  throw DomainError("unknown command '" + cfg.command + "'");
}

}  // namespace rdmm
