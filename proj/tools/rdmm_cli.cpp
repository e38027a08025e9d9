// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "rdmm/io/config.hpp"
#include "rdmm/io/run.hpp"

namespace {

const std::map<std::string, std::pair<std::string, std::string>> kCommands{
    {"simulate",
     {"Monte Carlo of the random density matrix model",
      "simulate.csv: t,purity_mean,purity_se,purity_asymptotic,lambda1_mean,lambda1_var,lambda2_mean,gap,"
      "lambda1_theory,lambda1_var_theory\n"
      "simulate_hist.csv (--bins > 0): t,bin_lo,bin_hi,count; last row per t is the overflow bin"}},
    {"wishart",
     {"Sample the Wishart surrogate (--ensemble nwe|ncwe|cwe)",
      "wishart.csv: t,lambda1_mean,lambda1_var,trace_mean,lambda1_theory,lambda1_var_theory\n"
      "wishart_eigenvalues.csv: t,sample,k,lambda (k = 0 is the largest)"}},
    {"theory", {"Closed-form curves", "theory.csv: t,g_t,g_2t,h2_t,purity_asymptotic,spike_r,lambda1_mean,lambda1_var,"
                                      "lambda_minus,lambda_plus"}},
    {"haar-verify", {"Weingarten calculus checks", "haar-verify.csv: p,dim,check,value,tolerance,pass"}},
    {"phase-scan",
     {"Gaussian vs Tracy-Widom classification of lambda_1 per time",
      "phase-scan.csv: t,ks_gauss,ks_tw,classification,gauss_mu,gauss_sigma,tw_location,tw_scale"}},
    {"converge", {"Convergence time to a random state (--accuracy, default 1/n)",
                  "converge.csv: n,accuracy,first_passage,envelope_time"}},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random density matrix model toolkit"};
  app.require_subcommand(1);

  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  std::string config_path;

  for (const auto& name : rdmm::command_names()) {
    const auto& [desc, columns] = kCommands.at(name);
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->footer("Output columns:\n" + columns);
    sub->add_option("--config", config_path, "key = value file; an output CSV header also works");
    for (const auto& [key, help] : std::map<std::string, std::string>{
             {"n", "subsystem dimension N"},
             {"m", "environment dimension M >= N"},
             {"state", "product | two-schmidt:p | linear | custom:file | custom:w1,w2,..."},
             {"tmin", "first time"},
             {"tmax", "last time"},
             {"tsteps", "number of time points"},
             {"realizations", "realizations or samples per time"},
             {"seed", "master seed"},
             {"workers", "worker threads (output does not depend on it)"},
             {"out", "output directory"},
             {"backend", "auto | dense | frame"},
             {"bins", "histogram bins, 0 = off"},
             {"ensemble", "nwe | ncwe | cwe"},
             {"accuracy", "converge: target accuracy, default 1/N"}}) {
      sub->add_option("--" + key, values[key], help);
    }
    sub->add_flag("--bulk-only", flags["bulk_only"], "leave lambda_1 out of histograms");
    sub->add_flag("--fixed-trace", flags["fixed_trace"], "normalize every Wishart draw to unit trace");
  }

  CLI11_PARSE(app, argc, argv);

  rdmm::ExperimentConfig cfg;
  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) rdmm::read_config_file(config_path, cfg);
    cfg.command = sub->get_name();
    for (const auto& [key, value] : values)
      if (sub->count("--" + key) > 0) cfg.set(key, value);
    if (sub->count("--bulk-only") > 0) cfg.bulk_only = true;
    if (sub->count("--fixed-trace") > 0) cfg.fixed_trace = true;
    return rdmm::run(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
