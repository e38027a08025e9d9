// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "rdmm/sim/state.hpp"
#include "rdmm/sim/trajectory.hpp"

namespace rdmm {

/// Flat experiment configuration. Every field except workers and out is
/// echoed into output headers, so output depends only on echoed keys.
struct ExperimentConfig {
  std::string command = "simulate";
  std::size_t n = 64;
  std::size_t m = 64;
  std::string state = "product";
  double tmin = 0.0;
  double tmax = 6.0;
  std::size_t tsteps = 61;
  std::size_t realizations = 200;
  std::uint64_t seed = 1;
  std::string backend = "auto";
  /// Histogram bins (0 = off) for simulate and wishart.
  std::size_t bins = 0;
  bool bulk_only = false;
  /// wishart / phase-scan ensemble: nwe, ncwe or cwe.
  std::string ensemble = "nwe";
  bool fixed_trace = false;
  /// converge: <= 0 means 1/n.
  double accuracy = 0.0;

  unsigned workers = 1;
  std::string out = ".";

  /// Echoed (key, value) pairs in a fixed order.
  std::vector<std::pair<std::string, std::string>> echo() const;
  /// Sets one key; throws DomainError for unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  /// Throws DomainError unless counts >= 1, n <= m, steps >= 1.
  void validate() const;
};

/// Reads `key = value` lines. A leading '#' is stripped first, lines
/// starting with "const " and lines without '=' are skipped, so an output
/// CSV header reads back as the config that produced it.
void read_config(std::istream& in, ExperimentConfig& cfg);
void read_config_file(const std::string& path, ExperimentConfig& cfg);

/// product | two-schmidt:p | linear | custom:w1,w2,... | custom:path
InitialStateSpec parse_state(const std::string& text);
/// Canonical text of a state; custom weights are written inline.
std::string format_state(const InitialStateSpec& spec);

/// Shortest round-trip decimal.
std::string format_double(double x);

}  // namespace rdmm
