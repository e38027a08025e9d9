// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rdmm/io/config.hpp"

namespace rdmm {

/// Subcommands accepted by run().
const std::vector<std::string>& command_names();

/// Runs one experiment and writes <out>/<command>.csv, <out>/<command>.json
/// and any auxiliary CSVs. Progress and tables go to log. Returns the
/// process exit status (haar-verify returns 1 when a check fails).
int run(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace rdmm
