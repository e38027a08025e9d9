// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rdmm/io/config.hpp"

namespace rdmm {

using Constants = std::vector<std::pair<std::string, double>>;

/// `# key = value` per echoed config entry, then `# const name = value`.
void write_header(std::ostream& os, const ExperimentConfig& cfg, const Constants& constants = {});

/// Comma-separated row of numbers at full precision.
void write_row(std::ostream& os, std::initializer_list<double> values);
void write_row(std::ostream& os, const std::vector<double>& values);

}  // namespace rdmm
