// SPDX-License-Identifier: Apache-2.0
#include "rdmm/io/output.hpp"

namespace rdmm {

void write_header(std::ostream& os, const ExperimentConfig& cfg, const Constants& constants) {
  for (const auto& [k, v] : cfg.echo()) os << "# " << k << " = " << v << '\n';
  for (const auto& [k, v] : constants) os << "# const " << k << " = " << format_double(v) << '\n';
}

void write_row(std::ostream& os, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << format_double(values[i]);
  os << '\n';
}

void write_row(std::ostream& os, std::initializer_list<double> values) { write_row(os, std::vector<double>(values)); }

}  // namespace rdmm
