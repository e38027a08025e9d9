// SPDX-License-Identifier: Apache-2.0
#include "rdmm/sim/dims.hpp"

#include "rdmm/core/error.hpp"

namespace rdmm {

BipartiteDims::BipartiteDims(std::size_t n, std::size_t m) : n_(n), m_(m) {
  require(n >= 2, "BipartiteDims: n must be >= 2");
  require(m >= n, "BipartiteDims: m must be >= n");
}

}  // namespace rdmm
