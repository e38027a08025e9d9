// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "rdmm/core/types.hpp"

namespace rdmm {

/// Counter-based random stream.
///
/// Draw i of stream s under master seed k is a keyed SplitMix64 hash of
/// (k, s, i), so any (seed, stream) pair can be materialized independently
/// of every other. Monte Carlo drivers give realization r the stream r,
/// which makes results independent of how realizations are spread over
/// workers.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t position() const { return counter_; }

  /// Independent child stream, keyed by (this seed, this stream, index).
  RngStream substream(std::uint64_t index) const;

  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1).
  double uniform();
  /// Standard normal, Box-Muller.
  double normal();
  /// Circular complex Gaussian with E|z|^2 = variance.
  Complex complex_normal(double variance);
  /// Gamma(shape, 1), Marsaglia-Tsang.
  double gamma(double shape);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace rdmm
