// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace rdmm {

/// Subsystem dimension n and environment dimension m, 2 <= n <= m.
class BipartiteDims {
 public:
  BipartiteDims(std::size_t n, std::size_t m);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  /// n * m
  std::size_t total() const { return n_ * m_; }
  /// m / n
  double kappa() const { return static_cast<double>(m_) / static_cast<double>(n_); }
  /// 1 / n
  double sigma2() const { return 1.0 / static_cast<double>(n_); }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
};

}  // namespace rdmm
