// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace rdmm {

/// Bijection on {0, ..., p-1}; image()[i] is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(std::size_t p);

  std::size_t degree() const { return image_.size(); }
  int operator()(std::size_t i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  /// Cycle lengths, descending.
  std::vector<int> cycle_type() const;
  std::size_t cycle_count() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// (a * b)(i) = a(b(i))
Permutation operator*(const Permutation& a, const Permutation& b);

/// All p! permutations in lexicographic order of their image arrays.
std::vector<Permutation> all_permutations(std::size_t p);

}  // namespace rdmm
