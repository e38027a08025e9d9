// SPDX-License-Identifier: Apache-2.0
#include "rdmm/haar/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "rdmm/core/error.hpp"

namespace rdmm {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || static_cast<std::size_t>(x) >= image_.size() || seen[x])
      throw DomainError("Permutation: image is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t p) {
  std::vector<int> id(p);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t Permutation::cycle_count() const { return cycle_type().size(); }

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), "Permutation: degree mismatch");
  std::vector<int> c(a.degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a(static_cast<std::size_t>(b(i)));
  return Permutation(std::move(c));
}

std::vector<Permutation> all_permutations(std::size_t p) {
  std::vector<int> img(p);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace rdmm
