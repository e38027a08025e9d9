// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rdmm {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request exceeds a hard size limit (brute-force enumerations).
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Input is valid but the operation does not cover it.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] inline void domain_fail(const std::string& what) { throw DomainError(what); }
}  // namespace detail

inline void require(bool cond, const char* what) {
  if (!cond) detail::domain_fail(what);
}

}  // namespace rdmm
