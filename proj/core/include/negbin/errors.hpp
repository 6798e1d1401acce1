#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace negbin {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain of the formula being evaluated.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Raising a state whose top component carries non-negligible weight.
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

/// The tail criterion could not be met within TruncationPolicy::hard_cap.
class HardCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A coefficient ratio has a vanishing denominator.
class PoleError : public Error {
 public:
  PoleError(std::size_t index, const std::string& what)
      : Error(what + " (vanishing coefficient at n=" + std::to_string(index) + ")"), index_(index) {}

  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A conditional measurement outcome with zero probability.
class ZeroNormBranch : public Error {
 public:
  using Error::Error;
};

}  // namespace negbin
