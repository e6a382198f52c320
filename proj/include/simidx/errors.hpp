#pragma once

#include <stdexcept>
#include <string>

namespace simidx {

/// Base for errors raised when an index is undefined for its inputs.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (0, 0) passed to a bounded scalar index.
class BothZero : public DomainError {
 public:
  BothZero() : DomainError("(0,0) undefined for s1-s3") {}
};

/// An aggregate index whose denominator vanished (nothing to compare).
class EmptyComparison : public DomainError {
 public:
  explicit EmptyComparison(const std::string& what) : DomainError("empty comparison: " + what) {}
};

class LengthMismatch : public DomainError {
 public:
  LengthMismatch(long lhs, long rhs)
      : DomainError("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
  {
  }
};

/// Two sampled functions are not on the same grid.
class GridMismatch : public DomainError {
 public:
  explicit GridMismatch(const std::string& what) : DomainError("grid mismatch: " + what) {}
};

/// Valid-mode sweep requested with a kernel longer than the signal.
class KernelTooLong : public DomainError {
 public:
  KernelTooLong(long kernel, long signal)
      : DomainError("kernel length " + std::to_string(kernel) + " exceeds signal length " +
                    std::to_string(signal))
  {
  }
};

/// Malformed input file or command-line value.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace simidx
