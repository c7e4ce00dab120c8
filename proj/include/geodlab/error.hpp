#pragma once

#include <stdexcept>
#include <string>

namespace geodlab {

/// Bad argument shape or value (length mismatch, j = 0, unknown name, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input fails a validation tolerance (e.g. a matrix that is not unitary).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine failed or produced an inconsistent result.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested size is outside what the routine supports.
class UnsupportedSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cutoff beyond the completeness threshold of a geodesic table.
class CompletenessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer overflow or memory limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Corrupt or tampered cache file.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid experiment configuration (CLI level).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace geodlab
