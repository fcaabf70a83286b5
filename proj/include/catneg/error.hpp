#pragma once

#include <stdexcept>
#include <string>

namespace catneg {

// Root of every error thrown by the library. The CLI maps the concrete kind
// to its exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the documented domain (theta0 range, partition shape...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed or unknown configuration entry.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Requested Hilbert-space dimension exceeds the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Non-Hermitian input, degenerate normalization, or a closed form leaving its
// real domain.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace catneg
