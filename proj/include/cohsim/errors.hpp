#pragma once

#include <stdexcept>
#include <string>

namespace cohsim {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad sizes, counts or out-of-range configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Ill-formed domain data: non-unitary matrices, non-normalized amplitudes,
/// tables that fail their normalization constraints, and the like.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A bosonic creation hit an already occupied mode. The engine caps
/// occupancy at one particle per mode and refuses to leave that regime.
class UnsupportedOccupancyError : public Error {
 public:
  using Error::Error;
};

/// The single-particle scheme was asked to run with fermions, which the
/// parity superselection rule forbids.
class SuperselectionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cohsim
