#pragma once

#include <stdexcept>
#include <string>

namespace weylquant {

/// Base of every engine error. `exit_code()` is the CLI contract:
/// 2 for bad input, 3 for a failed mathematical identity.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 2; }
};

/// Unknown Cartan type, unsupported rank, malformed group block.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the operation's domain (non-dominant weight,
/// vector that is not a root, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Schema or parse failure in an input file or flag.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A fixed point whose tangent data cannot be split into orbit and
/// transverse weights.
class MalformedPointError : public Error {
 public:
  using Error::Error;
};

/// Orbit inference found several indistinguishable candidates.
class AmbiguousDataError : public Error {
 public:
  using Error::Error;
};

/// No polarizing functional is generic for the supplied weights.
class DegeneratePairError : public Error {
 public:
  using Error::Error;
};

/// Partition generators do not lie in an open half-space.
class NonPointedConeError : public Error {
 public:
  using Error::Error;
};

/// The data contradicts an identity the formulas rely on.
class InconsistencyError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

class InexactDivisionError : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

class NotAKCharacterError : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

}  // namespace weylquant
