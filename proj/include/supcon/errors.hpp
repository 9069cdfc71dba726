#pragma once

#include <stdexcept>
#include <string>

namespace supcon {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric input violated a documented range or invariant. The message
// names the offending field.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Matrix or vector shapes do not line up.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Regression data does not excite every coefficient.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

// Requested steering target is outside the reachable subspace.
class Unreachable : public Error {
 public:
  using Error::Error;
};

// A polyhedron has no feasible point.
class EmptySet : public Error {
 public:
  using Error::Error;
};

// Bad or inconsistent configuration input. The message names the key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written. The message names the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace supcon
