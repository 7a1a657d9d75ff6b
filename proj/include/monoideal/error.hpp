#pragma once

#include <stdexcept>
#include <string>

namespace monoideal {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two points (or a point and a set) of different dimension were combined.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A point set that must be pairwise incomparable is not.
class NotAnAntichain : public Error {
 public:
  using Error::Error;
};

/// The generating set does not bound the complement in every axis direction.
class NotCofinite : public Error {
 public:
  using Error::Error;
};

/// An operation's stated precondition does not hold (bad corner bounds,
/// negative coordinates on an N_0^d path, wrong point count, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace monoideal
