#pragma once

#include <stdexcept>
#include <string>

namespace hypertrees {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p < 3 or q < 3: not a Schläfli symbol of any regular tessellation.
class InvalidSymbol : public Error {
 public:
  using Error::Error;
};

/// The tree recursion is undefined for p = 3 or q = 3 (no trees for q = 3,
/// no roots besides the main one for p = 3).
class DegenerateSymbol : public Error {
 public:
  using Error::Error;
};

/// (p-2)(q-2) < 4: finite mosaic, belts terminate.
class SphericalSymbol : public Error {
 public:
  using Error::Error;
};

/// (p-2)(q-2) = 4: the recursion matrix has the double eigenvalue 1 and no
/// two-root closed form exists. Use euclidean_counts instead.
class RepeatedEigenvalue : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A mosaic build would exceed the configured vertex cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A layer vertex has more than one neighbour on the previous layer where the
/// tree rules require the parent to be forced (p >= 4).
class ForcedParentViolation : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (indicates a bug, not bad input).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Arithmetic across two different quadratic fields, or division by zero.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypertrees
