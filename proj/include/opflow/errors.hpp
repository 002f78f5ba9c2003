#pragma once

#include <stdexcept>
#include <string>

namespace opflow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes do not agree: module dimensions, tensor lengths, arities.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation (wrong degree, bad config).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Insertion index of a partial composition is out of range.
class CompositionRangeError : public Error {
 public:
  using Error::Error;
};

/// The requested flow has no admissible target degree.
class EmptyFlowError : public Error {
 public:
  using Error::Error;
};

/// The binary operation has a nonzero associator where one is required to vanish.
class AssociativityRequired : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition (cocycle condition, ...) does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A tensor or matrix would exceed the configured entry budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace opflow
