#pragma once

#include <stdexcept>
#include <string>

namespace ucycle {

/// Bad caller input: malformed word, spec outside its invariants, size out of range.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The spec is valid but the requested algorithm does not cover it.
class UnsupportedSpec : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class EmptyClass : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on a graph that does not satisfy its precondition
/// (unbalanced, disconnected, not 1-regular).
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A computed result contradicted an identity that must hold; indicates a bug.
class InternalConsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ucycle
