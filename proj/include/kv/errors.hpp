#pragma once

#include <stdexcept>
#include <string>

namespace kv {

/// Bad input: unknown labels, malformed coordinates, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration refused because the Weyl group exceeds the configured order cap.
class SizeGuardError : public InputError {
 public:
  using InputError::InputError;
};

/// A mathematical invariant failed: an inconsistent datum or a falsified claim
/// (e.g. a non-unique minimum where uniqueness is a theorem).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kv
