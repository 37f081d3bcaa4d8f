#pragma once

#include <stdexcept>
#include <string>

namespace hsplit {

// Bad input: unknown vertex, malformed file, violated operation precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal guarantee failed (oracle inconsistency, broken algorithm invariant).
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A recorded script does not replay against its hypergraph.
class ReplayError : public InputError {
 public:
  using InputError::InputError;
};

// The input is well formed but fails the hypothesis an algorithm needs
// (not k-hyperedge-connected, not Steiner 2k-connected, ...).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace hsplit
