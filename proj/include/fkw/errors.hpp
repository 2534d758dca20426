#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fkw {

/// Bad user input: unknown type, malformed rationals, off-lattice coweights,
/// non-dominant weights passed to operations that require dominance.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity failed. These signal a convention bug, never a user
/// error (e.g. two distinct minimal elements of a double coset).
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A bounded search ran out of budget before it could certify an answer.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested enumeration is larger than the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  std::size_t estimate() const { return estimate_; }

 private:
  std::size_t estimate_;
};

/// y was asked for its length in W_λ but is not an element of W_λ.
class NotInBlock : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fkw
