#pragma once

#include <stdexcept>
#include <string>

namespace permcm {

/// Bad user input: malformed cycles, out-of-range points, unsupported sizes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closure exceeded its element cap.
class CapExceeded : public InputError {
 public:
  CapExceeded(std::size_t cap, std::size_t partial)
      : InputError("group generation exceeded cap of " + std::to_string(cap) +
                   " elements (" + std::to_string(partial) + " found so far)"),
        cap_(cap),
        partial_(partial) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

/// A computation ran past its deadline.
class Timeout : public InputError {
 public:
  using InputError::InputError;
};

/// An internal invariant that the mathematics guarantees was violated.
/// Always a bug, never a property of the input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace permcm
