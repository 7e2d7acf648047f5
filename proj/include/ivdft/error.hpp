#pragma once

#include <stdexcept>
#include <string>

namespace ivdft {

// Malformed or out-of-domain input: bad files, reversed bounds, NaN.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A computation was refused because it would exceed a resource guard
// (brute-force enumeration above its cap).
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal invariant did not hold. Signals a bug, not bad input.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace ivdft
