#pragma once

#include <stdexcept>
#include <string>

namespace grouptest {

// Invalid parameters or malformed input (tables, scripts, CLI values).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// A request exceeds a documented capability cap (brute-force size,
// materialization budget, label-sampling attempts).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No primes in the sampling range for an instance family.
class EmptyPoolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strict oracle received a label it never issued.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace grouptest
