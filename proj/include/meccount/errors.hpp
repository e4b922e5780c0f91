#pragma once

#include <stdexcept>
#include <string>

namespace meccount {

class MecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// bad user input: malformed graph, unknown vertex, disconnected where connected needed
class InputError : public MecError {
 public:
  using MecError::MecError;
};

// caller broke a documented precondition
class PreconditionError : public MecError {
 public:
  using MecError::MecError;
};

// configured enumeration or representation limit exceeded
class CapacityError : public MecError {
 public:
  using MecError::MecError;
};

// an internal invariant did not hold
class InvariantError : public MecError {
 public:
  using MecError::MecError;
};

}  // namespace meccount
