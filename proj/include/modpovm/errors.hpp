#pragma once

#include <stdexcept>
#include <string>

namespace modpovm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape or length mismatch between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Division by zero, non-rational where a rational is required, etc.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// A configured size or order bound was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed user input (text formats, violated preconditions).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace modpovm
