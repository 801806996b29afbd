#pragma once

#include <stdexcept>
#include <string>

namespace dimer {

enum class ErrorKind {
  Input,        // malformed document, I/O
  Validation,   // model violates an invariant
  Inconsistent, // model passes validation but is not consistent
  NonGeneric,   // stability parameter lies on a wall
  CrossCheck,   // two independent computations disagree
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dimer
