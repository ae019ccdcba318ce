#pragma once

#include <stdexcept>
#include <string>

namespace cohom {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  Internal,
  Arithmetic,     // division by zero, radicand out of range
  Parse,          // scalar grammar / JSON schema
  Usage,
  Invariant,      // diagram validation failure
  Rank,           // rank defect or parity conflict in the solver
  IdenticallyZero,
  Verify,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

int exit_code(ErrorKind kind);

} // namespace cohom
