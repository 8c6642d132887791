#pragma once

#include <stdexcept>
#include <string>

namespace twred {

/// Base class for all library errors. Each subclass maps to a CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const { return 4; }
};

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }
  int exit_code() const override { return 2; }

 private:
  int line_;
};

/// An operation was called on an input outside its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

/// Assignment does not match the instance it is evaluated against.
class DomainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Instance exceeds the size guard of an exponential-time routine.
class SizeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An internal invariant did not hold. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 4; }
};

}  // namespace twred
