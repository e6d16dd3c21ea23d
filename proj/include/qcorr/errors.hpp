#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcorr {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A dimension or qubit count exceeds a configured cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Matrix shape or structure does not match what an operation requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class PartitionError : public Error {
 public:
  using Error::Error;
};

// An operation's stated precondition (an identity it relies on) failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class HermiticityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TraceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PositivityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NormalizationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Malformed state file (wrong field types, amplitude count mismatch).
class SchemaError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qcorr
