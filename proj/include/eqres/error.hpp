#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Operands live in different ring contexts, or a symbol is not declared.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Exact division left a nonzero remainder, or the divisor was zero.
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// Input system is not homogeneous, degrees disagree, or equivariance fails.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A precondition on sizes, indices or caps was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Macaulay reduced minor stayed singular after every change of variables.
class DegenerateSpecialization : public Error {
 public:
  using Error::Error;
};

/// Symbolic determinant requested above the configured matrix-size cap.
class SymbolicCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input file missing, unreadable or malformed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqres
