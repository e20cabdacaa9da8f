#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pimcert {

// Base of every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedInterval : Error {
  using Error::Error;
};

struct DivisionByZeroInterval : Error {
  using Error::Error;
};

// Thrown when an affine operand's range makes the operation undefined
// (reciprocal of a range containing zero, and friends).
struct DomainError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;  // byte offset into the input text
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct EvalError : Error {
  using Error::Error;
};

struct UnboundParameter : Error {
  using Error::Error;
};

struct OutOfBox : Error {
  using Error::Error;
};

struct NegativeRadius : Error {
  using Error::Error;
};

struct VertexBudgetExceeded : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

struct NotNonnegative : Error {
  using Error::Error;
};

struct NotSymmetric : Error {
  using Error::Error;
};

// Malformed problem documents (missing fields, bad shapes, unknown names).
struct InvalidDocument : Error {
  using Error::Error;
};

}  // namespace pimcert
