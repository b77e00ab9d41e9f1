// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace six {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, sequent or n-sequent text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A valuation was asked for a variable it does not define.
class MissingVariableError : public Error {
 public:
  explicit MissingVariableError(const std::string& name)
      : Error("assignment has no value for variable '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A formula uses a connective the matrix has no table for.
class UnknownConnectiveError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive oracle or search would exceed a configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class MatrixError : public Error {
 public:
  using Error::Error;
};

/// An n-sequent does not have one cell per matrix value.
class IndexMismatchError : public Error {
 public:
  using Error::Error;
};

/// Premises of a signed rule do not share a context.
class ContextMismatchError : public Error {
 public:
  using Error::Error;
};

/// A premise of a signed rule lacks its principal signed formula.
class SignedFormulaMissingError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two schematic rules were expected to share a conclusion.
class ConclusionMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace six
