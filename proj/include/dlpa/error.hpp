#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlpa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Concrete-syntax error with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
  std::vector<std::string> expected_;
};

/// An assignment literal with no bindings, e.g. `{}`.
class EmptyAssignmentError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Brute-force enumeration was asked to cover more atoms than allowed.
class InfeasibleSizeError : public Error {
 public:
  InfeasibleSizeError(std::size_t atoms, std::size_t cap);
  std::size_t atoms() const noexcept { return atoms_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t atoms_;
  std::size_t cap_;
};

/// An operation was called outside its domain (starred input to the
/// star-free procedure, multi-atom assignment given to the PDL emitter, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace dlpa
