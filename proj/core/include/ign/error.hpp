#pragma once

#include <stdexcept>
#include <string>

namespace ign {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: dimension mismatch, invalid parameter, violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Some closed-neighbourhood sum (or cross sum, or row/column sum) is zero.
class NonNormalizable : public Error {
 public:
  using Error::Error;
};

/// A set expected to be a maximal independent set is not one.
class NotMaximalIndependent : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A maximal independent set whose density is below what an operation needs.
class InsufficientDensity : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Input exceeds a combinatorial size guard.
class SizeLimitExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Malformed input file. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace ign
