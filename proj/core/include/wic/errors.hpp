#pragma once

#include <stdexcept>
#include <string>

namespace wic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  Malformed,
  WeightOutOfRange,
  DuplicateArc,
  IndexOutOfRange,
};

const char* to_string(ParseErrorKind kind);

/// Malformed input text. `line()` is 1-based; 0 means "end of input".
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

/// An operation was called on arguments that violate its precondition
/// (partial coloring, invalid decomposition, non-dyadic weights, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Checked 64-bit arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A configured size guard was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace wic
