#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdiag {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Terms of different codimension combined into one expression.
class HomogeneityError : public Error {
 public:
  using Error::Error;
};

/// Mismatched ambient arity, out-of-range or degenerate index.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Symbol missing from the variety or cohomology model.
class UnknownSymbolError : public Error {
 public:
  using Error::Error;
};

/// Operation not available for this model (missing cover data, n = 1 divisor pushforward, ...).
class UnsupportedModelError : public Error {
 public:
  using Error::Error;
};

/// A monomial could not be brought to i-cleared form before pushforward.
class NotClearedError : public Error {
 public:
  using Error::Error;
};

/// Rewriting exceeded its budget. Never expected to fire.
class NonTerminationError : public Error {
 public:
  using Error::Error;
};

/// Malformed model, relation or report input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnknownCheckError : public Error {
 public:
  using Error::Error;
};

/// Expression text rejected by the parser; `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mdiag
