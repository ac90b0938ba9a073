#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laglab {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects disagree on their uniformity (edge length).
class UniformityError : public Error {
 public:
  using Error::Error;
};

/// A vertex index falls outside [1, n].
class VertexRangeError : public Error {
 public:
  using Error::Error;
};

/// A weighting vector is too short for the graph it is applied to.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input is outside the domain an operation is willing to handle
/// (parameter bounds, graph size limits, missing preconditions).
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list or builtin-spec text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace laglab
