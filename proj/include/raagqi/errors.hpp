#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raagqi {

/// Malformed graph input. `line` and `column` are 1-based; zero means the
/// location is not known (for example a semantic error inside a JSON array,
/// where `column` carries the element index instead).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Invalid arguments to a graph operation: unknown vertex, a set that is not
/// a subset of the graph, a graph that violates simpliciality.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input does not satisfy an operation's documented precondition
/// (for example a cubulation request on a graph that is not of type II).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search exceeded its configured size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An internal consistency check failed. Seeing one of these means there is
/// a bug in the library, not in the input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace raagqi
