#ifndef HYPERSET_ERROR_HPP
#define HYPERSET_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperset {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graphs, unbound names in equation systems, free-variable
// violations and similar contract failures on otherwise well-formed input.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Syntax errors in set literals and formulas. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A computation hit a configured bound. bound() names the exhausted limit.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(std::string bound, const std::string& message)
      : Error(message), bound_(std::move(bound)) {}

  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

}  // namespace hyperset

#endif  // HYPERSET_ERROR_HPP
