#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semint {

/// Base of every error the library throws. The kind maps onto the CLI's
/// exit status: 1 = I/O, 2 = query syntax, 3 = data validation.
class Error : public std::runtime_error {
 public:
  enum class Kind { io, query, data };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

  int exit_code() const noexcept {
    switch (kind_) {
      case Kind::io: return 1;
      case Kind::query: return 2;
      case Kind::data: return 3;
    }
    return 1;
  }

 private:
  Kind kind_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(Kind::io, message) {}
};

/// Malformed input data: bad N-Triples, OBO, CSV or a structurally invalid
/// triple. `line` is 1-based, 0 when no position applies.
class DataError : public Error {
 public:
  explicit DataError(const std::string& message, std::size_t line = 0)
      : Error(Kind::data, line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Query text rejected by the SPARQL parser.
class QueryError : public Error {
 public:
  QueryError(const std::string& message, std::size_t line, std::size_t column)
      : Error(Kind::query, "query line " + std::to_string(line) + ", column " +
                               std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownPrefixError : public Error {
 public:
  explicit UnknownPrefixError(const std::string& prefix)
      : Error(Kind::query, "unknown prefix '" + prefix + ":'"), prefix_(prefix) {}

  const std::string& prefix() const noexcept { return prefix_; }

 private:
  std::string prefix_;
};

}  // namespace semint
