#pragma once

#include <stdexcept>
#include <string>

namespace regui {

// Base of every error the engine throws. Callers that only care about
// "did it work" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Window with a non-positive (or NaN) width or height.
class DegenerateWindow : public Error {
 public:
  using Error::Error;
};

class InvalidBreakpoints : public Error {
 public:
  using Error::Error;
};

// Malformed spec document: not parseable as a structured text tree.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed document whose shape does not match the schema. The field
// path uses `a.b[2].c` notation; empty means the document root.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error((path.empty() ? std::string("<root>") : path) + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class NonPositiveRatio : public Error {
 public:
  using Error::Error;
};

// No class rule covers the ratio. Only reachable when partition validation
// was skipped.
class UnclassifiableRatio : public Error {
 public:
  using Error::Error;
};

// The resolver hit a placement keyed by an undeclared class.
class SpecInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace regui
