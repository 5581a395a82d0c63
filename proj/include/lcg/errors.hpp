#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcg {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured safety limit (population, entry cap) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A coordinate computation left the signed 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the operation's domain (e.g. canonicalizing an empty set).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A collision arrangement that does not start as two separated groups.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  MalformedHeader,
  UnknownToken,
  ExtentOverrun,
  UnsupportedRule,
  InvalidCharacter,
};

const char* to_string(ParseErrorKind kind);

/// Pattern-file parse failure, positioned at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& what);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Persisted document carries a schema version this build does not read.
class VersionError : public Error {
 public:
  using Error::Error;
};

/// Persisted document is structurally invalid.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcg
