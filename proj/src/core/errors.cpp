#include <string>

#include "lcg/errors.hpp"

namespace lcg {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::UnknownToken: return "unknown token";
    case ParseErrorKind::ExtentOverrun: return "extent overrun";
    case ParseErrorKind::UnsupportedRule: return "unsupported rule";
    case ParseErrorKind::InvalidCharacter: return "invalid character";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& what)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + to_string(kind) + ": " + what),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace lcg
