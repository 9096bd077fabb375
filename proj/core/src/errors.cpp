#include "wic/errors.hpp"

namespace wic {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Malformed:
      return "Malformed";
    case ParseErrorKind::WeightOutOfRange:
      return "WeightOutOfRange";
    case ParseErrorKind::DuplicateArc:
      return "DuplicateArc";
    case ParseErrorKind::IndexOutOfRange:
      return "IndexOutOfRange";
  }
  return "Unknown";
}

namespace {

std::string format_parse_error(ParseErrorKind kind, int line, const std::string& detail) {
  std::string where = line > 0 ? "line " + std::to_string(line) : "end of input";
  return where + ": " + to_string(kind) + ": " + detail;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : Error(format_parse_error(kind, line, detail)), kind_(kind), line_(line) {}

}  // namespace wic
