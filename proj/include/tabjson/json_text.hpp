#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tabjson/json_value.hpp"

namespace tabjson {

enum class DiagnosticSeverity { Error, Warning };

struct ParseDiagnostic {
  std::size_t offset = 0;  // byte offset into the input
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in bytes
  std::string message;
  DiagnosticSeverity severity = DiagnosticSeverity::Error;

  std::string to_string() const;
};

/// Outcome of parse_json: a value when the document is well formed, plus any
/// warnings (duplicate keys, BOM) or the single error that stopped parsing.
struct ParseResult {
  std::optional<JsonValue> value;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  explicit operator bool() const { return ok(); }
  const ParseDiagnostic* error() const;
};

class JsonParseError : public std::runtime_error {
 public:
  explicit JsonParseError(ParseDiagnostic diag)
      : std::runtime_error(diag.to_string()), diagnostic_(std::move(diag)) {}
  const ParseDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

/// Strict ECMA-404 parser over UTF-8 input. Never throws on malformed input.
ParseResult parse_json(std::string_view text);

/// As parse_json, but throws JsonParseError on the first error.
JsonValue parse_json_or_throw(std::string_view text);

/// Whitespace conventions for serialize_json.
///   Compact: no insignificant whitespace.
///   Pretty:  two-space indentation, one element or member per line.
///   Spaced:  single-line with `[ a, b ]` and `{ "k" : v }` spacing.
enum class JsonStyle { Compact, Pretty, Spaced };

std::string serialize_json(const JsonValue& value, JsonStyle style = JsonStyle::Compact);

/// Text of a number as serialize_json prints it.
std::string format_json_number(const JsonNumber& number);

bool is_valid_utf8(std::string_view text);

/// Removes whitespace outside string literals. Used to compare JSON texts
/// that differ only in layout.
std::string strip_json_whitespace(std::string_view text);

}  // namespace tabjson
