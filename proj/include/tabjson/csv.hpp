#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tabjson/data_model.hpp"
#include "tabjson/encoder.hpp"

namespace tabjson {

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& message)
      : std::runtime_error(std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised by write_csv for frames that have list or nested frame columns.
class CsvShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads comma-separated text with a mandatory header row. An empty unquoted
/// cell is missing and a quoted cell is always a string. Unquoted cells type
/// their column: all `true`/`false` gives logical, numbers (optionally mixed
/// with NA, NaN, Inf, -Inf) give double. A `$row` header column becomes the
/// row names.
Frame read_csv(std::string_view text);

/// Writes a frame of vector columns. Strings and other text-encoded kinds are
/// quoted, missing values are empty, doubles follow `opts.digits`.
std::string write_csv(const Frame& frame, const EncodeOptions& opts = {});

}  // namespace tabjson
