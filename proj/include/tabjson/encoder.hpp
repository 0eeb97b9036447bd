#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tabjson/data_model.hpp"
#include "tabjson/json_text.hpp"

namespace tabjson {

enum class NaMode { Default, ForceNull };
enum class DataFrameMode { Rows, Columns };

struct EncodeOptions {
  NaMode na = NaMode::Default;
  int digits = 2;  // decimal places for doubles and complex parts, 0..17
  DataFrameMode dataframe = DataFrameMode::Rows;
  bool pretty = false;
  /// nullopt: emit "$row" only when a frame carries non-trivial row names.
  std::optional<bool> row_names;
  /// Display zone for timestamps, as minutes east of UTC.
  int utc_offset_minutes = 0;

  /// Throws std::invalid_argument when digits is out of range.
  void check() const;
};

JsonValue encode(const TabValue& value, const EncodeOptions& opts = {});
JsonValue encode_vector(const Vector& v, const EncodeOptions& opts = {});
/// Encoding of slot `i`, missing and non-finite states included.
JsonValue encode_element(const Vector& v, std::size_t i, const EncodeOptions& opts = {});
/// Token for a missing (NA) or non-finite slot. Throws std::invalid_argument
/// for Special::None and for states the kind cannot hold (e.g. integer NaN).
JsonValue encode_missing(ElementKind kind, Special special, const EncodeOptions& opts = {});
JsonValue encode_matrix(const Matrix& m, const EncodeOptions& opts = {});
JsonValue encode_list(const List& l, const EncodeOptions& opts = {});
JsonValue encode_frame_rows(const Frame& f, const EncodeOptions& opts = {});
JsonValue encode_frame_columns(const Frame& f, const EncodeOptions& opts = {});

/// Rounds half away from zero to `digits` decimals. Integer-valued results
/// below 1e21 in magnitude carry the integral flag.
JsonNumber format_double(double x, int digits);
std::string format_complex(Complex c, int digits);
std::string format_date(std::int32_t days_since_epoch);
std::string format_timestamp(std::int64_t seconds_since_epoch, int utc_offset_minutes = 0);

/// encode + serialize; style defaults to Pretty or Compact per opts.pretty.
std::string to_json(const TabValue& value, const EncodeOptions& opts = {},
                    std::optional<JsonStyle> style = std::nullopt);

}  // namespace tabjson
