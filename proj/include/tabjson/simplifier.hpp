#pragma once

#include <optional>
#include <span>

#include "tabjson/data_model.hpp"
#include "tabjson/json_value.hpp"

namespace tabjson {

struct SimplifyOptions {
  bool simplify_vector = true;
  bool simplify_matrix = true;
  bool simplify_dataframe = true;
  /// Turn a "$row" string field present in every record into Frame::row_names.
  bool capture_row_names = false;

  /// Everything off: arrays become lists, primitives length-1 vectors.
  static SimplifyOptions none() { return {false, false, false, false}; }

  /// Throws std::invalid_argument when matrix or frame detection is on
  /// without vector detection.
  void check() const;
};

TabValue simplify(const JsonValue& value, const SimplifyOptions& opts = {});

/// Picks vector, matrix, frame or list for the items of one JSON array.
TabValue classify_array(const JsonArray& items, const SimplifyOptions& opts = {});

/// Types a run of primitives. A null pointer or JSON null is a missing slot.
/// Returns nullopt for mixtures that have no common vector kind.
std::optional<Vector> simplify_vector_rule(std::span<const JsonValue* const> items);

/// Rows of equal length >= 1 whose pooled elements type as one vector kind.
/// A primitive item counts as a row of length one.
std::optional<Matrix> simplify_matrix_rule(const JsonArray& items, const SimplifyOptions& opts = {});

/// Records to frame; nullopt when an item is not an object or record keys
/// collide after empty-key renaming.
std::optional<Frame> simplify_frame_rule(std::span<const JsonValue* const> records,
                                         const SimplifyOptions& opts = {});
std::optional<Frame> simplify_frame_rule(const JsonArray& records, const SimplifyOptions& opts = {});

/// Column-mode input: an object of equal-length arrays (nested objects for
/// nested frames).
std::optional<Frame> simplify_frame_columns(const JsonValue& object, const SimplifyOptions& opts = {});

}  // namespace tabjson
