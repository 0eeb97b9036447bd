#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tabjson/json_value.hpp"

namespace tabjson {

struct LintConfig {
  /// Largest tolerated share of an object path's distinct keys that occur in
  /// exactly one record.
  double max_singleton_key_ratio = 0.5;
  bool flag_numeric_keys = true;
  /// null never conflicts with another type.
  bool allow_null = true;
  /// The singleton-key check needs this many records at a path.
  std::size_t min_records = 3;
  /// "NA", "NaN", "Inf" and "-Inf" strings count as numbers where numbers
  /// occur at the same path.
  bool numeric_special_strings = true;

  /// Throws std::invalid_argument for a ratio outside [0, 1].
  void check() const;
};

enum class LintRule { FixedKeys, DataKey, FieldType, ArrayHomogeneity };
enum class LintSeverity { Warn, Error };

std::string_view rule_name(LintRule rule);
std::string_view severity_name(LintSeverity severity);

struct Finding {
  LintRule rule;
  LintSeverity severity;
  /// "" is the document root, ".key" descends into a member, "[]" into
  /// array elements.
  std::string path;
  std::string detail;
  /// Indices of documents that exhibit the problem.
  std::vector<std::size_t> witnesses;
};

struct PathStats {
  std::size_t objects = 0;
  std::size_t arrays = 0;
  bool is_field = false;
  std::map<std::string, std::size_t> keys;           // key -> records containing it
  std::map<std::string, std::size_t> value_types;    // type tag -> values seen here
  std::map<std::string, std::size_t> element_types;  // type tag -> array elements seen here
};

struct LintReport {
  std::vector<Finding> findings;
  std::size_t documents = 0;
  std::map<std::string, PathStats> paths;

  bool clean() const { return findings.empty(); }
  std::string to_json(bool pretty = false) const;
  std::string to_text() const;
};

/// Statistics over a stream of documents. Merging is associative and
/// commutative up to witness numbering, so shards can be scanned apart.
class LintAccumulator {
 public:
  explicit LintAccumulator(LintConfig cfg = {});

  void add(const JsonValue& document);
  /// Appends `other`'s documents after this one's.
  void merge(const LintAccumulator& other);
  std::size_t documents() const { return documents_; }
  LintReport finish() const;

 private:
  struct Witnessed {
    std::map<std::string, std::size_t> count;
    std::map<std::string, std::vector<std::size_t>> docs;  // first few witnesses per entry
  };
  struct Stats {
    std::size_t objects = 0;
    std::size_t arrays = 0;
    bool is_field = false;
    Witnessed keys;
    Witnessed values;
    Witnessed elements;
  };

  void walk(const JsonValue& value, const std::string& path, bool is_field, std::size_t doc);
  static void bump(Witnessed& w, const std::string& entry, std::size_t doc);
  std::string tag(const JsonValue& value) const;

  LintConfig cfg_;
  std::size_t documents_ = 0;
  std::map<std::string, Stats> stats_;
};

/// Runs both rules over `documents`. Throws std::invalid_argument when there
/// are no documents.
LintReport lint(std::span<const JsonValue> documents, const LintConfig& cfg = {});

bool is_numeric_key(std::string_view key);

}  // namespace tabjson
