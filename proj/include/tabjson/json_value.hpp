#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tabjson {

/// A JSON number: a finite double plus a flag recording that the lexeme was a
/// plain integer (no fraction, no exponent). The flag only affects printing.
struct JsonNumber {
  double value = 0.0;
  bool integral = false;

  friend bool operator==(const JsonNumber&, const JsonNumber&) = default;
};

enum class JsonType { Null, Bool, Number, String, Array, Object };

std::string_view json_type_name(JsonType type);

class JsonValue;
struct JsonMember;

using JsonArray = std::vector<JsonValue>;
/// Objects keep members in source order.
using JsonObject = std::vector<JsonMember>;

class JsonValue {
 public:
  JsonValue() = default;
  JsonValue(std::nullptr_t) {}
  JsonValue(bool b) : data_(b) {}
  JsonValue(JsonNumber n) : data_(n) {}
  JsonValue(std::string s) : data_(std::move(s)) {}
  JsonValue(std::string_view s) : data_(std::string(s)) {}
  JsonValue(const char* s) : data_(std::string(s)) {}
  JsonValue(JsonArray a);
  JsonValue(JsonObject o);

  static JsonValue number(double v) { return JsonNumber{v, false}; }
  static JsonValue integer(std::int64_t v) {
    return JsonNumber{static_cast<double>(v), true};
  }

  JsonType type() const { return static_cast<JsonType>(data_.index()); }
  bool is_null() const { return type() == JsonType::Null; }
  bool is_bool() const { return type() == JsonType::Bool; }
  bool is_number() const { return type() == JsonType::Number; }
  bool is_string() const { return type() == JsonType::String; }
  bool is_array() const { return type() == JsonType::Array; }
  bool is_object() const { return type() == JsonType::Object; }
  bool is_primitive() const { return !is_array() && !is_object(); }

  bool as_bool() const { return std::get<bool>(data_); }
  const JsonNumber& as_number() const { return std::get<JsonNumber>(data_); }
  const std::string& as_string() const { return std::get<std::string>(data_); }
  const JsonArray& as_array() const { return std::get<JsonArray>(data_); }
  JsonArray& as_array() { return std::get<JsonArray>(data_); }
  const JsonObject& as_object() const { return std::get<JsonObject>(data_); }
  JsonObject& as_object() { return std::get<JsonObject>(data_); }

  /// First member with the given key, or nullptr. Objects never hold
  /// duplicates after parsing.
  const JsonValue* find(std::string_view key) const;

  friend bool operator==(const JsonValue& a, const JsonValue& b);

 private:
  std::variant<std::monostate, bool, JsonNumber, std::string, JsonArray, JsonObject> data_;
};

struct JsonMember {
  std::string key;
  JsonValue value;

  friend bool operator==(const JsonMember& a, const JsonMember& b) {
    return a.key == b.key && a.value == b.value;
  }
};

inline JsonValue::JsonValue(JsonArray a) : data_(std::move(a)) {}
inline JsonValue::JsonValue(JsonObject o) : data_(std::move(o)) {}

}  // namespace tabjson
