#include "tabjson/json_text.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace tabjson {

std::string_view json_type_name(JsonType type) {
  switch (type) {
    case JsonType::Null: return "null";
    case JsonType::Bool: return "bool";
    case JsonType::Number: return "number";
    case JsonType::String: return "string";
    case JsonType::Array: return "array";
    case JsonType::Object: return "object";
  }
  return "unknown";
}

const JsonValue* JsonValue::find(std::string_view key) const {
  if (!is_object()) return nullptr;
  for (const auto& m : as_object()) {
    if (m.key == key) return &m.value;
  }
  return nullptr;
}

bool operator==(const JsonValue& a, const JsonValue& b) { return a.data_ == b.data_; }

std::string ParseDiagnostic::to_string() const {
  std::string s = std::to_string(line) + ":" + std::to_string(column) + ": ";
  s += severity == DiagnosticSeverity::Error ? "error: " : "warning: ";
  s += message;
  return s;
}

const ParseDiagnostic* ParseResult::error() const {
  for (const auto& d : diagnostics) {
    if (d.severity == DiagnosticSeverity::Error) return &d;
  }
  return nullptr;
}

namespace {

constexpr std::size_t kMaxDepth = 512;

struct ParseFailure {};

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run() {
    ParseResult result;
    try {
      if (text_.substr(0, 3) == "\xEF\xBB\xBF") {
        warn("byte order mark ignored", 0);
        pos_ = 3;
      }
      skip_ws();
      JsonValue v = parse_value(0);
      skip_ws();
      if (pos_ < text_.size()) fail("trailing characters after JSON document", pos_);
      result.value = std::move(v);
    } catch (const ParseFailure&) {
    }
    result.diagnostics = std::move(diags_);
    return result;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<ParseDiagnostic> diags_;

  ParseDiagnostic make_diag(std::string msg, std::size_t at, DiagnosticSeverity sev) const {
    ParseDiagnostic d;
    if (!text_.empty()) at = std::min(at, text_.size() - 1);
    else at = 0;
    d.offset = at;
    for (std::size_t i = 0; i < at; ++i) {
      if (text_[i] == '\n') {
        ++d.line;
        d.column = 1;
      } else {
        ++d.column;
      }
    }
    d.message = std::move(msg);
    d.severity = sev;
    return d;
  }

  [[noreturn]] void fail(std::string msg, std::size_t at) {
    diags_.push_back(make_diag(std::move(msg), at, DiagnosticSeverity::Error));
    throw ParseFailure{};
  }

  void warn(std::string msg, std::size_t at) {
    diags_.push_back(make_diag(std::move(msg), at, DiagnosticSeverity::Warning));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && is_ws(peek())) ++pos_;
  }

  void expect_literal(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) != lit) {
      fail("invalid literal, expected '" + std::string(lit) + "'", pos_);
    }
    pos_ += lit.size();
  }

  JsonValue parse_value(std::size_t depth) {
    if (at_end()) fail("unexpected end of input", pos_);
    switch (peek()) {
      case '{': return parse_object(depth + 1);
      case '[': return parse_array(depth + 1);
      case '"': return JsonValue(parse_string());
      case 't': expect_literal("true"); return JsonValue(true);
      case 'f': expect_literal("false"); return JsonValue(false);
      case 'n': expect_literal("null"); return JsonValue(nullptr);
      default:
        if (peek() == '-' || is_digit(peek())) return parse_number();
        if (static_cast<unsigned char>(peek()) >= 0x80) fail("unexpected non-ASCII byte", pos_);
        fail(std::string("unexpected character '") + peek() + "'", pos_);
    }
  }

  JsonValue parse_array(std::size_t depth) {
    if (depth > kMaxDepth) fail("nesting deeper than 512 levels", pos_);
    ++pos_;  // '['
    JsonArray items;
    skip_ws();
    if (!at_end() && peek() == ']') {
      ++pos_;
      return JsonValue(std::move(items));
    }
    for (;;) {
      skip_ws();
      items.push_back(parse_value(depth));
      skip_ws();
      if (at_end()) fail("unterminated array", pos_);
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        return JsonValue(std::move(items));
      }
      fail("expected ',' or ']' in array", pos_);
    }
  }

  JsonValue parse_object(std::size_t depth) {
    if (depth > kMaxDepth) fail("nesting deeper than 512 levels", pos_);
    ++pos_;  // '{'
    JsonObject members;
    std::unordered_map<std::string, std::size_t> index;
    skip_ws();
    if (!at_end() && peek() == '}') {
      ++pos_;
      return JsonValue(std::move(members));
    }
    for (;;) {
      skip_ws();
      if (at_end()) fail("unterminated object", pos_);
      if (peek() != '"') fail("expected string key in object", pos_);
      std::size_t key_pos = pos_;
      std::string key = parse_string();
      skip_ws();
      if (at_end() || peek() != ':') fail("expected ':' after object key", pos_);
      ++pos_;
      skip_ws();
      JsonValue value = parse_value(depth);
      auto [it, inserted] = index.emplace(key, members.size());
      if (inserted) {
        members.push_back(JsonMember{std::move(key), std::move(value)});
      } else {
        warn("duplicate key \"" + key + "\"; last occurrence wins", key_pos);
        members[it->second].value = std::move(value);
      }
      skip_ws();
      if (at_end()) fail("unterminated object", pos_);
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == '}') {
        ++pos_;
        return JsonValue(std::move(members));
      }
      fail("expected ',' or '}' in object", pos_);
    }
  }

  std::uint32_t parse_hex4() {
    if (pos_ + 4 > text_.size()) fail("truncated \\u escape", pos_);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      char c = text_[pos_ + i];
      v <<= 4;
      if (c >= '0' && c <= '9') v |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v |= static_cast<std::uint32_t>(c - 'A' + 10);
      else fail("invalid hex digit in \\u escape", pos_ + i);
    }
    pos_ += 4;
    return v;
  }

  // Copies one multi-byte UTF-8 sequence starting at pos_, validating it.
  void copy_utf8_sequence(std::string& out) {
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text_[i]); };
    unsigned char lead = byte(pos_);
    std::size_t len = 0;
    unsigned char lo = 0x80, hi = 0xBF;
    if (lead >= 0xC2 && lead <= 0xDF) {
      len = 2;
    } else if (lead >= 0xE0 && lead <= 0xEF) {
      len = 3;
      if (lead == 0xE0) lo = 0xA0;
      if (lead == 0xED) hi = 0x9F;
    } else if (lead >= 0xF0 && lead <= 0xF4) {
      len = 4;
      if (lead == 0xF0) lo = 0x90;
      if (lead == 0xF4) hi = 0x8F;
    } else {
      fail("invalid UTF-8 lead byte", pos_);
    }
    if (pos_ + len > text_.size()) fail("truncated UTF-8 sequence", pos_);
    for (std::size_t i = 1; i < len; ++i) {
      unsigned char c = byte(pos_ + i);
      unsigned char min = i == 1 ? lo : 0x80;
      unsigned char max = i == 1 ? hi : 0xBF;
      if (c < min || c > max) fail("invalid UTF-8 continuation byte", pos_ + i);
    }
    out.append(text_.substr(pos_, len));
    pos_ += len;
  }

  std::string parse_string() {
    std::size_t start = pos_;
    ++pos_;  // opening quote
    std::string out;
    for (;;) {
      if (at_end()) fail("unterminated string", start);
      unsigned char c = static_cast<unsigned char>(peek());
      if (c == '"') {
        ++pos_;
        return out;
      }
      if (c < 0x20) fail("unescaped control character in string", pos_);
      if (c >= 0x80) {
        copy_utf8_sequence(out);
        continue;
      }
      if (c != '\\') {
        out += static_cast<char>(c);
        ++pos_;
        continue;
      }
      std::size_t esc_pos = pos_;
      ++pos_;
      if (at_end()) fail("unterminated escape sequence", esc_pos);
      char e = peek();
      ++pos_;
      switch (e) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case '/': out += '/'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case 'u': {
          std::uint32_t cp = parse_hex4();
          if (cp >= 0xDC00 && cp <= 0xDFFF) fail("unpaired low surrogate in \\u escape", esc_pos);
          if (cp >= 0xD800 && cp <= 0xDBFF) {
            if (text_.substr(pos_, 2) != "\\u") fail("unpaired high surrogate in \\u escape", esc_pos);
            pos_ += 2;
            std::uint32_t low = parse_hex4();
            if (low < 0xDC00 || low > 0xDFFF) fail("unpaired high surrogate in \\u escape", esc_pos);
            cp = 0x10000 + ((cp - 0xD800) << 10) + (low - 0xDC00);
          }
          append_utf8(out, cp);
          break;
        }
        default:
          fail(std::string("invalid escape '\\") + e + "'", esc_pos);
      }
    }
  }

  JsonValue parse_number() {
    std::size_t start = pos_;
    bool integral = true;
    if (peek() == '-') ++pos_;
    if (at_end() || !is_digit(peek())) fail("expected digit in number", pos_);
    if (peek() == '0') {
      ++pos_;
    } else {
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    if (!at_end() && peek() == '.') {
      integral = false;
      ++pos_;
      if (at_end() || !is_digit(peek())) fail("expected digit after decimal point", pos_);
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      integral = false;
      ++pos_;
      if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
      if (at_end() || !is_digit(peek())) fail("expected digit in exponent", pos_);
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    std::string_view lexeme = text_.substr(start, pos_ - start);
    double value = 0.0;
    auto res = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
    if (res.ec == std::errc::result_out_of_range) {
      if (decimal_magnitude(lexeme) < 0) {
        value = lexeme.front() == '-' ? -0.0 : 0.0;
      } else {
        fail("number out of range for a 64-bit float", start);
      }
    } else if (res.ec != std::errc() || res.ptr != lexeme.data() + lexeme.size()) {
      fail("malformed number", start);
    }
    return JsonValue(JsonNumber{value, integral});
  }

  // Decimal exponent of the leading significant digit; only the sign matters.
  static long decimal_magnitude(std::string_view lexeme) {
    std::size_t i = lexeme.front() == '-' ? 1 : 0;
    long int_digits = 0;
    long leading_frac_zeros = 0;
    bool seen_nonzero = false;
    for (; i < lexeme.size() && is_digit(lexeme[i]); ++i) {
      if (lexeme[i] != '0') seen_nonzero = true;
      if (seen_nonzero) ++int_digits;
    }
    if (i < lexeme.size() && lexeme[i] == '.') {
      for (++i; i < lexeme.size() && is_digit(lexeme[i]); ++i) {
        if (!seen_nonzero) {
          if (lexeme[i] == '0') ++leading_frac_zeros;
          else seen_nonzero = true;
        }
      }
    }
    if (!seen_nonzero) return -1;
    long exp = 0;
    if (i < lexeme.size() && (lexeme[i] == 'e' || lexeme[i] == 'E')) {
      ++i;
      bool neg = false;
      if (lexeme[i] == '+' || lexeme[i] == '-') neg = lexeme[i++] == '-';
      for (; i < lexeme.size(); ++i) {
        exp = std::min(exp * 10 + (lexeme[i] - '0'), 1'000'000'000L);
      }
      if (neg) exp = -exp;
    }
    return (int_digits > 0 ? int_digits - 1 : -(leading_frac_zeros + 1)) + exp;
  }
};

void write_string(std::string& out, std::string_view s) {
  static constexpr char kHex[] = "0123456789abcdef";
  out += '"';
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          out += "\\u00";
          out += kHex[c >> 4];
          out += kHex[c & 0xF];
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

class Writer {
 public:
  Writer(std::string& out, JsonStyle style) : out_(out), style_(style) {}

  void write(const JsonValue& v, int indent) {
    switch (v.type()) {
      case JsonType::Null: out_ += "null"; break;
      case JsonType::Bool: out_ += v.as_bool() ? "true" : "false"; break;
      case JsonType::Number: out_ += format_json_number(v.as_number()); break;
      case JsonType::String: write_string(out_, v.as_string()); break;
      case JsonType::Array: write_array(v.as_array(), indent); break;
      case JsonType::Object: write_object(v.as_object(), indent); break;
    }
  }

 private:
  std::string& out_;
  JsonStyle style_;

  void newline(int indent) {
    out_ += '\n';
    out_.append(static_cast<std::size_t>(indent) * 2, ' ');
  }

  void write_array(const JsonArray& a, int indent) {
    if (a.empty()) {
      out_ += style_ == JsonStyle::Spaced ? "[  ]" : "[]";
      return;
    }
    out_ += '[';
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0) out_ += ',';
      if (style_ == JsonStyle::Pretty) newline(indent + 1);
      else if (style_ == JsonStyle::Spaced) out_ += ' ';
      write(a[i], indent + 1);
    }
    if (style_ == JsonStyle::Pretty) newline(indent);
    else if (style_ == JsonStyle::Spaced) out_ += ' ';
    out_ += ']';
  }

  void write_object(const JsonObject& o, int indent) {
    if (o.empty()) {
      out_ += "{}";
      return;
    }
    out_ += '{';
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (i > 0) out_ += ',';
      if (style_ == JsonStyle::Pretty) newline(indent + 1);
      else if (style_ == JsonStyle::Spaced) out_ += ' ';
      write_string(out_, o[i].key);
      out_ += style_ == JsonStyle::Compact ? ":" : " : ";
      write(o[i].value, indent + 1);
    }
    if (style_ == JsonStyle::Pretty) newline(indent);
    else if (style_ == JsonStyle::Spaced) out_ += ' ';
    out_ += '}';
  }
};

}  // namespace

ParseResult parse_json(std::string_view text) { return Parser(text).run(); }

JsonValue parse_json_or_throw(std::string_view text) {
  ParseResult r = parse_json(text);
  if (!r.ok()) throw JsonParseError(*r.error());
  return std::move(*r.value);
}

std::string format_json_number(const JsonNumber& number) {
  char buf[512];
  if (number.integral) {
    auto r = std::to_chars(buf, buf + sizeof buf, number.value, std::chars_format::fixed);
    return std::string(buf, r.ptr);
  }
  auto r = std::to_chars(buf, buf + sizeof buf, number.value);
  std::string s(buf, r.ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string serialize_json(const JsonValue& value, JsonStyle style) {
  std::string out;
  Writer(out, style).write(value, 0);
  return out;
}

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    auto lead = static_cast<unsigned char>(text[i]);
    if (lead < 0x80) {
      ++i;
      continue;
    }
    std::size_t len = 0;
    unsigned char lo = 0x80, hi = 0xBF;
    if (lead >= 0xC2 && lead <= 0xDF) {
      len = 2;
    } else if (lead >= 0xE0 && lead <= 0xEF) {
      len = 3;
      if (lead == 0xE0) lo = 0xA0;
      if (lead == 0xED) hi = 0x9F;
    } else if (lead >= 0xF0 && lead <= 0xF4) {
      len = 4;
      if (lead == 0xF0) lo = 0x90;
      if (lead == 0xF4) hi = 0x8F;
    } else {
      return false;
    }
    if (i + len > text.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      auto c = static_cast<unsigned char>(text[i + k]);
      if (c < (k == 1 ? lo : 0x80) || c > (k == 1 ? hi : 0xBF)) return false;
    }
    i += len;
  }
  return true;
}

std::string strip_json_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_string = false;
  bool escaped = false;
  for (char c : text) {
    if (in_string) {
      out += c;
      if (escaped) escaped = false;
      else if (c == '\\') escaped = true;
      else if (c == '"') in_string = false;
    } else if (c == '"') {
      in_string = true;
      out += c;
    } else if (!is_ws(c)) {
      out += c;
    }
  }
  return out;
}

}  // namespace tabjson
