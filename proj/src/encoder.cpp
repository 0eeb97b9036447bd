#include "tabjson/encoder.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tabjson {

void EncodeOptions::check() const {
  if (digits < 0 || digits > 17) {
    throw std::invalid_argument("digits must be between 0 and 17, got " + std::to_string(digits));
  }
}

JsonNumber format_double(double x, int digits) {
  if (!std::isfinite(x)) throw std::invalid_argument("format_double needs a finite value");
  if (x == 0.0) return {0.0, true};

  // Shortest round-trip digits, then decimal rounding on that digit string.
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::fabs(x), std::chars_format::scientific);
  std::string_view sci(buf, static_cast<std::size_t>(res.ptr - buf));
  std::size_t epos = sci.find('e');
  std::string mant;
  for (char c : sci.substr(0, epos)) {
    if (c != '.') mant += c;
  }
  std::string_view exp_text = sci.substr(epos + 1);
  if (exp_text.front() == '+') exp_text.remove_prefix(1);
  int exp10 = 0;
  std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exp10);

  // value = 0.<mant> * 10^point
  long point = exp10 + 1;
  long keep = point + digits;
  if (keep < 0 || (keep == 0 && mant[0] < '5')) return {0.0, true};
  if (keep == 0) {
    mant = "1";
    point += 1;
  } else if (static_cast<std::size_t>(keep) < mant.size()) {
    bool round_up = mant[static_cast<std::size_t>(keep)] >= '5';
    mant.resize(static_cast<std::size_t>(keep));
    if (round_up) {
      std::size_t i = mant.size();
      while (i > 0 && mant[i - 1] == '9') {
        mant[i - 1] = '0';
        --i;
      }
      if (i == 0) {
        mant.insert(mant.begin(), '1');
        point += 1;
      } else {
        ++mant[i - 1];
      }
    }
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();

  std::string text = x < 0 ? "-" : "";
  text += mant[0];
  if (mant.size() > 1) {
    text += '.';
    text.append(mant, 1);
  }
  text += 'e';
  text += std::to_string(point - 1);
  double value = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), value);

  bool integral = point >= static_cast<long>(mant.size()) && std::fabs(value) < 1e21;
  return {value, integral};
}

std::string format_complex(Complex c, int digits) {
  JsonNumber re = format_double(c.re, digits);
  JsonNumber im = format_double(c.im, digits);
  std::string out = format_json_number(re);
  out += im.value < 0 ? '-' : '+';
  out += format_json_number(JsonNumber{std::fabs(im.value), im.integral});
  out += 'i';
  return out;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string ymd_text(std::int64_t days) {
  std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days}}};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

}  // namespace

std::string format_date(std::int32_t days_since_epoch) { return ymd_text(days_since_epoch); }

std::string format_timestamp(std::int64_t seconds_since_epoch, int utc_offset_minutes) {
  std::int64_t t = seconds_since_epoch + static_cast<std::int64_t>(utc_offset_minutes) * 60;
  std::int64_t days = floor_div(t, 86400);
  std::int64_t rem = t - days * 86400;
  char buf[16];
  std::snprintf(buf, sizeof buf, " %02d:%02d:%02d", static_cast<int>(rem / 3600),
                static_cast<int>(rem / 60 % 60), static_cast<int>(rem % 60));
  return ymd_text(days) + buf;
}

JsonValue encode_missing(ElementKind kind, Special special, const EncodeOptions& opts) {
  if (special == Special::None) throw std::invalid_argument("encode_missing called on a regular value");
  if (special != Special::NA && kind != ElementKind::Double) {
    throw std::invalid_argument(std::string(kind_name(kind)) + " vectors cannot hold " +
                                std::string(special_name(special)));
  }
  if (opts.na == NaMode::ForceNull) return nullptr;
  switch (kind) {
    case ElementKind::Integer:
    case ElementKind::Double:
    case ElementKind::Complex: return JsonValue(std::string(special_name(special)));
    default: return nullptr;
  }
}

JsonValue encode_element(const Vector& v, std::size_t i, const EncodeOptions& opts) {
  if (v.is_missing(i)) return encode_missing(v.kind, Special::NA, opts);
  switch (v.kind) {
    case ElementKind::Logical: return JsonValue(v.logicals[i] != 0);
    case ElementKind::Integer: return JsonValue::integer(v.integers[i]);
    case ElementKind::Double:
      if (v.special[i] != Special::None) return encode_missing(v.kind, v.special[i], opts);
      return JsonValue(format_double(v.doubles[i], opts.digits));
    case ElementKind::String: return JsonValue(v.strings[i]);
    case ElementKind::Complex: return JsonValue(format_complex(v.complexes[i], opts.digits));
    case ElementKind::Factor: return JsonValue(v.levels.at(static_cast<std::size_t>(v.integers[i] - 1)));
    case ElementKind::Date: return JsonValue(format_date(v.integers[i]));
    case ElementKind::Timestamp: return JsonValue(format_timestamp(v.seconds[i], opts.utc_offset_minutes));
  }
  throw std::logic_error("unknown element kind");
}

JsonValue encode_vector(const Vector& v, const EncodeOptions& opts) {
  JsonArray out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(encode_element(v, i, opts));
  return out;
}

JsonValue encode_matrix(const Matrix& m, const EncodeOptions& opts) {
  JsonArray rows;
  rows.reserve(m.nrow);
  for (std::size_t i = 0; i < m.nrow; ++i) {
    JsonArray row;
    row.reserve(m.ncol);
    for (std::size_t j = 0; j < m.ncol; ++j) row.push_back(encode_element(m.data, m.index(i, j), opts));
    rows.push_back(std::move(row));
  }
  return rows;
}

JsonValue encode_list(const List& l, const EncodeOptions& opts) {
  if (!l.names) {
    JsonArray out;
    out.reserve(l.items.size());
    for (const auto& item : l.items) out.push_back(encode(item, opts));
    return out;
  }
  JsonObject out;
  out.reserve(l.items.size());
  for (std::size_t i = 0; i < l.items.size(); ++i) {
    const std::string& name = (*l.names)[i];
    out.push_back(JsonMember{name.empty() ? std::to_string(i + 1) : name, encode(l.items[i], opts)});
  }
  return out;
}

namespace {

bool all_missing(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v.is_missing(i)) return false;
  }
  return v.size() > 0;
}

bool trivial_row_names(const Frame& f) {
  if (!f.row_names) return true;
  for (std::size_t i = 0; i < f.row_names->size(); ++i) {
    if ((*f.row_names)[i] != std::to_string(i + 1)) return false;
  }
  return true;
}

bool wants_row_names(const Frame& f, const EncodeOptions& opts) {
  if (opts.row_names) return *opts.row_names;
  return !trivial_row_names(f);
}

std::string row_name(const Frame& f, std::size_t r) {
  return f.row_names ? (*f.row_names)[r] : std::to_string(r + 1);
}

void append_record_fields(JsonObject& record, const Frame& f, std::size_t r, const EncodeOptions& opts) {
  for (const auto& col : f.columns) {
    if (const auto* v = std::get_if<Vector>(&col.column)) {
      if (v->is_missing(r) && opts.na == NaMode::Default && !all_missing(*v)) continue;
      record.push_back(JsonMember{col.name, encode_element(*v, r, opts)});
    } else if (const auto* nested = std::get_if<Boxed<Frame>>(&col.column)) {
      JsonObject sub;
      append_record_fields(sub, **nested, r, opts);
      record.push_back(JsonMember{col.name, std::move(sub)});
    } else {
      const auto& lc = std::get<ListColumn>(col.column);
      record.push_back(JsonMember{col.name, encode(lc.items[r], opts)});
    }
  }
}

}  // namespace

JsonValue encode_frame_rows(const Frame& f, const EncodeOptions& opts) {
  bool with_names = wants_row_names(f, opts);
  JsonArray rows;
  rows.reserve(f.nrow);
  for (std::size_t r = 0; r < f.nrow; ++r) {
    JsonObject record;
    if (with_names) record.push_back(JsonMember{"$row", row_name(f, r)});
    append_record_fields(record, f, r, opts);
    rows.push_back(std::move(record));
  }
  return rows;
}

JsonValue encode_frame_columns(const Frame& f, const EncodeOptions& opts) {
  JsonObject out;
  if (wants_row_names(f, opts)) {
    JsonArray names;
    for (std::size_t r = 0; r < f.nrow; ++r) names.push_back(row_name(f, r));
    out.push_back(JsonMember{"$row", std::move(names)});
  }
  for (const auto& col : f.columns) {
    if (const auto* v = std::get_if<Vector>(&col.column)) {
      out.push_back(JsonMember{col.name, encode_vector(*v, opts)});
    } else if (const auto* nested = std::get_if<Boxed<Frame>>(&col.column)) {
      out.push_back(JsonMember{col.name, encode_frame_columns(**nested, opts)});
    } else {
      JsonArray items;
      for (const auto& item : std::get<ListColumn>(col.column).items) items.push_back(encode(item, opts));
      out.push_back(JsonMember{col.name, std::move(items)});
    }
  }
  return out;
}

JsonValue encode(const TabValue& value, const EncodeOptions& opts) {
  opts.check();
  if (value.is_vector()) return encode_vector(value.vector(), opts);
  if (value.is_matrix()) return encode_matrix(value.matrix(), opts);
  if (value.is_list()) return encode_list(value.list(), opts);
  if (opts.dataframe == DataFrameMode::Columns) return encode_frame_columns(value.frame(), opts);
  return encode_frame_rows(value.frame(), opts);
}

std::string to_json(const TabValue& value, const EncodeOptions& opts, std::optional<JsonStyle> style) {
  JsonStyle s = style.value_or(opts.pretty ? JsonStyle::Pretty : JsonStyle::Compact);
  return serialize_json(encode(value, opts), s);
}

}  // namespace tabjson
