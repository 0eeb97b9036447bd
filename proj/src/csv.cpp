#include "tabjson/csv.hpp"

#include <cmath>
#include <unordered_set>

#include "tabjson/json_text.hpp"

namespace tabjson {

namespace {

struct RawCell {
  std::string text;
  bool quoted = false;
};

using RawRow = std::vector<RawCell>;

std::vector<RawRow> tokenize(std::string_view text) {
  std::vector<RawRow> rows;
  RawRow row;
  RawCell cell;
  std::size_t line = 1;
  std::size_t i = 0;
  bool cell_started = false;

  auto end_cell = [&] {
    row.push_back(std::move(cell));
    cell = RawCell{};
    cell_started = false;
  };
  auto end_row = [&] {
    end_cell();
    rows.push_back(std::move(row));
    row.clear();
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == '"') {
      if (cell_started) throw CsvError(line, "quote inside an unquoted cell");
      cell.quoted = true;
      cell_started = true;
      std::size_t open_line = line;
      ++i;
      for (;;) {
        if (i >= text.size()) throw CsvError(open_line, "unterminated quoted cell");
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            cell.text += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        if (text[i] == '\n') ++line;
        cell.text += text[i++];
      }
      if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
        throw CsvError(line, "characters after a closing quote");
      }
      continue;
    }
    if (c == ',') {
      end_cell();
      ++i;
      continue;
    }
    if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
      end_row();
      ++line;
      continue;
    }
    if (cell.quoted) throw CsvError(line, "characters after a closing quote");
    cell.text += c;
    cell_started = true;
    ++i;
  }
  // A final line without a terminator still counts; a trailing newline does not
  // start another row.
  if (cell_started || cell.quoted || !row.empty()) end_row();
  return rows;
}

bool is_number_token(const std::string& s) {
  if (s.empty()) return false;
  auto parsed = parse_json(s);
  return parsed.value && parsed.value->is_number();
}

Special special_token(const std::string& s) {
  if (s == "NA") return Special::NA;
  if (s == "NaN") return Special::NaN;
  if (s == "Inf") return Special::PosInf;
  if (s == "-Inf") return Special::NegInf;
  return Special::None;
}

Vector type_column(const std::vector<const RawCell*>& cells) {
  bool any_quoted = false, all_bool = true, all_numeric = true, any_present = false, any_value = false;
  for (const RawCell* c : cells) {
    if (c->quoted) {
      any_quoted = true;
      continue;
    }
    if (c->text.empty()) continue;
    any_present = true;
    bool is_bool = c->text == "true" || c->text == "false";
    all_bool = all_bool && is_bool;
    Special sp = special_token(c->text);
    bool numeric = is_number_token(c->text);
    all_numeric = all_numeric && (numeric || sp != Special::None);
    any_value = any_value || numeric || (sp != Special::None && sp != Special::NA);
  }

  std::size_t n = cells.size();
  if (!any_quoted && all_bool && any_present) {
    std::vector<Cell<bool>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!cells[i]->text.empty()) out[i] = cells[i]->text == "true";
    }
    return Vector::logical(std::move(out));
  }
  if (!any_quoted && all_numeric && any_value) {
    std::vector<double> values(n, 0.0);
    std::vector<Special> specials(n, Special::None);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& t = cells[i]->text;
      Special sp = t.empty() ? Special::NA : special_token(t);
      specials[i] = sp;
      if (sp == Special::None) {
        values[i] = parse_json_or_throw(t).as_number().value;
      } else if (sp == Special::NaN || sp == Special::NA) {
        values[i] = std::nan("");
      } else {
        values[i] = sp == Special::PosInf ? INFINITY : -INFINITY;
      }
    }
    return Vector::doubles_with(std::move(values), std::move(specials));
  }
  if (!any_quoted && (all_numeric || !any_present)) {
    // Nothing but empty cells and NA.
    return Vector::logical(std::vector<Cell<bool>>(n));
  }
  std::vector<Cell<std::string>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (cells[i]->quoted || !cells[i]->text.empty()) out[i] = cells[i]->text;
  }
  return Vector::string(std::move(out));
}

void put_quoted(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void put_cell(std::string& out, const Vector& v, std::size_t i, const EncodeOptions& opts) {
  if (v.kind == ElementKind::Double && v.special[i] != Special::None) {
    if (v.special[i] != Special::NA) out += encode_missing(ElementKind::Double, v.special[i]).as_string();
    return;
  }
  if (v.is_missing(i)) return;
  JsonValue cell = encode_element(v, i, opts);
  if (cell.is_string()) {
    put_quoted(out, cell.as_string());
  } else if (cell.is_bool()) {
    out += cell.as_bool() ? "true" : "false";
  } else {
    out += format_json_number(cell.as_number());
  }
}

}  // namespace

Frame read_csv(std::string_view text) {
  std::vector<RawRow> rows = tokenize(text);
  if (rows.empty()) throw CsvError(1, "missing header row");
  const RawRow& header = rows.front();
  std::size_t ncol = header.size();

  std::vector<std::string> names;
  std::unordered_set<std::string> seen;
  for (std::size_t j = 0; j < ncol; ++j) {
    std::string name = header[j].text.empty() ? std::to_string(j + 1) : header[j].text;
    if (!seen.insert(name).second) throw CsvError(1, "duplicate column name \"" + name + "\"");
    names.push_back(std::move(name));
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != ncol) {
      throw CsvError(r + 1, "expected " + std::to_string(ncol) + " cells, found " + std::to_string(rows[r].size()));
    }
  }

  Frame frame;
  frame.nrow = rows.size() - 1;
  for (std::size_t j = 0; j < ncol; ++j) {
    std::vector<const RawCell*> cells;
    for (std::size_t r = 1; r < rows.size(); ++r) cells.push_back(&rows[r][j]);
    if (names[j] == "$row") {
      std::vector<std::string> labels;
      for (const RawCell* c : cells) labels.push_back(c->text);
      frame.row_names = std::move(labels);
      continue;
    }
    frame.columns.push_back({names[j], type_column(cells)});
  }
  return frame;
}

std::string write_csv(const Frame& frame, const EncodeOptions& opts) {
  opts.check();
  for (const auto& col : frame.columns) {
    if (!std::holds_alternative<Vector>(col.column)) {
      throw CsvShapeError("column \"" + col.name + "\" is a " + type_name(col.column) + ", not a vector");
    }
  }
  bool trivial = true;
  if (frame.row_names) {
    for (std::size_t i = 0; i < frame.row_names->size(); ++i) {
      trivial = trivial && (*frame.row_names)[i] == std::to_string(i + 1);
    }
  }
  bool with_rows = opts.row_names.value_or(!trivial);

  std::string out;
  bool first = true;
  auto sep = [&] {
    if (!first) out += ',';
    first = false;
  };
  if (with_rows) {
    sep();
    put_quoted(out, "$row");
  }
  for (const auto& col : frame.columns) {
    sep();
    put_quoted(out, col.name);
  }
  out += '\n';
  for (std::size_t r = 0; r < frame.nrow; ++r) {
    first = true;
    if (with_rows) {
      sep();
      put_quoted(out, frame.row_names ? (*frame.row_names)[r] : std::to_string(r + 1));
    }
    for (const auto& col : frame.columns) {
      sep();
      put_cell(out, std::get<Vector>(col.column), r, opts);
    }
    out += '\n';
  }
  return out;
}

}  // namespace tabjson
