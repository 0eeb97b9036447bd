#include "tabjson/data_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "tabjson/json_text.hpp"

namespace tabjson {

std::string_view kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::Logical: return "logical";
    case ElementKind::Integer: return "integer";
    case ElementKind::Double: return "double";
    case ElementKind::String: return "string";
    case ElementKind::Complex: return "complex";
    case ElementKind::Factor: return "factor";
    case ElementKind::Date: return "date";
    case ElementKind::Timestamp: return "timestamp";
  }
  return "unknown";
}

std::string_view special_name(Special special) {
  switch (special) {
    case Special::None: return "none";
    case Special::NA: return "NA";
    case Special::NaN: return "NaN";
    case Special::PosInf: return "Inf";
    case Special::NegInf: return "-Inf";
  }
  return "unknown";
}

namespace {

template <typename T, typename U>
void fill(Vector& v, std::vector<T>& dest, std::vector<Cell<U>>& values) {
  dest.reserve(values.size());
  v.missing.reserve(values.size());
  for (auto& cell : values) {
    v.missing.push_back(cell ? 0 : 1);
    dest.push_back(cell ? static_cast<T>(std::move(*cell)) : T{});
  }
}

Special classify_double(double x) {
  if (std::isnan(x)) return Special::NaN;
  if (std::isinf(x)) return x > 0 ? Special::PosInf : Special::NegInf;
  return Special::None;
}

}  // namespace

Vector Vector::empty(ElementKind kind) {
  Vector v;
  v.kind = kind;
  return v;
}

Vector Vector::logical(std::vector<Cell<bool>> values) {
  Vector v = empty(ElementKind::Logical);
  fill(v, v.logicals, values);
  return v;
}

Vector Vector::integer(std::vector<Cell<std::int32_t>> values) {
  Vector v = empty(ElementKind::Integer);
  fill(v, v.integers, values);
  return v;
}

Vector Vector::doubles_of(std::vector<double> values) {
  std::vector<Special> specials;
  specials.reserve(values.size());
  for (double x : values) specials.push_back(classify_double(x));
  return doubles_with(std::move(values), std::move(specials));
}

Vector Vector::doubles_with(std::vector<double> values, std::vector<Special> specials) {
  if (values.size() != specials.size()) {
    throw std::invalid_argument("doubles_with: values and specials differ in length");
  }
  Vector v = empty(ElementKind::Double);
  v.missing.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    switch (specials[i]) {
      case Special::None: break;
      case Special::NA: values[i] = 0.0; break;
      case Special::NaN: values[i] = std::nan(""); break;
      case Special::PosInf: values[i] = HUGE_VAL; break;
      case Special::NegInf: values[i] = -HUGE_VAL; break;
    }
    v.missing.push_back(specials[i] == Special::NA ? 1 : 0);
  }
  v.doubles = std::move(values);
  v.special = std::move(specials);
  return v;
}

Vector Vector::string(std::vector<Cell<std::string>> values) {
  Vector v = empty(ElementKind::String);
  fill(v, v.strings, values);
  return v;
}

Vector Vector::complex(std::vector<Cell<Complex>> values) {
  Vector v = empty(ElementKind::Complex);
  fill(v, v.complexes, values);
  return v;
}

Vector Vector::factor(const std::vector<Cell<std::string>>& labels,
                      std::optional<std::vector<std::string>> levels) {
  Vector v = empty(ElementKind::Factor);
  if (levels) {
    v.levels = std::move(*levels);
  } else {
    std::set<std::string> uniq;
    for (const auto& l : labels) {
      if (l) uniq.insert(*l);
    }
    v.levels.assign(uniq.begin(), uniq.end());
  }
  for (const auto& l : labels) {
    if (!l) {
      v.missing.push_back(1);
      v.integers.push_back(0);
      continue;
    }
    auto it = std::find(v.levels.begin(), v.levels.end(), *l);
    if (it == v.levels.end()) throw std::invalid_argument("factor label not among levels: " + *l);
    v.missing.push_back(0);
    v.integers.push_back(static_cast<std::int32_t>(it - v.levels.begin()) + 1);
  }
  return v;
}

Vector Vector::date(std::vector<Cell<std::int32_t>> days) {
  Vector v = empty(ElementKind::Date);
  fill(v, v.integers, days);
  return v;
}

Vector Vector::timestamp(std::vector<Cell<std::int64_t>> secs) {
  Vector v = empty(ElementKind::Timestamp);
  fill(v, v.seconds, secs);
  return v;
}

void Vector::push_from(const Vector& other, std::size_t i) {
  missing.push_back(other.missing[i]);
  switch (kind) {
    case ElementKind::Logical: logicals.push_back(other.logicals[i]); break;
    case ElementKind::Integer:
    case ElementKind::Factor:
    case ElementKind::Date: integers.push_back(other.integers[i]); break;
    case ElementKind::Double:
      doubles.push_back(other.doubles[i]);
      special.push_back(other.special[i]);
      break;
    case ElementKind::String: strings.push_back(other.strings[i]); break;
    case ElementKind::Complex: complexes.push_back(other.complexes[i]); break;
    case ElementKind::Timestamp: seconds.push_back(other.seconds[i]); break;
  }
}

Vector Vector::take(std::span<const std::size_t> indices) const {
  Vector out = empty(kind);
  out.levels = levels;
  for (std::size_t i : indices) out.push_from(*this, i);
  return out;
}

Matrix Matrix::from_columns(Vector data, std::size_t nrow, std::size_t ncol) {
  if (data.size() != nrow * ncol) throw std::invalid_argument("matrix data length does not match dimensions");
  Matrix m;
  m.data = std::move(data);
  m.nrow = nrow;
  m.ncol = ncol;
  return m;
}

Vector Matrix::row(std::size_t i) const {
  std::vector<std::size_t> idx;
  idx.reserve(ncol);
  for (std::size_t j = 0; j < ncol; ++j) idx.push_back(index(i, j));
  return data.take(idx);
}

const Column* Frame::find(std::string_view name) const {
  for (const auto& c : columns) {
    if (c.name == name) return &c.column;
  }
  return nullptr;
}

Frame& Frame::add(std::string name, Column column) {
  if (columns.empty() && nrow == 0) nrow = column_length(column);
  columns.push_back(NamedColumn{std::move(name), std::move(column)});
  return *this;
}

std::size_t column_length(const Column& column) {
  if (const auto* v = std::get_if<Vector>(&column)) return v->size();
  if (const auto* f = std::get_if<Boxed<Frame>>(&column)) return (*f)->nrow;
  return std::get<ListColumn>(column).items.size();
}

// ---------------------------------------------------------------------------
// validate

namespace {

std::string join(const std::string& path, std::string_view leaf) {
  if (path.empty()) return std::string(leaf);
  return path + "." + std::string(leaf);
}

std::size_t payload_size(const Vector& v) {
  switch (v.kind) {
    case ElementKind::Logical: return v.logicals.size();
    case ElementKind::Integer:
    case ElementKind::Factor:
    case ElementKind::Date: return v.integers.size();
    case ElementKind::Double: return v.doubles.size();
    case ElementKind::String: return v.strings.size();
    case ElementKind::Complex: return v.complexes.size();
    case ElementKind::Timestamp: return v.seconds.size();
  }
  return 0;
}

class Validator {
 public:
  std::vector<Violation> out;

  void report(std::string path, std::string message) {
    if (path.empty()) path = "$";
    out.push_back(Violation{std::move(path), std::move(message)});
  }

  void vector(const Vector& v, const std::string& path) {
    std::size_t n = v.size();
    if (payload_size(v) != n) {
      report(join(path, "payload"), "payload length " + std::to_string(payload_size(v)) +
                                        " differs from missing mask length " + std::to_string(n));
      return;
    }
    if (v.kind == ElementKind::Double) {
      if (v.special.size() != n) {
        report(join(path, "special"), "special tag count differs from length");
        return;
      }
      for (std::size_t i = 0; i < n; ++i) {
        const std::string slot = join(path, "special[" + std::to_string(i) + "]");
        Special s = v.special[i];
        double x = v.doubles[i];
        if ((s == Special::NA) != v.is_missing(i)) {
          report(slot, "NA tag and missing mask disagree");
        } else if (s == Special::None && !std::isfinite(x)) {
          report(slot, "non-finite value tagged none");
        } else if (s == Special::NaN && !std::isnan(x)) {
          report(slot, "NaN tag on a non-NaN value");
        } else if (s == Special::PosInf && !(std::isinf(x) && x > 0)) {
          report(slot, "Inf tag on a non-infinite value");
        } else if (s == Special::NegInf && !(std::isinf(x) && x < 0)) {
          report(slot, "-Inf tag on a non-infinite value");
        }
      }
    } else if (!v.special.empty()) {
      report(join(path, "special"), "special tags on a non-double vector");
    }
    if (v.kind == ElementKind::Factor) {
      std::unordered_set<std::string> seen;
      for (std::size_t k = 0; k < v.levels.size(); ++k) {
        if (!seen.insert(v.levels[k]).second) {
          report(join(path, "levels[" + std::to_string(k) + "]"), "duplicate level \"" + v.levels[k] + "\"");
        }
        if (!is_valid_utf8(v.levels[k])) report(join(path, "levels[" + std::to_string(k) + "]"), "invalid UTF-8");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (v.is_missing(i)) continue;
        auto code = v.integers[i];
        if (code < 1 || static_cast<std::size_t>(code) > v.levels.size()) {
          report(join(path, "codes[" + std::to_string(i) + "]"),
                 "factor code " + std::to_string(code) + " outside 1.." + std::to_string(v.levels.size()));
        }
      }
    } else if (!v.levels.empty()) {
      report(join(path, "levels"), "levels on a non-factor vector");
    }
    if (v.kind == ElementKind::String) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!v.is_missing(i) && !is_valid_utf8(v.strings[i])) {
          report(join(path, "[" + std::to_string(i) + "]"), "invalid UTF-8");
        }
      }
    }
    if (v.kind == ElementKind::Complex) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!v.is_missing(i) && !(std::isfinite(v.complexes[i].re) && std::isfinite(v.complexes[i].im))) {
          report(join(path, "[" + std::to_string(i) + "]"), "complex parts must be finite");
        }
      }
    }
  }

  void names(const std::optional<std::vector<std::string>>& names, std::size_t expected,
             const std::string& path, std::string_view what) {
    if (!names) return;
    if (names->size() != expected) {
      report(path, std::string(what) + " has " + std::to_string(names->size()) + " entries, expected " +
                       std::to_string(expected));
    }
    for (std::size_t k = 0; k < names->size(); ++k) {
      if (!is_valid_utf8((*names)[k])) report(path + "[" + std::to_string(k) + "]", "invalid UTF-8");
    }
  }

  void matrix(const Matrix& m, const std::string& path) {
    switch (m.data.kind) {
      case ElementKind::Logical:
      case ElementKind::Integer:
      case ElementKind::Double:
      case ElementKind::String:
      case ElementKind::Complex: break;
      default: report(join(path, "data.kind"), "matrix of " + std::string(kind_name(m.data.kind)) + " elements");
    }
    if (m.nrow * m.ncol != m.data.size()) {
      report(join(path, "data"), "nrow x ncol = " + std::to_string(m.nrow * m.ncol) + " but data has " +
                                     std::to_string(m.data.size()) + " elements");
    }
    vector(m.data, join(path, "data"));
    names(m.row_names, m.nrow, join(path, "row_names"), "row_names");
    names(m.col_names, m.ncol, join(path, "col_names"), "col_names");
  }

  void list(const List& l, const std::string& path) {
    names(l.names, l.items.size(), join(path, "names"), "names");
    for (std::size_t i = 0; i < l.items.size(); ++i) {
      value(l.items[i], join(path, "items[" + std::to_string(i) + "]"));
    }
  }

  void frame(const Frame& f, const std::string& path) {
    names(f.row_names, f.nrow, join(path, "row_names"), "row_names");
    std::unordered_set<std::string> seen;
    for (std::size_t c = 0; c < f.columns.size(); ++c) {
      const auto& col = f.columns[c];
      const std::string cpath = join(path, "columns[" + std::to_string(c) + "]");
      if (col.name.empty()) report(join(cpath, "name"), "empty column name");
      else if (!seen.insert(col.name).second) report(join(cpath, "name"), "duplicate column name \"" + col.name + "\"");
      if (!is_valid_utf8(col.name)) report(join(cpath, "name"), "invalid UTF-8");

      if (const auto* v = std::get_if<Vector>(&col.column)) {
        if (v->size() != f.nrow) {
          report(join(cpath, "length"), "column has " + std::to_string(v->size()) + " rows, frame has " +
                                            std::to_string(f.nrow));
        }
        vector(*v, cpath);
      } else if (const auto* nested = std::get_if<Boxed<Frame>>(&col.column)) {
        if ((*nested)->nrow != f.nrow) {
          report(join(cpath, "nested.nrow"), "nested frame has " + std::to_string((*nested)->nrow) +
                                                 " rows, parent has " + std::to_string(f.nrow));
        }
        frame(**nested, join(cpath, "nested"));
      } else {
        const auto& lc = std::get<ListColumn>(col.column);
        if (lc.items.size() != f.nrow) {
          report(join(cpath, "length"), "list column has " + std::to_string(lc.items.size()) +
                                            " rows, frame has " + std::to_string(f.nrow));
        }
        for (std::size_t r = 0; r < lc.items.size(); ++r) {
          value(lc.items[r], join(cpath, "items[" + std::to_string(r) + "]"));
        }
      }
    }
  }

  void value(const TabValue& v, const std::string& path) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Vector>) vector(node, path);
          else if constexpr (std::is_same_v<T, Matrix>) matrix(node, path);
          else if constexpr (std::is_same_v<T, List>) list(node, path);
          else frame(node, path);
        },
        v.node);
  }
};

}  // namespace

std::vector<Violation> validate(const TabValue& value) {
  Validator v;
  v.value(value, "");
  return std::move(v.out);
}

std::vector<Violation> validate(const Frame& frame) {
  Validator v;
  v.frame(frame, "");
  return std::move(v.out);
}

// ---------------------------------------------------------------------------
// equality

namespace {

using Diff = std::optional<std::string>;

bool trivial_row_names(const std::optional<std::vector<std::string>>& names) {
  if (!names) return true;
  for (std::size_t i = 0; i < names->size(); ++i) {
    if ((*names)[i] != std::to_string(i + 1)) return false;
  }
  return true;
}

Diff diff_value(const TabValue& a, const TabValue& b, const std::string& path);
Diff diff_frame(const Frame& a, const Frame& b, const std::string& path);

Diff diff_vector(const Vector& a, const Vector& b, const std::string& path) {
  if (a.kind != b.kind) {
    return path + ": kind " + std::string(kind_name(a.kind)) + " vs " + std::string(kind_name(b.kind));
  }
  if (a.size() != b.size()) {
    return path + ": length " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  }
  if (a.kind == ElementKind::Factor && a.levels != b.levels) return path + ": factor levels differ";
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string slot = path + "[" + std::to_string(i) + "]";
    if (a.is_missing(i) != b.is_missing(i)) return slot + ": missing vs present";
    if (a.is_missing(i)) continue;
    bool same = true;
    switch (a.kind) {
      case ElementKind::Logical: same = a.logicals[i] == b.logicals[i]; break;
      case ElementKind::Integer:
      case ElementKind::Factor:
      case ElementKind::Date: same = a.integers[i] == b.integers[i]; break;
      case ElementKind::Double:
        same = a.special[i] == b.special[i] && (a.special[i] != Special::None || a.doubles[i] == b.doubles[i]);
        break;
      case ElementKind::String: same = a.strings[i] == b.strings[i]; break;
      case ElementKind::Complex: same = a.complexes[i] == b.complexes[i]; break;
      case ElementKind::Timestamp: same = a.seconds[i] == b.seconds[i]; break;
    }
    if (!same) return slot + ": values differ";
  }
  return std::nullopt;
}

Diff diff_column(const Column& a, const Column& b, const std::string& path) {
  if (a.index() != b.index()) return path + ": " + type_name(a) + " vs " + type_name(b);
  if (const auto* va = std::get_if<Vector>(&a)) return diff_vector(*va, std::get<Vector>(b), path);
  if (const auto* fa = std::get_if<Boxed<Frame>>(&a)) return diff_frame(**fa, *std::get<Boxed<Frame>>(b), path);
  const auto& la = std::get<ListColumn>(a).items;
  const auto& lb = std::get<ListColumn>(b).items;
  if (la.size() != lb.size()) return path + ": list column length differs";
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (auto d = diff_value(la[i], lb[i], path + "[" + std::to_string(i) + "]")) return d;
  }
  return std::nullopt;
}

Diff diff_frame(const Frame& a, const Frame& b, const std::string& path) {
  if (a.nrow != b.nrow) return path + ": nrow " + std::to_string(a.nrow) + " vs " + std::to_string(b.nrow);
  if (a.columns.size() != b.columns.size()) {
    return path + ": " + std::to_string(a.columns.size()) + " vs " + std::to_string(b.columns.size()) + " columns";
  }
  bool ta = trivial_row_names(a.row_names), tb = trivial_row_names(b.row_names);
  if (ta != tb || (!ta && *a.row_names != *b.row_names)) return path + ": row names differ";
  for (std::size_t c = 0; c < a.columns.size(); ++c) {
    if (a.columns[c].name != b.columns[c].name) {
      return path + ": column " + std::to_string(c) + " named \"" + a.columns[c].name + "\" vs \"" +
             b.columns[c].name + "\"";
    }
    if (auto d = diff_column(a.columns[c].column, b.columns[c].column, path + "." + a.columns[c].name)) return d;
  }
  return std::nullopt;
}

Diff diff_value(const TabValue& a, const TabValue& b, const std::string& path) {
  if (a.node.index() != b.node.index()) return path + ": " + type_name(a) + " vs " + type_name(b);
  if (a.is_vector()) return diff_vector(a.vector(), b.vector(), path);
  if (a.is_matrix()) {
    const Matrix& ma = a.matrix();
    const Matrix& mb = b.matrix();
    if (ma.nrow != mb.nrow || ma.ncol != mb.ncol) return path + ": " + type_name(a) + " vs " + type_name(b);
    if (ma.row_names != mb.row_names || ma.col_names != mb.col_names) return path + ": dimnames differ";
    return diff_vector(ma.data, mb.data, path + ".data");
  }
  if (a.is_list()) {
    const List& la = a.list();
    const List& lb = b.list();
    if (la.items.size() != lb.items.size()) {
      return path + ": list length " + std::to_string(la.items.size()) + " vs " + std::to_string(lb.items.size());
    }
    if (la.names != lb.names) return path + ": list names differ";
    for (std::size_t i = 0; i < la.items.size(); ++i) {
      std::string sub = la.names && !(*la.names)[i].empty() ? path + "." + (*la.names)[i]
                                                             : path + "[" + std::to_string(i) + "]";
      if (auto d = diff_value(la.items[i], lb.items[i], sub)) return d;
    }
    return std::nullopt;
  }
  return diff_frame(a.frame(), b.frame(), path);
}

}  // namespace

std::optional<std::string> first_difference(const TabValue& a, const TabValue& b) {
  return diff_value(a, b, "$");
}

bool deep_equal(const TabValue& a, const TabValue& b) { return !diff_value(a, b, "$"); }
bool deep_equal(const Frame& a, const Frame& b) { return !diff_frame(a, b, "$"); }
bool deep_equal(const Vector& a, const Vector& b) { return !diff_vector(a, b, "$"); }

std::string type_name(const TabValue& value) {
  if (value.is_vector()) return "vector<" + std::string(kind_name(value.vector().kind)) + ">";
  if (value.is_matrix()) {
    const Matrix& m = value.matrix();
    return "matrix<" + std::string(kind_name(m.data.kind)) + ">[" + std::to_string(m.nrow) + "x" +
           std::to_string(m.ncol) + "]";
  }
  if (value.is_list()) return value.list().named() ? "named list" : "list";
  return "frame";
}

std::string type_name(const Column& column) {
  if (const auto* v = std::get_if<Vector>(&column)) return "vector<" + std::string(kind_name(v->kind)) + ">";
  if (std::holds_alternative<Boxed<Frame>>(column)) return "frame";
  return "list column";
}

}  // namespace tabjson
