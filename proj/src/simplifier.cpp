#include "tabjson/simplifier.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tabjson {

void SimplifyOptions::check() const {
  if ((simplify_matrix || simplify_dataframe) && !simplify_vector) {
    throw std::invalid_argument("matrix and data frame simplification require vector simplification");
  }
}

namespace {

std::optional<Special> numeric_special(std::string_view s) {
  if (s == "NA") return Special::NA;
  if (s == "NaN") return Special::NaN;
  if (s == "Inf") return Special::PosInf;
  if (s == "-Inf") return Special::NegInf;
  return std::nullopt;
}

bool is_missing_item(const JsonValue* v) { return v == nullptr || v->is_null(); }

TabValue list_of(const JsonArray& items, const SimplifyOptions& opts) {
  List l;
  l.items.reserve(items.size());
  for (const auto& item : items) l.items.push_back(simplify(item, opts));
  return l;
}

std::string renamed_key(const std::string& key, std::size_t position) {
  return key.empty() ? std::to_string(position + 1) : key;
}

}  // namespace

std::optional<Vector> simplify_vector_rule(std::span<const JsonValue* const> items) {
  std::size_t bools = 0, numbers = 0, strings = 0, plain_strings = 0;
  for (const JsonValue* v : items) {
    if (is_missing_item(v)) continue;
    switch (v->type()) {
      case JsonType::Bool: ++bools; break;
      case JsonType::Number: ++numbers; break;
      case JsonType::String:
        ++strings;
        if (!numeric_special(v->as_string())) ++plain_strings;
        break;
      default: return std::nullopt;
    }
  }
  if (bools > 0 && (numbers > 0 || strings > 0)) return std::nullopt;

  if (numbers > 0) {
    if (plain_strings > 0) return std::nullopt;
    std::vector<double> values;
    std::vector<Special> specials;
    values.reserve(items.size());
    specials.reserve(items.size());
    for (const JsonValue* v : items) {
      if (is_missing_item(v)) {
        values.push_back(0.0);
        specials.push_back(Special::NA);
      } else if (v->is_number()) {
        values.push_back(v->as_number().value);
        specials.push_back(Special::None);
      } else {
        values.push_back(0.0);
        specials.push_back(*numeric_special(v->as_string()));
      }
    }
    return Vector::doubles_with(std::move(values), std::move(specials));
  }
  if (strings > 0) {
    std::vector<Cell<std::string>> cells;
    cells.reserve(items.size());
    for (const JsonValue* v : items) {
      if (is_missing_item(v)) cells.emplace_back(std::nullopt);
      else cells.emplace_back(v->as_string());
    }
    return Vector::string(std::move(cells));
  }
  std::vector<Cell<bool>> cells;
  cells.reserve(items.size());
  for (const JsonValue* v : items) {
    if (is_missing_item(v)) cells.emplace_back(std::nullopt);
    else cells.emplace_back(v->as_bool());
  }
  return Vector::logical(std::move(cells));
}

std::optional<Matrix> simplify_matrix_rule(const JsonArray& items, const SimplifyOptions&) {
  if (items.empty()) return std::nullopt;
  std::size_t ncol = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const JsonValue& row = items[i];
    std::size_t len = 0;
    if (row.is_object()) return std::nullopt;
    if (row.is_array()) {
      for (const auto& cell : row.as_array()) {
        if (!cell.is_primitive()) return std::nullopt;
      }
      len = row.as_array().size();
    } else {
      len = 1;
    }
    if (len == 0 || (i > 0 && len != ncol)) return std::nullopt;
    ncol = len;
  }
  std::size_t nrow = items.size();
  std::vector<const JsonValue*> pooled;
  pooled.reserve(nrow * ncol);
  for (std::size_t j = 0; j < ncol; ++j) {
    for (std::size_t i = 0; i < nrow; ++i) {
      pooled.push_back(items[i].is_array() ? &items[i].as_array()[j] : &items[i]);
    }
  }
  auto data = simplify_vector_rule(pooled);
  if (!data) return std::nullopt;
  return Matrix::from_columns(std::move(*data), nrow, ncol);
}

namespace {

// Linear order of `nodes` (given in rank order) honoring the precedence
// edges of every chain; ties go to the lower rank. A cycle is broken by
// taking the lowest-ranked remaining node.
std::vector<std::string> merge_orders(const std::vector<std::string>& nodes,
                                      const std::vector<std::vector<std::string>>& chains) {
  std::unordered_map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < nodes.size(); ++i) rank.emplace(nodes[i], i);
  std::vector<std::set<std::size_t>> succ(nodes.size());
  std::vector<std::size_t> indegree(nodes.size(), 0);
  for (const auto& chain : chains) {
    for (std::size_t k = 1; k < chain.size(); ++k) {
      std::size_t a = rank.at(chain[k - 1]), b = rank.at(chain[k]);
      if (a != b && succ[a].insert(b).second) ++indegree[b];
    }
  }
  std::vector<bool> placed(nodes.size(), false);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::string> out;
  out.reserve(nodes.size());
  std::size_t next_unplaced = 0;
  while (out.size() < nodes.size()) {
    std::size_t pick;
    if (!ready.empty()) {
      pick = ready.top();
      ready.pop();
      if (placed[pick]) continue;
    } else {
      while (placed[next_unplaced]) ++next_unplaced;
      pick = next_unplaced;
    }
    placed[pick] = true;
    out.push_back(nodes[pick]);
    for (std::size_t s : succ[pick]) {
      if (!placed[s] && --indegree[s] == 0) ready.push(s);
    }
  }
  return out;
}

// Nodes ranked by first appearance across the chains, then any leftovers in
// their given order.
std::vector<std::string> ranked_nodes(const std::vector<std::vector<std::string>>& chains,
                                      const std::vector<std::string>& all_keys) {
  std::vector<std::string> nodes;
  std::unordered_set<std::string> seen;
  for (const auto& chain : chains) {
    for (const auto& k : chain) {
      if (seen.insert(k).second) nodes.push_back(k);
    }
  }
  for (const auto& k : all_keys) {
    if (seen.insert(k).second) nodes.push_back(k);
  }
  return nodes;
}

const JsonValue& empty_object() {
  static const JsonValue value{JsonObject{}};
  return value;
}

struct Field {
  std::string key;
  const JsonValue* value;
};

}  // namespace

std::optional<Frame> simplify_frame_rule(std::span<const JsonValue* const> records, const SimplifyOptions& opts) {
  opts.check();
  const std::size_t nrow = records.size();

  std::vector<std::vector<Field>> rows(nrow);
  for (std::size_t r = 0; r < nrow; ++r) {
    if (!records[r]->is_object()) return std::nullopt;
    const JsonObject& obj = records[r]->as_object();
    std::unordered_set<std::string> keys;
    for (std::size_t i = 0; i < obj.size(); ++i) {
      std::string key = renamed_key(obj[i].key, i);
      if (!keys.insert(key).second) return std::nullopt;
      rows[r].push_back(Field{std::move(key), &obj[i].value});
    }
  }

  Frame frame;
  frame.nrow = nrow;
  if (opts.capture_row_names && nrow > 0) {
    std::vector<std::string> names;
    for (const auto& row : rows) {
      auto it = std::find_if(row.begin(), row.end(), [](const Field& f) { return f.key == "$row"; });
      if (it == row.end() || !it->value->is_string()) break;
      names.push_back(it->value->as_string());
    }
    if (names.size() == nrow) {
      frame.row_names = std::move(names);
      for (auto& row : rows) {
        std::erase_if(row, [](const Field& f) { return f.key == "$row"; });
      }
    }
  }

  // Collect the per-row cells of every key.
  std::vector<std::string> keys;
  std::unordered_map<std::string, std::vector<const JsonValue*>> cells;
  for (std::size_t r = 0; r < nrow; ++r) {
    for (const auto& f : rows[r]) {
      auto [it, inserted] = cells.try_emplace(f.key, nrow, nullptr);
      if (inserted) keys.push_back(f.key);
      it->second[r] = f.value;
    }
  }

  // Decide each column's kind. `always` marks columns the encoder writes in
  // every record; the others only appear where the slot is present.
  std::unordered_map<std::string, Column> columns;
  std::unordered_set<std::string> always;
  for (const auto& key : keys) {
    const auto& col = cells.at(key);
    bool all_objects = true, all_primitive = true, any_present = false;
    for (const JsonValue* v : col) {
      if (!v) continue;
      any_present = true;
      if (!v->is_object()) all_objects = false;
      if (!v->is_primitive()) all_primitive = false;
    }
    if (any_present && all_objects) {
      std::vector<const JsonValue*> sub(col);
      for (auto& v : sub) {
        if (!v) v = &empty_object();
      }
      if (auto nested = simplify_frame_rule(std::span<const JsonValue* const>(sub), opts)) {
        columns.emplace(key, Boxed<Frame>(std::move(*nested)));
        always.insert(key);
        continue;
      }
    } else if (all_primitive) {
      if (auto vec = simplify_vector_rule(col)) {
        bool all_missing = std::all_of(vec->missing.begin(), vec->missing.end(), [](auto m) { return m != 0; });
        if (all_missing) always.insert(key);
        columns.emplace(key, std::move(*vec));
        continue;
      }
    }
    ListColumn lc;
    lc.items.reserve(nrow);
    for (const JsonValue* v : col) lc.items.push_back(v ? simplify(*v, opts) : TabValue(List{}));
    columns.emplace(key, std::move(lc));
    always.insert(key);
  }

  // Column order. Only fields that survive a re-encode constrain the order:
  // missing vector slots are dropped by the encoder, so their positions carry
  // no information. The first merge may have to break cycles; the second pass
  // re-merges the records as the encoder would write them, which makes the
  // result a fixed point of decode(encode(.)).
  auto present = [&](const std::string& key, std::size_t r) {
    if (always.count(key)) return true;
    const auto& v = std::get<Vector>(columns.at(key));
    return !v.is_missing(r);
  };
  std::vector<std::vector<std::string>> chains(nrow);
  for (std::size_t r = 0; r < nrow; ++r) {
    for (const auto& f : rows[r]) {
      if (present(f.key, r)) chains[r].push_back(f.key);
    }
  }
  std::vector<std::string> first = merge_orders(ranked_nodes(chains, keys), chains);
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < first.size(); ++i) pos.emplace(first[i], i);
  for (std::size_t r = 0; r < nrow; ++r) {
    chains[r].clear();
    for (const auto& key : first) {
      if (always.count(key) || present(key, r)) chains[r].push_back(key);
    }
  }
  std::vector<std::string> order = merge_orders(ranked_nodes(chains, first), chains);

  for (const auto& key : order) {
    frame.columns.push_back(NamedColumn{key, std::move(columns.at(key))});
  }
  return frame;
}

std::optional<Frame> simplify_frame_rule(const JsonArray& records, const SimplifyOptions& opts) {
  std::vector<const JsonValue*> ptrs;
  ptrs.reserve(records.size());
  for (const auto& r : records) ptrs.push_back(&r);
  return simplify_frame_rule(std::span<const JsonValue* const>(ptrs), opts);
}

std::optional<Frame> simplify_frame_columns(const JsonValue& object, const SimplifyOptions& opts) {
  opts.check();
  if (!object.is_object()) return std::nullopt;
  const JsonObject& members = object.as_object();
  Frame frame;
  std::optional<std::size_t> nrow;
  auto agree = [&](std::size_t n) {
    if (nrow && *nrow != n) return false;
    nrow = n;
    return true;
  };
  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::string name = renamed_key(members[i].key, i);
    if (!names.insert(name).second) return std::nullopt;
    const JsonValue& v = members[i].value;
    if (v.is_object()) {
      auto nested = simplify_frame_columns(v, opts);
      if (!nested || !agree(nested->nrow)) return std::nullopt;
      frame.columns.push_back(NamedColumn{std::move(name), Boxed<Frame>(std::move(*nested))});
      continue;
    }
    if (!v.is_array()) return std::nullopt;
    const JsonArray& items = v.as_array();
    if (!agree(items.size())) return std::nullopt;
    if (name == "$row" && opts.capture_row_names &&
        std::all_of(items.begin(), items.end(), [](const JsonValue& x) { return x.is_string(); })) {
      std::vector<std::string> rn;
      for (const auto& x : items) rn.push_back(x.as_string());
      frame.row_names = std::move(rn);
      continue;
    }
    bool all_primitive = std::all_of(items.begin(), items.end(), [](const JsonValue& x) { return x.is_primitive(); });
    if (all_primitive) {
      std::vector<const JsonValue*> ptrs;
      for (const auto& x : items) ptrs.push_back(&x);
      if (auto vec = simplify_vector_rule(ptrs)) {
        frame.columns.push_back(NamedColumn{std::move(name), std::move(*vec)});
        continue;
      }
    }
    ListColumn lc;
    for (const auto& x : items) lc.items.push_back(simplify(x, opts));
    frame.columns.push_back(NamedColumn{std::move(name), std::move(lc)});
  }
  frame.nrow = nrow.value_or(0);
  return frame;
}

TabValue classify_array(const JsonArray& items, const SimplifyOptions& opts) {
  opts.check();
  if (items.empty() || !opts.simplify_vector) return list_of(items, opts);

  bool all_primitive = true, all_objects = true, any_object = false, any_array = false;
  for (const auto& item : items) {
    if (!item.is_primitive()) all_primitive = false;
    if (item.is_object()) any_object = true;
    else all_objects = false;
    if (item.is_array()) any_array = true;
  }
  if (all_primitive) {
    std::vector<const JsonValue*> ptrs;
    ptrs.reserve(items.size());
    for (const auto& item : items) ptrs.push_back(&item);
    if (auto v = simplify_vector_rule(ptrs)) return *v;
    return list_of(items, opts);
  }
  if (all_objects && opts.simplify_dataframe) {
    if (auto f = simplify_frame_rule(items, opts)) return std::move(*f);
    return list_of(items, opts);
  }
  if (opts.simplify_matrix && any_array && !any_object) {
    if (auto m = simplify_matrix_rule(items, opts)) return std::move(*m);
  }
  return list_of(items, opts);
}

TabValue simplify(const JsonValue& value, const SimplifyOptions& opts) {
  opts.check();
  switch (value.type()) {
    case JsonType::Array: return classify_array(value.as_array(), opts);
    case JsonType::Object: {
      const JsonObject& members = value.as_object();
      List l;
      l.names.emplace();
      l.items.reserve(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) {
        l.names->push_back(renamed_key(members[i].key, i));
        l.items.push_back(simplify(members[i].value, opts));
      }
      return l;
    }
    default: {
      const JsonValue* ptr = &value;
      return *simplify_vector_rule(std::span<const JsonValue* const>(&ptr, 1));
    }
  }
}

}  // namespace tabjson
