#include "tabjson/lint.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tabjson/json_text.hpp"

namespace tabjson {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

bool is_special_token(const std::string& s) { return s == "NA" || s == "NaN" || s == "Inf" || s == "-Inf"; }

void add_witness(std::vector<std::size_t>& docs, std::size_t doc) {
  if (docs.size() < kMaxWitnesses && (docs.empty() || docs.back() != doc)) docs.push_back(doc);
}

// Collapses the raw tags observed at one path into the set that decides
// Rule 2.
std::set<std::string> effective_tags(const std::map<std::string, std::size_t>& counts, const LintConfig& cfg) {
  std::set<std::string> tags;
  for (const auto& [tag, n] : counts) tags.insert(tag);
  if (tags.erase("special")) tags.insert(tags.count("number") ? "number" : "string");
  if (cfg.allow_null) tags.erase("null");
  return tags;
}

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

std::string display_path(const std::string& path) { return path.empty() ? "$" : "$" + path; }

}  // namespace

void LintConfig::check() const {
  if (!(max_singleton_key_ratio >= 0.0 && max_singleton_key_ratio <= 1.0)) {
    throw std::invalid_argument("max_singleton_key_ratio must lie in [0, 1]");
  }
}

std::string_view rule_name(LintRule rule) {
  switch (rule) {
    case LintRule::FixedKeys: return "R1_fixed_keys";
    case LintRule::DataKey: return "R1_data_key";
    case LintRule::FieldType: return "R2_field_type";
    case LintRule::ArrayHomogeneity: return "R2_array_homogeneity";
  }
  return "?";
}

std::string_view severity_name(LintSeverity severity) {
  return severity == LintSeverity::Warn ? "warn" : "error";
}

bool is_numeric_key(std::string_view key) {
  if (key.empty() || !(key[0] == '-' || (key[0] >= '0' && key[0] <= '9'))) return false;
  if (std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) return true;
  auto parsed = parse_json(key);
  return parsed.value && parsed.value->is_number();
}

LintAccumulator::LintAccumulator(LintConfig cfg) : cfg_(cfg) { cfg_.check(); }

std::string LintAccumulator::tag(const JsonValue& value) const {
  if (cfg_.numeric_special_strings && value.is_string() && is_special_token(value.as_string())) return "special";
  return std::string(json_type_name(value.type()));
}

void LintAccumulator::bump(Witnessed& w, const std::string& entry, std::size_t doc) {
  ++w.count[entry];
  add_witness(w.docs[entry], doc);
}

void LintAccumulator::walk(const JsonValue& value, const std::string& path, bool is_field, std::size_t doc) {
  Stats& st = stats_[path];
  st.is_field = st.is_field || is_field;
  bump(st.values, tag(value), doc);
  if (value.is_object()) {
    ++st.objects;
    for (const auto& m : value.as_object()) bump(st.keys, m.key, doc);
    for (const auto& m : value.as_object()) walk(m.value, path + "." + m.key, true, doc);
  } else if (value.is_array()) {
    ++st.arrays;
    for (const auto& e : value.as_array()) bump(stats_[path].elements, tag(e), doc);
    for (const auto& e : value.as_array()) walk(e, path + "[]", false, doc);
  }
}

void LintAccumulator::add(const JsonValue& document) { walk(document, "", false, documents_++); }

void LintAccumulator::merge(const LintAccumulator& other) {
  auto fold = [&](Witnessed& into, const Witnessed& from) {
    for (const auto& [k, n] : from.count) into.count[k] += n;
    for (const auto& [k, docs] : from.docs) {
      for (std::size_t d : docs) add_witness(into.docs[k], d + documents_);
    }
  };
  for (const auto& [path, st] : other.stats_) {
    Stats& mine = stats_[path];
    mine.objects += st.objects;
    mine.arrays += st.arrays;
    mine.is_field = mine.is_field || st.is_field;
    fold(mine.keys, st.keys);
    fold(mine.values, st.values);
    fold(mine.elements, st.elements);
  }
  documents_ += other.documents_;
}

LintReport LintAccumulator::finish() const {
  LintReport report;
  report.documents = documents_;

  for (const auto& [path, st] : stats_) {
    PathStats& ps = report.paths[path];
    ps.objects = st.objects;
    ps.arrays = st.arrays;
    ps.is_field = st.is_field;
    ps.keys = st.keys.count;
    ps.value_types = st.values.count;
    ps.element_types = st.elements.count;

    if (st.objects >= cfg_.min_records && st.objects > 0) {
      std::size_t distinct = st.keys.count.size();
      std::set<std::size_t> witnesses;
      std::size_t singletons = 0;
      for (const auto& [key, n] : st.keys.count) {
        if (n != 1) continue;
        ++singletons;
        witnesses.insert(st.keys.docs.at(key).front());
      }
      if (distinct > 2 && static_cast<double>(singletons) > cfg_.max_singleton_key_ratio * distinct) {
        std::ostringstream detail;
        detail << singletons << " of " << distinct << " keys appear in a single record across " << st.objects
               << " records";
        report.findings.push_back({LintRule::FixedKeys, LintSeverity::Warn, path, detail.str(),
                                   std::vector<std::size_t>(witnesses.begin(), witnesses.end())});
      }
    }

    if (cfg_.flag_numeric_keys) {
      for (const auto& [key, n] : st.keys.count) {
        if (!is_numeric_key(key)) continue;
        report.findings.push_back({LintRule::DataKey, LintSeverity::Warn, path,
                                   "key \"" + key + "\" looks like data rather than a field name",
                                   st.keys.docs.at(key)});
      }
    }

    auto type_finding = [&](LintRule rule, const Witnessed& w, const char* what) {
      auto tags = effective_tags(w.count, cfg_);
      if (tags.size() < 2) return;
      std::set<std::size_t> docs;
      for (const auto& [t, d] : w.docs) {
        if (!d.empty() && (t != "null" || !cfg_.allow_null)) docs.insert(d.front());
      }
      report.findings.push_back({rule, LintSeverity::Error, path, std::string(what) + " mix types: " + join(tags),
                                 std::vector<std::size_t>(docs.begin(), docs.end())});
    };
    if (st.is_field) type_finding(LintRule::FieldType, st.values, "values of this field");
    if (st.arrays > 0) type_finding(LintRule::ArrayHomogeneity, st.elements, "array elements");
  }

  std::stable_sort(report.findings.begin(), report.findings.end(), [](const Finding& a, const Finding& b) {
    if (a.path != b.path) return a.path < b.path;
    return a.rule < b.rule;
  });
  return report;
}

LintReport lint(std::span<const JsonValue> documents, const LintConfig& cfg) {
  if (documents.empty()) throw std::invalid_argument("lint needs at least one document");
  LintAccumulator acc(cfg);
  for (const auto& d : documents) acc.add(d);
  return acc.finish();
}

std::string LintReport::to_json(bool pretty) const {
  auto count_object = [](const std::map<std::string, std::size_t>& m) {
    JsonObject o;
    for (const auto& [k, n] : m) o.push_back({k, JsonValue::integer(static_cast<std::int64_t>(n))});
    return JsonValue(std::move(o));
  };
  JsonArray fs;
  for (const auto& f : findings) {
    JsonArray w;
    for (std::size_t d : f.witnesses) w.push_back(JsonValue::integer(static_cast<std::int64_t>(d)));
    fs.push_back(JsonObject{{"rule", std::string(rule_name(f.rule))},
                            {"severity", std::string(severity_name(f.severity))},
                            {"path", display_path(f.path)},
                            {"detail", f.detail},
                            {"witnesses", std::move(w)}});
  }
  JsonArray ps;
  for (const auto& [path, st] : paths) {
    JsonObject o{{"path", display_path(path)}, {"types", count_object(st.value_types)}};
    if (st.objects) {
      o.push_back({"records", JsonValue::integer(static_cast<std::int64_t>(st.objects))});
      o.push_back({"keys", count_object(st.keys)});
    }
    if (st.arrays) {
      o.push_back({"arrays", JsonValue::integer(static_cast<std::int64_t>(st.arrays))});
      o.push_back({"element_types", count_object(st.element_types)});
    }
    ps.push_back(std::move(o));
  }
  JsonObject root{{"documents", JsonValue::integer(static_cast<std::int64_t>(documents))},
                  {"clean", clean()},
                  {"findings", std::move(fs)},
                  {"paths", std::move(ps)}};
  return serialize_json(JsonValue(std::move(root)), pretty ? JsonStyle::Pretty : JsonStyle::Compact);
}

std::string LintReport::to_text() const {
  std::ostringstream out;
  out << documents << (documents == 1 ? " document, " : " documents, ") << findings.size()
      << (findings.size() == 1 ? " finding\n" : " findings\n");
  if (findings.empty()) return out.str();

  std::size_t w_sev = 0, w_rule = 0, w_path = 0;
  for (const auto& f : findings) {
    w_sev = std::max(w_sev, severity_name(f.severity).size());
    w_rule = std::max(w_rule, rule_name(f.rule).size());
    w_path = std::max(w_path, display_path(f.path).size());
  }
  auto pad = [](std::string_view s, std::size_t w) { return std::string(s) + std::string(w - s.size() + 2, ' '); };
  for (const auto& f : findings) {
    out << pad(severity_name(f.severity), w_sev) << pad(rule_name(f.rule), w_rule) << pad(display_path(f.path), w_path)
        << f.detail;
    if (!f.witnesses.empty()) {
      out << " (documents";
      for (std::size_t d : f.witnesses) out << ' ' << d;
      out << ')';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tabjson
