#include "tabjson/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tabjson/csv.hpp"
#include "tabjson/encoder.hpp"
#include "tabjson/flatten.hpp"
#include "tabjson/json_text.hpp"
#include "tabjson/lint.hpp"
#include "tabjson/simplifier.hpp"

namespace tabjson::cli {

namespace {

struct Flags {
  std::string input = "-";
  std::string output;
  std::string from = "json";
  std::string to = "json";
  std::string na = "default";
  std::string dataframe = "rows";
  std::string style;
  std::string report = "text";
  std::string separator = ".";
  int digits = 2;
  bool pretty = false;
  bool flatten = false;
  double max_singleton_ratio = 0.5;
  bool no_flag_numeric_keys = false;
};

// Thrown inside a command to stop with a given status after printing `what`.
struct Exit {
  int code;
  std::string message;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const Flags& f, Io& io) {
  std::ostringstream buf;
  if (f.input == "-") {
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(f.input, std::ios::binary);
  if (!file) throw Exit{kParseError, "cannot open " + f.input};
  buf << file.rdbuf();
  return buf.str();
}

std::string source_name(const Flags& f) { return f.input == "-" ? "<stdin>" : f.input; }

JsonValue parse_document(std::string_view text, const std::string& name, std::size_t line_offset, Io& io) {
  ParseResult r = parse_json(text);
  for (const auto& d : r.diagnostics) {
    ParseDiagnostic shifted = d;
    shifted.line += line_offset;
    if (d.severity == DiagnosticSeverity::Warning) io.err << name << ':' << shifted.to_string() << '\n';
  }
  if (!r.value) {
    ParseDiagnostic shifted = *r.error();
    shifted.line += line_offset;
    throw Exit{kParseError, name + ":" + shifted.to_string()};
  }
  return std::move(*r.value);
}

std::vector<JsonValue> parse_ndjson(const std::string& text, const std::string& name, Io& io) {
  std::vector<JsonValue> docs;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string_view row(text.data() + start, end - start);
    if (row.find_first_not_of(" \t\r") != std::string_view::npos) {
      docs.push_back(parse_document(row, name, line, io));
    }
    ++line;
    start = end + 1;
  }
  return docs;
}

std::vector<JsonValue> read_documents(const Flags& f, Io& io) {
  std::string text = read_input(f, io);
  if (f.from == "ndjson") return parse_ndjson(text, source_name(f), io);
  return {parse_document(text, source_name(f), 0, io)};
}

SimplifyOptions decode_options() {
  SimplifyOptions s;
  s.capture_row_names = true;
  return s;
}

TabValue read_value(const Flags& f, Io& io) {
  if (f.from == "csv") {
    std::string text = read_input(f, io);
    try {
      return read_csv(text);
    } catch (const CsvError& e) {
      throw Exit{kParseError, source_name(f) + ":" + e.what()};
    }
  }
  std::vector<JsonValue> docs = read_documents(f, io);
  if (f.from == "ndjson") return simplify(JsonValue(JsonArray(std::move(docs))), decode_options());
  return simplify(docs.front(), decode_options());
}

EncodeOptions encode_options(const Flags& f) {
  EncodeOptions o;
  o.na = f.na == "null" ? NaMode::ForceNull : NaMode::Default;
  o.dataframe = f.dataframe == "columns" ? DataFrameMode::Columns : DataFrameMode::Rows;
  o.digits = f.digits;
  o.pretty = f.pretty;
  return o;
}

JsonStyle output_style(const Flags& f, JsonStyle fallback) {
  static const std::map<std::string, JsonStyle> styles{
      {"compact", JsonStyle::Compact}, {"pretty", JsonStyle::Pretty}, {"spaced", JsonStyle::Spaced}};
  if (!f.style.empty()) return styles.at(f.style);
  return f.pretty ? JsonStyle::Pretty : fallback;
}

void write_output(const Flags& f, const std::string& text, Io& io) {
  if (f.output.empty() || f.output == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(f.output, std::ios::binary);
  if (!file) throw Exit{kParseError, "cannot write " + f.output};
  file << text;
}

Frame flatten_or_fail(const TabValue& v, const Flags& f) {
  if (!v.is_frame()) throw Exit{kShapeError, "cannot flatten a " + type_name(v) + "; input must decode to a frame"};
  FlattenOptions o;
  o.separator = f.separator;
  try {
    return flatten(v.frame(), o);
  } catch (const FlattenError& e) {
    throw Exit{kShapeError, e.what()};
  }
}

void emit(const TabValue& v, const Flags& f, Io& io) {
  EncodeOptions eo = encode_options(f);
  if (f.to == "csv") {
    if (!v.is_frame()) throw Exit{kShapeError, "csv output needs a frame, got " + type_name(v)};
    try {
      write_output(f, write_csv(v.frame(), eo), io);
    } catch (const CsvShapeError& e) {
      throw Exit{kShapeError, std::string(e.what()) + " (try --flatten)"};
    }
    return;
  }
  write_output(f, serialize_json(encode(v, eo), output_style(f, JsonStyle::Compact)) + "\n", io);
}

int cmd_convert(const Flags& f, Io& io) {
  TabValue v = read_value(f, io);
  if (f.flatten && v.is_frame()) v = flatten_or_fail(v, f);
  emit(v, f, io);
  return kOk;
}

int cmd_flatten(const Flags& f, Io& io) {
  TabValue v = read_value(f, io);
  emit(flatten_or_fail(v, f), f, io);
  return kOk;
}

int cmd_roundtrip(const Flags& f, Io& io) {
  TabValue x = read_value(f, io);
  EncodeOptions eo = encode_options(f);
  JsonValue encoded = encode(x, eo);
  std::optional<TabValue> y;
  if (eo.dataframe == DataFrameMode::Columns && x.is_frame()) {
    if (auto cols = simplify_frame_columns(encoded, decode_options())) y = TabValue(std::move(*cols));
  }
  if (!y) y = simplify(encoded, decode_options());
  if (auto diff = first_difference(*y, x)) {
    write_output(f, "mismatch: " + *diff + "\n", io);
    return kRoundTripMismatch;
  }
  write_output(f, "identical: " + type_name(x) + "\n", io);
  return kOk;
}

int cmd_lint(const Flags& f, Io& io) {
  std::vector<JsonValue> docs = read_documents(f, io);
  if (docs.empty()) throw Exit{kParseError, source_name(f) + ": lint needs at least one document"};
  LintConfig cfg;
  cfg.max_singleton_key_ratio = f.max_singleton_ratio;
  cfg.flag_numeric_keys = !f.no_flag_numeric_keys;
  LintAccumulator acc(cfg);
  for (const auto& d : docs) acc.add(d);
  LintReport report = acc.finish();
  write_output(f, f.report == "json" ? report.to_json(f.pretty) + "\n" : report.to_text(), io);
  return report.clean() ? kOk : kLintFindings;
}

int cmd_pretty(const Flags& f, Io& io) {
  std::vector<JsonValue> docs = read_documents(f, io);
  std::string text;
  if (f.from == "ndjson") {
    for (const auto& d : docs) text += serialize_json(d, output_style(f, JsonStyle::Compact)) + "\n";
  } else {
    text = serialize_json(docs.front(), output_style(f, JsonStyle::Pretty)) + "\n";
  }
  write_output(f, text, io);
  return kOk;
}

void add_io(CLI::App* sub, Flags& f) {
  sub->add_option("input", f.input, "Input file, or - for stdin")->capture_default_str();
  sub->add_option("-o,--output", f.output, "Output file (default stdout)");
}

void add_from(CLI::App* sub, Flags& f, std::vector<std::string> formats) {
  sub->add_option("--from", f.from, "Input format")->check(CLI::IsMember(formats))->capture_default_str();
}

void add_encoding(CLI::App* sub, Flags& f) {
  sub->add_option("--na", f.na, "Missing values: default or null")
      ->check(CLI::IsMember({"default", "null"}))
      ->capture_default_str();
  sub->add_option("--digits", f.digits, "Decimal places for doubles")->check(CLI::Range(0, 17))->capture_default_str();
  sub->add_option("--dataframe", f.dataframe, "Frame layout: rows or columns")
      ->check(CLI::IsMember({"rows", "columns"}))
      ->capture_default_str();
  sub->add_flag("--pretty", f.pretty, "Indent the JSON output");
  sub->add_option("--style", f.style, "JSON layout: compact, pretty or spaced")
      ->check(CLI::IsMember({"compact", "pretty", "spaced"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Flags f;
  Io io{in, out, err};

  CLI::App app{"Convert between JSON and typed tables", "tabjson"};
  app.require_subcommand(1);

  auto* convert = app.add_subcommand("convert", "Decode input and re-encode it as JSON or CSV");
  add_io(convert, f);
  add_from(convert, f, {"json", "ndjson", "csv"});
  convert->add_option("--to", f.to, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  add_encoding(convert, f);
  convert->add_flag("--flatten", f.flatten, "Hoist nested frame columns before encoding");
  convert->add_option("--separator", f.separator, "Joiner for flattened names")->capture_default_str();

  auto* roundtrip = app.add_subcommand("roundtrip", "Check that decode(encode(decode(input))) is unchanged");
  add_io(roundtrip, f);
  add_from(roundtrip, f, {"json", "ndjson"});
  add_encoding(roundtrip, f);

  auto* flat = app.add_subcommand("flatten", "Hoist nested frame columns into dotted names");
  add_io(flat, f);
  add_from(flat, f, {"json", "ndjson", "csv"});
  flat->add_option("--to", f.to, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  add_encoding(flat, f);
  flat->add_option("--separator", f.separator, "Joiner for flattened names")->capture_default_str();

  auto* lint_cmd = app.add_subcommand("lint", "Check documents for data-valued keys and mixed types");
  add_io(lint_cmd, f);
  add_from(lint_cmd, f, {"json", "ndjson"});
  lint_cmd->add_option("--report", f.report, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  lint_cmd->add_flag("--pretty", f.pretty, "Indent a JSON report");
  lint_cmd->add_option("--max-singleton-ratio", f.max_singleton_ratio, "Tolerated share of single-use keys")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  lint_cmd->add_flag("--no-flag-numeric-keys", f.no_flag_numeric_keys, "Do not report numeric-looking keys");

  auto* pretty = app.add_subcommand("pretty", "Re-layout JSON text");
  add_io(pretty, f);
  add_from(pretty, f, {"json", "ndjson"});
  pretty->add_option("--style", f.style, "JSON layout: compact, pretty or spaced")
      ->check(CLI::IsMember({"compact", "pretty", "spaced"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tabjson: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (convert->parsed()) return cmd_convert(f, io);
    if (roundtrip->parsed()) return cmd_roundtrip(f, io);
    if (flat->parsed()) return cmd_flatten(f, io);
    if (lint_cmd->parsed()) return cmd_lint(f, io);
    return cmd_pretty(f, io);
  } catch (const Exit& e) {
    err << "tabjson: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "tabjson: " << e.what() << '\n';
    return kShapeError;
  }
}

}  // namespace tabjson::cli
