#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tabjson/cli.hpp"
#include "tabjson/csv.hpp"
#include "tabjson/encoder.hpp"
#include "tabjson/flatten.hpp"
#include "tabjson/json_text.hpp"
#include "tabjson/lint.hpp"
#include "tabjson/simplifier.hpp"

namespace py = pybind11;
using namespace tabjson;

namespace {

JsonStyle style_of(const std::string& name) {
  if (name == "compact") return JsonStyle::Compact;
  if (name == "pretty") return JsonStyle::Pretty;
  if (name == "spaced") return JsonStyle::Spaced;
  throw py::value_error("style must be compact, pretty or spaced");
}

EncodeOptions encode_options(const std::string& na, int digits, const std::string& dataframe, bool pretty) {
  EncodeOptions o;
  if (na != "default" && na != "null") throw py::value_error("na must be 'default' or 'null'");
  if (dataframe != "rows" && dataframe != "columns") throw py::value_error("dataframe must be 'rows' or 'columns'");
  o.na = na == "null" ? NaMode::ForceNull : NaMode::Default;
  o.dataframe = dataframe == "columns" ? DataFrameMode::Columns : DataFrameMode::Rows;
  o.digits = digits;
  o.pretty = pretty;
  o.check();
  return o;
}

std::vector<std::string> column_names(const TabValue& v) {
  if (!v.is_frame()) throw py::type_error("value is a " + type_name(v) + ", not a frame");
  std::vector<std::string> out;
  for (const auto& c : v.frame().columns) out.push_back(c.name);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON <-> typed table conversion";

  py::register_exception<JsonParseError>(m, "JsonParseError", PyExc_ValueError);
  py::register_exception<CsvError>(m, "CsvError", PyExc_ValueError);

  py::class_<TabValue>(m, "Value")
      .def_property_readonly("type_name", [](const TabValue& v) { return type_name(v); })
      .def_property_readonly("is_frame", &TabValue::is_frame)
      .def_property_readonly("columns", &column_names)
      .def_property_readonly("nrow",
                             [](const TabValue& v) {
                               if (!v.is_frame()) throw py::type_error("not a frame");
                               return v.frame().nrow;
                             })
      .def("validate",
           [](const TabValue& v) {
             std::vector<std::string> out;
             for (const auto& viol : validate(v)) out.push_back((viol.path.empty() ? "$" : viol.path) + ": " + viol.message);
             return out;
           })
      .def("to_json",
           [](const TabValue& v, const std::string& na, int digits, const std::string& dataframe, bool pretty,
              std::optional<std::string> style) {
             EncodeOptions o = encode_options(na, digits, dataframe, pretty);
             std::optional<JsonStyle> s;
             if (style) s = style_of(*style);
             return to_json(v, o, s);
           },
           py::arg("na") = "default", py::arg("digits") = 2, py::arg("dataframe") = "rows", py::arg("pretty") = false,
           py::arg("style") = py::none())
      .def("to_csv",
           [](const TabValue& v, int digits) {
             if (!v.is_frame()) throw py::type_error("csv output needs a frame, got " + type_name(v));
             try {
               return write_csv(v.frame(), encode_options("default", digits, "rows", false));
             } catch (const CsvShapeError& e) {
               throw py::type_error(e.what());
             }
           },
           py::arg("digits") = 2)
      .def("flatten",
           [](const TabValue& v, const std::string& separator) {
             if (!v.is_frame()) throw py::type_error("cannot flatten a " + type_name(v));
             FlattenOptions o;
             o.separator = separator;
             try {
               return TabValue(flatten(v.frame(), o));
             } catch (const FlattenError& e) {
               throw py::value_error(e.what());
             }
           },
           py::arg("separator") = ".")
      .def("__eq__", [](const TabValue& a, const TabValue& b) { return deep_equal(a, b); })
      .def("diff", [](const TabValue& a, const TabValue& b) { return first_difference(a, b); })
      .def("__repr__", [](const TabValue& v) { return "<tabjson.Value " + type_name(v) + ">"; });

  m.def("from_json",
        [](const std::string& text, bool simplify_vector, bool simplify_matrix, bool simplify_dataframe,
           bool capture_row_names) {
          SimplifyOptions o{simplify_vector, simplify_matrix, simplify_dataframe, capture_row_names};
          o.check();
          return simplify(parse_json_or_throw(text), o);
        },
        py::arg("text"), py::arg("simplify_vector") = true, py::arg("simplify_matrix") = true,
        py::arg("simplify_dataframe") = true, py::arg("capture_row_names") = false);

  m.def("read_csv", [](const std::string& text) { return TabValue(read_csv(text)); }, py::arg("text"));

  m.def("reformat", [](const std::string& text, const std::string& style) {
    return serialize_json(parse_json_or_throw(text), style_of(style));
  }, py::arg("text"), py::arg("style") = "pretty");

  m.def("diagnostics", [](const std::string& text) {
    py::list out;
    for (const auto& d : parse_json(text).diagnostics) {
      out.append(py::make_tuple(d.line, d.column, d.severity == DiagnosticSeverity::Error ? "error" : "warning",
                                d.message));
    }
    return out;
  }, py::arg("text"));

  m.def("roundtrip", [](const std::string& text) -> std::optional<std::string> {
    TabValue x = simplify(parse_json_or_throw(text));
    return first_difference(simplify(encode(x)), x);
  }, py::arg("text"), "None when decode(encode(x)) reproduces x, otherwise the first difference.");

  m.def("lint_report",
        [](const std::vector<std::string>& documents, double max_singleton_key_ratio, bool flag_numeric_keys) {
          LintConfig cfg;
          cfg.max_singleton_key_ratio = max_singleton_key_ratio;
          cfg.flag_numeric_keys = flag_numeric_keys;
          LintAccumulator acc(cfg);
          for (const auto& d : documents) acc.add(parse_json_or_throw(d));
          if (acc.documents() == 0) throw py::value_error("lint needs at least one document");
          return acc.finish().to_json();
        },
        py::arg("documents"), py::arg("max_singleton_key_ratio") = 0.5, py::arg("flag_numeric_keys") = true);

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
