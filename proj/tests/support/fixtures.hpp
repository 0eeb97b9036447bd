#pragma once

// Reference values and their expected JSON encodings, shared by the unit and
// acceptance suites.

#include <cmath>
#include <string>
#include <vector>

#include "tabjson/data_model.hpp"
#include "tabjson/encoder.hpp"

namespace fixtures {

using namespace tabjson;

inline constexpr double kPi = 3.141592653589793;

inline List unnamed(std::vector<TabValue> items) {
  List l;
  l.items = std::move(items);
  return l;
}

inline List named(std::vector<std::string> names, std::vector<TabValue> items) {
  List l;
  l.items = std::move(items);
  l.names = std::move(names);
  return l;
}

inline Vector dbl(std::vector<double> v) { return Vector::doubles_of(std::move(v)); }

/// Doubles where NAN in the input means NA rather than NaN.
inline Vector dbl_na(std::vector<double> v) {
  std::vector<Special> s;
  for (double x : v) s.push_back(std::isnan(x) ? Special::NA : Special::None);
  return Vector::doubles_with(std::move(v), std::move(s));
}

inline Vector str(std::vector<Cell<std::string>> v) { return Vector::string(std::move(v)); }

inline Matrix seq_matrix_3x4() {
  std::vector<double> vals;
  for (int i = 1; i <= 12; ++i) vals.push_back(i);
  return Matrix::from_columns(dbl(vals), 3, 4);
}

inline Matrix treatment_matrix() {
  Matrix m = Matrix::from_columns(dbl_na({NAN, 1, 2, 5, NAN, 3}), 3, 2);
  m.row_names = std::vector<std::string>{"Joe", "Jane", "Mary"};
  m.col_names = std::vector<std::string>{"Treatment A", "Treatment B"};
  return m;
}

inline Frame melted_treatments() {
  Frame f;
  f.add("Subject", str({"Joe", "Jane", "Mary", "Joe", "Jane", "Mary"}));
  f.add("Treatment", str({"Treatment A", "Treatment A", "Treatment A", "Treatment B", "Treatment B",
                          "Treatment B"}));
  f.add("value", dbl_na({NAN, 1, 2, 5, NAN, 3}));
  return f;
}

inline Frame treatment_frame() {
  Frame f;
  f.add("Treatment A", dbl_na({NAN, 1, 2}));
  f.add("Treatment B", dbl_na({5, NAN, 3}));
  f.row_names = std::vector<std::string>{"Joe", "Jane", "Mary"};
  return f;
}

inline List mixed_list() {
  return unnamed({dbl({1, 2}), str({"test"}), Vector::logical({true}), unnamed({dbl({1, 2})})});
}

inline Frame iris_head() {
  Frame f;
  f.add("Sepal.Length", dbl({5.1, 4.9}));
  f.add("Sepal.Width", dbl({3.5, 3.0}));
  f.add("Petal.Length", dbl({1.4, 1.4}));
  f.add("Petal.Width", dbl({0.2, 0.2}));
  f.add("Species", Vector::factor({"setosa", "setosa"}, std::vector<std::string>{"setosa", "versicolor", "virginica"}));
  return f;
}

inline Frame aladdin_frame() {
  Frame f;
  f.add("foo", Vector::logical({false, true, std::nullopt, std::nullopt}));
  f.add("bar", str({"Aladdin", std::nullopt, std::nullopt, "Mario"}));
  return f;
}

inline Frame drivers_frame() {
  Frame stats;
  stats.add("speed", dbl({55, 34}));
  stats.add("weight", dbl({67, 24}));
  stats.add("drift", dbl({35, 32}));
  Frame vehicle;
  vehicle.add("model", str({"Piranha Prowler", "Royal Racer"}));
  vehicle.add("stats", Boxed<Frame>(stats));
  Frame x;
  x.add("driver", str({"Bowser", "Peach"}));
  x.add("occupation", str({"Koopa", "Princess"}));
  x.add("vehicle", Boxed<Frame>(vehicle));
  return x;
}

inline Frame poems_as_vectors() {
  Frame f;
  f.add("author", str({"Homer", "Virgil", "Jeroen"}));
  ListColumn poems;
  poems.items.push_back(str({"Iliad", "Odyssey"}));
  poems.items.push_back(str({"Eclogues", "Georgics", "Aeneid"}));
  poems.items.push_back(Vector::empty(ElementKind::Logical));
  f.add("poems", poems);
  return f;
}

inline Frame poems_as_frames() {
  auto titles = [](std::vector<Cell<std::string>> t, std::vector<double> y) {
    Frame f;
    f.add("title", str(std::move(t)));
    f.add("year", dbl(std::move(y)));
    return f;
  };
  Frame f;
  f.add("author", str({"Homer", "Virgil", "Jeroen"}));
  ListColumn poems;
  poems.items.push_back(titles({"Iliad", "Odyssey"}, {-1194, -800}));
  poems.items.push_back(titles({"Eclogues", "Georgics", "Aeneid"}, {-44, -29, -19}));
  poems.items.push_back(Frame{});
  f.add("poems", poems);
  return f;
}

inline Frame people_frame() {
  Frame f;
  f.add("name", str({"Jay", "Mary", std::nullopt, std::nullopt}));
  f.add("gender", str({"M", std::nullopt, std::nullopt, "F"}));
  return f;
}

inline List humans_and_horses() {
  Frame humans;
  humans.add("name", str({"Jay", "Mary"}));
  humans.add("married", Vector::logical({true, false}));
  Frame horses;
  horses.add("name", str({"Star", "Dakota"}));
  horses.add("price", dbl({5000, 30000}));
  return named({"humans", "horses"}, {humans, horses});
}

inline List heterogeneous_list() {
  return unnamed({str({"FOO"}), Vector::integer({1, 2, 3}), named({"bar"}, {dbl({kPi})})});
}

/// 2014-03-11 21:16:05 UTC.
inline constexpr std::int64_t kTimestamp = 1394572565;
/// 2014-03-13.
inline constexpr std::int32_t kDate = 16142;

struct GoldenCase {
  std::string name;
  TabValue value;
  EncodeOptions opts;
  std::string expected;
};

inline EncodeOptions null_mode() {
  EncodeOptions o;
  o.na = NaMode::ForceNull;
  return o;
}

inline std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> c;
  auto add = [&](std::string name, TabValue v, std::string expected, EncodeOptions o = {}) {
    c.push_back(GoldenCase{std::move(name), std::move(v), o, std::move(expected)});
  };
  add("double_vector", dbl({1, 2, kPi}), "[ 1, 2, 3.14 ]");
  add("logical_vector", Vector::logical({true, false, std::nullopt}), "[ true, false, null ]",
      null_mode());
  add("numeric_specials_as_strings", Vector::doubles_with({1, 2, 0, NAN, INFINITY, 10},
                                                          {Special::None, Special::None, Special::NA,
                                                           Special::NaN, Special::PosInf, Special::None}),
      R"([ 1, 2, "NA", "NaN", "Inf", 10 ])");
  add("logical_missing", Vector::logical({true, std::nullopt, std::nullopt, false}),
      "[ true, null, null, false ]");
  add("string_missing", str({"FOO", "BAR", std::nullopt, "NA"}), R"([ "FOO", "BAR", null, "NA" ])");
  Vector specials = Vector::doubles_with({kPi, 0, NAN, 21, INFINITY, -INFINITY},
                                         {Special::None, Special::NA, Special::NaN, Special::None,
                                          Special::PosInf, Special::NegInf});
  add("double_specials", specials, R"([ 3.14, "NA", "NaN", 21, "Inf", "-Inf" ])");
  add("double_specials_null", specials, "[ 3.14, null, null, 21, null, null ]", null_mode());
  add("timestamps", Vector::timestamp({kTimestamp, kTimestamp + 1, kTimestamp + 2}),
      R"([ "2014-03-11 21:16:05", "2014-03-11 21:16:06", "2014-03-11 21:16:07" ])");
  add("dates", Vector::date({kDate, kDate + 1, kDate + 2}), R"([ "2014-03-13", "2014-03-14", "2014-03-15" ])");
  add("factor", Vector::factor({"foo", "bar", "foo"}), R"([ "foo", "bar", "foo" ])");
  add("complex", Vector::complex({Complex{0.4987, 1.6953}, Complex{0.0012, -2.0011}, Complex{0.3702, -0.1298}}),
      R"([ "0.5+1.7i", "0-2i", "0.37-0.13i" ])");
  add("empty_vector", Vector::empty(ElementKind::Logical), "[  ]");
  add("scalar", dbl({kPi}), "[ 3.14 ]");
  add("named_empty", named({"foo"}, {Vector::empty(ElementKind::Logical)}), R"({ "foo" : [  ] })");
  add("named_scalar", named({"foo"}, {dbl({kPi})}), R"({ "foo" : [ 3.14 ] })");
  add("unnamed_empty", unnamed({Vector::empty(ElementKind::Logical)}), "[ [  ] ]");
  add("unnamed_scalar", unnamed({dbl({kPi})}), "[ [ 3.14 ] ]");
  add("matrix_3x4", seq_matrix_3x4(), "[ [ 1, 4, 7, 10 ], [ 2, 5, 8, 11 ], [ 3, 6, 9, 12 ] ]");
  Matrix small = Matrix::from_columns(dbl_na({1, 2, 4, NAN}), 2, 2);
  add("matrix_missing", small, R"([ [ 1, 4 ], [ 2, "NA" ] ])");
  add("matrix_missing_null", small, "[ [ 1, 4 ], [ 2, null ] ]", null_mode());
  add("matrix_1x1", Matrix::from_columns(dbl({kPi}), 1, 1), "[ [ 3.14 ] ]");
  add("matrix_dimnames_dropped", treatment_matrix(), R"([ [ "NA", 5 ], [ 1, "NA" ], [ 2, 3 ] ])");
  add("melted_records", melted_treatments(), R"([
  { "Subject" : "Joe", "Treatment" : "Treatment A" },
  { "Subject" : "Jane", "Treatment" : "Treatment A", "value" : 1 },
  { "Subject" : "Mary", "Treatment" : "Treatment A", "value" : 2 },
  { "Subject" : "Joe", "Treatment" : "Treatment B", "value" : 5 },
  { "Subject" : "Jane", "Treatment" : "Treatment B" },
  { "Subject" : "Mary", "Treatment" : "Treatment B", "value" : 3 } ])");
  add("row_names_records", treatment_frame(), R"([
  { "$row" : "Joe", "Treatment B" : 5 },
  { "$row" : "Jane", "Treatment A" : 1 },
  { "$row" : "Mary", "Treatment A" : 2, "Treatment B" : 3 } ])");
  add("unnamed_list", mixed_list(), R"([ [ 1, 2 ], [ "test" ], [ true ], [ [ 1, 2 ] ] ])");
  add("named_list", named({"foo", "bar"}, {dbl({1, 2}), str({"test"})}), R"({ "foo" : [ 1, 2 ], "bar" : [ "test" ] })");
  add("nested_named_list", named({"foo"}, {named({"bar"}, {named({"baz"}, {dbl({kPi})})})}),
      R"({ "foo" : { "bar" : { "baz" : [ 3.14 ] } } })");
  add("index_fallback", named({"foo", "", ""}, {dbl({123}), str({"test"}), Vector::logical({true})}),
      R"({ "foo" : [ 123 ], "2" : [ "test" ], "3" : [ true ] })");
  add("iris_records", iris_head(), R"([
  { "Sepal.Length" : 5.1, "Sepal.Width" : 3.5, "Petal.Length" : 1.4, "Petal.Width" : 0.2, "Species" : "setosa" },
  { "Sepal.Length" : 4.9, "Sepal.Width" : 3, "Petal.Length" : 1.4, "Petal.Width" : 0.2, "Species" : "setosa" } ])");
  add("list_of_named_list", unnamed({named({"Species", "Width"}, {str({"Foo"}), dbl({21})})}),
      R"([ { "Species" : [ "Foo" ], "Width" : [ 21 ] } ])");
  add("omitted_missing_fields", aladdin_frame(),
      R"([ { "foo" : false, "bar" : "Aladdin" }, { "foo" : true }, {}, { "bar" : "Mario" } ])");
  add("nested_records", drivers_frame(), R"([
  { "driver" : "Bowser", "occupation" : "Koopa",
    "vehicle" : { "model" : "Piranha Prowler", "stats" : { "speed" : 55, "weight" : 67, "drift" : 35 } } },
  { "driver" : "Peach", "occupation" : "Princess",
    "vehicle" : { "model" : "Royal Racer", "stats" : { "speed" : 34, "weight" : 24, "drift" : 32 } } } ])");
  add("poems_vectors", poems_as_vectors(), R"([
  { "author" : "Homer", "poems" : [ "Iliad", "Odyssey" ] },
  { "author" : "Virgil", "poems" : [ "Eclogues", "Georgics", "Aeneid" ] },
  { "author" : "Jeroen", "poems" : [] } ])");
  add("poems_frames", poems_as_frames(), R"([
  { "author" : "Homer", "poems" : [ { "title" : "Iliad", "year" : -1194 }, { "title" : "Odyssey", "year" : -800 } ] },
  { "author" : "Virgil", "poems" : [ { "title" : "Eclogues", "year" : -44 }, { "title" : "Georgics", "year" : -29 },
                                     { "title" : "Aeneid", "year" : -19 } ] },
  { "author" : "Jeroen", "poems" : [] } ])");
  add("heterogeneous_list", heterogeneous_list(), R"([ [ "FOO" ], [ 1, 2, 3 ], { "bar" : [ 3.14 ] } ])");
  add("people_records", people_frame(),
      R"([ { "name" : "Jay", "gender" : "M" }, { "name" : "Mary" }, {}, { "gender" : "F" } ])");
  add("humans_and_horses", humans_and_horses(), R"({
  "humans" : [ { "name" : "Jay", "married" : true }, { "name" : "Mary", "married" : false } ],
  "horses" : [ { "name" : "Star", "price" : 5000 }, { "name" : "Dakota", "price" : 30000 } ] })");
  return c;
}

/// Records with epoch timestamps used as keys, and the fixed-key rewrite.
inline const char* kTimestampKeyedRecords = R"([
  { "1325344443" : 124 },
  { "1325344456" : 131 },
  { "1325344478" : 137 }
])";

inline const char* kFixedKeyRecords = R"([
  { "time" : "1325344443", "price" : 124 },
  { "time" : "1325344456", "price" : 131 },
  { "time" : "1325344478", "price" : 137 }
])";

}  // namespace fixtures
