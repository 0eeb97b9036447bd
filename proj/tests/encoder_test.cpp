#include <gtest/gtest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "tabjson/encoder.hpp"

using namespace tabjson;
using namespace fixtures;

namespace {

std::string compact(const TabValue& v, EncodeOptions o = {}) { return to_json(v, o); }

std::string num(double x, int digits) { return format_json_number(format_double(x, digits)); }

}  // namespace

TEST(Encoder, GoldenOutputs) {
  for (const auto& g : golden_cases()) {
    std::string got = to_json(g.value, g.opts, JsonStyle::Spaced);
    EXPECT_EQ(strip_json_whitespace(got), strip_json_whitespace(g.expected)) << g.name;
  }
}

TEST(Encoder, SpacedStyleMatchesInlineGoldensExactly) {
  for (const auto& g : golden_cases()) {
    if (g.expected.find('\n') != std::string::npos) continue;
    EXPECT_EQ(to_json(g.value, g.opts, JsonStyle::Spaced), g.expected) << g.name;
  }
}

TEST(Encoder, PrettyRecords) {
  EncodeOptions o;
  o.pretty = true;
  EXPECT_EQ(to_json(aladdin_frame(), o),
            "[\n  {\n    \"foo\" : false,\n    \"bar\" : \"Aladdin\"\n  },\n  {\n    \"foo\" : true\n  },\n"
            "  {},\n  {\n    \"bar\" : \"Mario\"\n  }\n]");
}

TEST(Encoder, VectorsAreAlwaysArrays) {
  EXPECT_EQ(compact(Vector::empty(ElementKind::Double)), "[]");
  EXPECT_EQ(compact(Vector::integer({7})), "[7]");
  EXPECT_EQ(compact(Vector::integer({7, std::nullopt})), R"([7,"NA"])");
}

TEST(FormatDouble, Rounding) {
  EXPECT_EQ(num(kPi, 2), "3.14");
  EXPECT_EQ(num(3.0, 2), "3");
  EXPECT_EQ(num(2.50, 1), "2.5");
  EXPECT_EQ(num(2.675, 2), "2.68");
  EXPECT_EQ(num(-2.675, 2), "-2.68");
  EXPECT_EQ(num(0.5, 0), "1");
  EXPECT_EQ(num(-0.5, 0), "-1");
  EXPECT_EQ(num(0.004, 2), "0");
  EXPECT_EQ(num(-0.004, 2), "0");
  EXPECT_EQ(num(0.005, 2), "0.01");
  EXPECT_EQ(num(9.999, 2), "10");
  EXPECT_EQ(num(99.96, 1), "100");
  EXPECT_EQ(num(1234.5678, 4), "1234.5678");
  EXPECT_EQ(num(1e-20, 17), "0");
  EXPECT_EQ(num(1.5e-17, 17), "2e-17");
  EXPECT_EQ(num(123456789012.0, 2), "123456789012");
  EXPECT_EQ(num(1e22, 2), "1e+22");
  EXPECT_TRUE(format_double(-7.0, 2).integral);
  EXPECT_FALSE(format_double(7.25, 2).integral);
  EXPECT_THROW(format_double(NAN, 2), std::invalid_argument);
}

TEST(FormatComplex, SignRules) {
  EXPECT_EQ(format_complex({0, -2}, 2), "0-2i");
  EXPECT_EQ(format_complex({0.5, 1.7}, 2), "0.5+1.7i");
  EXPECT_EQ(format_complex({1, 0}, 2), "1+0i");
  EXPECT_EQ(format_complex({-1.25, -0.001}, 2), "-1.25+0i");
}

TEST(FormatTime, DatesAndTimestamps) {
  EXPECT_EQ(format_date(0), "1970-01-01");
  EXPECT_EQ(format_date(-1), "1969-12-31");
  EXPECT_EQ(format_date(kDate), "2014-03-13");
  EXPECT_EQ(format_timestamp(kTimestamp), "2014-03-11 21:16:05");
  EXPECT_EQ(format_timestamp(-1), "1969-12-31 23:59:59");
  EXPECT_EQ(format_timestamp(kTimestamp, 60), "2014-03-11 22:16:05");
  EXPECT_EQ(format_timestamp(kTimestamp, -22 * 60), "2014-03-10 23:16:05");
}

TEST(EncodeMissing, Table) {
  EncodeOptions def;
  EncodeOptions nul = null_mode();
  EXPECT_EQ(encode_missing(ElementKind::Double, Special::NaN, def), JsonValue("NaN"));
  EXPECT_EQ(encode_missing(ElementKind::Logical, Special::NA, def), JsonValue(nullptr));
  EXPECT_EQ(encode_missing(ElementKind::Double, Special::NegInf, nul), JsonValue(nullptr));
  EXPECT_EQ(encode_missing(ElementKind::Integer, Special::NA, def), JsonValue("NA"));
  EXPECT_EQ(encode_missing(ElementKind::Complex, Special::NA, def), JsonValue("NA"));
  EXPECT_EQ(encode_missing(ElementKind::Timestamp, Special::NA, def), JsonValue(nullptr));
  EXPECT_THROW(encode_missing(ElementKind::Integer, Special::NaN, def), std::invalid_argument);
  EXPECT_THROW(encode_missing(ElementKind::Double, Special::None, def), std::invalid_argument);
}

TEST(Encoder, DigitsOption) {
  EncodeOptions o;
  o.digits = 4;
  EXPECT_EQ(compact(dbl({kPi}), o), "[3.1416]");
  o.digits = 0;
  EXPECT_EQ(compact(dbl({kPi}), o), "[3]");
  o.digits = 18;
  EXPECT_THROW(compact(dbl({kPi}), o), std::invalid_argument);
  o.digits = -1;
  EXPECT_THROW(compact(dbl({kPi}), o), std::invalid_argument);
}

TEST(Encoder, MatrixRowsMatchVectorEncoding) {
  Matrix m = seq_matrix_3x4();
  JsonValue j = encode_matrix(m);
  for (std::size_t i = 0; i < m.nrow; ++i) {
    EXPECT_EQ(j.as_array()[i], encode_vector(m.row(i)));
  }
  EXPECT_EQ(compact(Matrix::from_columns(dbl({}), 0, 3)), "[]");
}

TEST(Encoder, ForceNullInRecords) {
  EXPECT_EQ(compact(aladdin_frame(), null_mode()),
            R"([{"foo":false,"bar":"Aladdin"},{"foo":true,"bar":null},{"foo":null,"bar":null},)"
            R"({"foo":null,"bar":"Mario"}])");
}

TEST(Encoder, AllMissingColumnKeepsNulls) {
  Frame f;
  f.add("a", dbl({1, 2}));
  f.add("b", Vector::logical({std::nullopt, std::nullopt}));
  EXPECT_EQ(compact(f), R"([{"a":1,"b":null},{"a":2,"b":null}])");
}

TEST(Encoder, RecordSpecialsStayQuoted) {
  Frame f;
  f.add("x", Vector::doubles_with({1, 0, NAN}, {Special::None, Special::NA, Special::NaN}));
  EXPECT_EQ(compact(f), R"([{"x":1},{},{"x":"NaN"}])");
}

TEST(Encoder, RowNamesOption) {
  EncodeOptions on;
  on.row_names = true;
  EXPECT_EQ(compact(aladdin_frame(), on).substr(0, 20), R"([{"$row":"1","foo":f)");
  EncodeOptions off;
  off.row_names = false;
  EXPECT_EQ(compact(treatment_frame(), off), R"([{"Treatment B":5},{"Treatment A":1},{"Treatment A":2,"Treatment B":3}])");
}

TEST(Encoder, ColumnMode) {
  EncodeOptions cols;
  cols.dataframe = DataFrameMode::Columns;
  EXPECT_EQ(compact(aladdin_frame(), cols), R"({"foo":[false,true,null,null],"bar":["Aladdin",null,null,"Mario"]})");
  EXPECT_EQ(compact(Frame{}, cols), "{}");
  Frame single;
  single.add("x", dbl({1, 2, kPi}));
  EXPECT_EQ(compact(single, cols), compact(named({"x"}, {dbl({1, 2, kPi})})));
  EXPECT_EQ(compact(drivers_frame(), cols),
            R"({"driver":["Bowser","Peach"],"occupation":["Koopa","Princess"],"vehicle":{"model":)"
            R"(["Piranha Prowler","Royal Racer"],"stats":{"speed":[55,34],"weight":[67,24],"drift":[35,32]}}})");
}

TEST(Encoder, ColumnModeIsTransposeOfRows) {
  // Independent oracle: rebuild each column from the rows-mode records,
  // restoring omitted fields as null.
  Frame f = aladdin_frame();
  JsonValue rows = encode_frame_rows(f, {});
  JsonObject expected;
  for (const auto& col : f.columns) {
    JsonArray cells;
    for (const auto& rec : rows.as_array()) {
      const JsonValue* cell = rec.find(col.name);
      cells.push_back(cell ? *cell : JsonValue(nullptr));
    }
    expected.push_back(JsonMember{col.name, std::move(cells)});
  }
  EncodeOptions cols;
  cols.dataframe = DataFrameMode::Columns;
  EXPECT_EQ(encode_frame_columns(f, cols), JsonValue(std::move(expected)));
}
