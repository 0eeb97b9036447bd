#include <gtest/gtest.h>

#include <cmath>

#include "tabjson/json_text.hpp"

using namespace tabjson;

namespace {

JsonValue parse(std::string_view text) { return parse_json_or_throw(text); }

std::string error_of(std::string_view text) {
  ParseResult r = parse_json(text);
  EXPECT_FALSE(r.ok()) << text;
  return r.error() ? r.error()->message : "";
}

}  // namespace

TEST(JsonParse, IntegerArray) {
  JsonValue v = parse("[12, 3, 7]");
  ASSERT_TRUE(v.is_array());
  ASSERT_EQ(v.as_array().size(), 3u);
  EXPECT_EQ(v.as_array()[0].as_number(), (JsonNumber{12, true}));
  EXPECT_EQ(v.as_array()[2].as_number().value, 7);
}

TEST(JsonParse, EmptyObject) {
  JsonValue v = parse("{}");
  ASSERT_TRUE(v.is_object());
  EXPECT_TRUE(v.as_object().empty());
}

TEST(JsonParse, Literals) {
  JsonValue v = parse("[ true, false, null ]");
  const auto& a = v.as_array();
  EXPECT_TRUE(a[0].as_bool());
  EXPECT_FALSE(a[1].as_bool());
  EXPECT_TRUE(a[2].is_null());
}

TEST(JsonParse, NumberFlags) {
  EXPECT_TRUE(parse("-0").as_number().integral);
  EXPECT_FALSE(parse("1.0").as_number().integral);
  EXPECT_FALSE(parse("1e2").as_number().integral);
  EXPECT_EQ(parse("1e2").as_number().value, 100.0);
  EXPECT_EQ(parse("-2.5E-1").as_number().value, -0.25);
}

TEST(JsonParse, NumberRange) {
  EXPECT_NE(error_of("1e400").find("out of range"), std::string::npos);
  JsonValue tiny = parse("-1e-400");
  EXPECT_EQ(tiny.as_number().value, 0.0);
  EXPECT_TRUE(std::signbit(tiny.as_number().value));
  EXPECT_EQ(parse("0.000e999").as_number().value, 0.0);
}

TEST(JsonParse, ObjectOrderPreserved) {
  JsonValue v = parse(R"({"b":1,"a":2,"c":3})");
  const auto& o = v.as_object();
  ASSERT_EQ(o.size(), 3u);
  EXPECT_EQ(o[0].key, "b");
  EXPECT_EQ(o[1].key, "a");
  EXPECT_EQ(o[2].key, "c");
  EXPECT_EQ(v.find("a")->as_number().value, 2);
  EXPECT_EQ(v.find("zz"), nullptr);
}

TEST(JsonParse, DuplicateKeyLastWins) {
  ParseResult r = parse_json(R"({"a":1,"b":2,"a":3})");
  ASSERT_TRUE(r.ok());
  const auto& o = r.value->as_object();
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0].key, "a");
  EXPECT_EQ(o[0].value.as_number().value, 3);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].severity, DiagnosticSeverity::Warning);
  EXPECT_EQ(r.diagnostics[0].offset, 13u);
}

TEST(JsonParse, StringEscapes) {
  EXPECT_EQ(parse(R"("a\"b\\c\/d\b\f\n\r\t")").as_string(), "a\"b\\c/d\b\f\n\r\t");
  EXPECT_EQ(parse(R"("\u00e9")").as_string(), "\xC3\xA9");
  EXPECT_EQ(parse(R"("\ud83d\ude00")").as_string(), "\xF0\x9F\x98\x80");
  EXPECT_EQ(parse("\"\xE2\x82\xAC\"").as_string(), "\xE2\x82\xAC");
}

TEST(JsonParse, Errors) {
  EXPECT_NE(error_of(R"("\ud83d")").find("surrogate"), std::string::npos);
  EXPECT_NE(error_of(R"("\ude00x")").find("surrogate"), std::string::npos);
  EXPECT_NE(error_of(R"("\ud83dA")").find("surrogate"), std::string::npos);
  EXPECT_NE(error_of("\"\xC0\xAF\"").find("UTF-8"), std::string::npos);
  EXPECT_NE(error_of("\"\xED\xA0\x80\"").find("UTF-8"), std::string::npos);
  EXPECT_NE(error_of("\"\xF0\x9F\x98\"").find("UTF-8"), std::string::npos);
  EXPECT_NE(error_of("[1] x").find("trailing"), std::string::npos);
  error_of("");
  error_of("[1,]");
  error_of("{\"a\" 1}");
  error_of("{\"a\":1,}");
  error_of("01");
  error_of("1.");
  error_of("-");
  error_of("+1");
  error_of("tru");
  error_of("\"tab\there\"");
  error_of("NaN");
  error_of("[1 2]");
  error_of("// comment\n1");
}

TEST(JsonParse, DiagnosticPosition) {
  ParseResult r = parse_json("[1,\n  2,\n  x]");
  ASSERT_FALSE(r.ok());
  const ParseDiagnostic* e = r.error();
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->offset, 11u);
  EXPECT_EQ(e->line, 3u);
  EXPECT_EQ(e->column, 3u);
  EXPECT_NE(e->to_string().find("3:3: error"), std::string::npos);

  ParseResult eof = parse_json("[1, 2");
  ASSERT_FALSE(eof.ok());
  EXPECT_LT(eof.error()->offset, 5u);
}

TEST(JsonParse, DepthLimit) {
  std::string ok(500, '[');
  ok += std::string(500, ']');
  EXPECT_TRUE(parse_json(ok).ok());
  std::string deep(100000, '[');
  EXPECT_FALSE(parse_json(deep).ok());
  std::string nested_objects;
  for (int i = 0; i < 600; ++i) nested_objects += "{\"a\":";
  EXPECT_NE(error_of(nested_objects).find("nesting"), std::string::npos);
}

TEST(JsonParse, ByteOrderMark) {
  ParseResult r = parse_json("\xEF\xBB\xBF[1]");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].severity, DiagnosticSeverity::Warning);
}

TEST(JsonParse, ThrowingVariant) {
  try {
    parse_json_or_throw("[1,");
    FAIL() << "expected exception";
  } catch (const JsonParseError& e) {
    EXPECT_EQ(e.diagnostic().severity, DiagnosticSeverity::Error);
  }
}

TEST(JsonSerialize, Styles) {
  JsonValue v = parse("[1, 2, 3.14]");
  EXPECT_EQ(serialize_json(v), "[1,2,3.14]");
  EXPECT_EQ(serialize_json(v, JsonStyle::Spaced), "[ 1, 2, 3.14 ]");
  EXPECT_EQ(serialize_json(v, JsonStyle::Pretty), "[\n  1,\n  2,\n  3.14\n]");

  JsonValue o = parse(R"({"foo":[3.14]})");
  EXPECT_EQ(serialize_json(o, JsonStyle::Spaced), R"({ "foo" : [ 3.14 ] })");
  EXPECT_EQ(serialize_json(o, JsonStyle::Pretty), "{\n  \"foo\" : [\n    3.14\n  ]\n}");
}

TEST(JsonSerialize, Empty) {
  EXPECT_EQ(serialize_json(JsonArray{}), "[]");
  EXPECT_EQ(serialize_json(JsonArray{}, JsonStyle::Pretty), "[]");
  EXPECT_EQ(serialize_json(JsonArray{}, JsonStyle::Spaced), "[  ]");
  EXPECT_EQ(serialize_json(JsonObject{}, JsonStyle::Spaced), "{}");
  EXPECT_EQ(serialize_json(parse(R"({"foo":[]})"), JsonStyle::Spaced), R"({ "foo" : [  ] })");
}

TEST(JsonSerialize, Numbers) {
  EXPECT_EQ(format_json_number({12, true}), "12");
  EXPECT_EQ(format_json_number({-0.0, true}), "-0");
  EXPECT_EQ(format_json_number({1e23, true}), "99999999999999991611392");
  EXPECT_EQ(format_json_number({3.0, false}), "3.0");
  EXPECT_EQ(format_json_number({0.1, false}), "0.1");
  EXPECT_EQ(format_json_number({1e23, false}), "1e+23");
  EXPECT_EQ(format_json_number({5e-324, false}), "5e-324");
}

TEST(JsonSerialize, StringEscaping) {
  JsonValue s(std::string("q\"b\\\n\x01\x1f\xC3\xA9/"));
  EXPECT_EQ(serialize_json(s), R"("q\"b\\\n\u0001\u001f)" "\xC3\xA9" R"(/")");
  EXPECT_EQ(parse(serialize_json(s)), s);
}

TEST(JsonSerialize, RoundTripAllStyles) {
  const char* docs[] = {
      R"({"a":[1,2.5,-3e-7,true,null,"x\u0000y"],"b":{"c":{}},"d":[[],[{}]]})",
      R"([1.0, 100, 1e300, -0.0, 0.30000000000000004])",
      R"("\ud83d\ude00 \u00e9")",
      "null",
  };
  for (const char* d : docs) {
    JsonValue v = parse(d);
    for (JsonStyle s : {JsonStyle::Compact, JsonStyle::Pretty, JsonStyle::Spaced}) {
      EXPECT_EQ(parse(serialize_json(v, s)), v) << d;
    }
  }
}

TEST(JsonText, StripWhitespace) {
  EXPECT_EQ(strip_json_whitespace("[ 1, 2, \"a b\" ]"), "[1,2,\"a b\"]");
  EXPECT_EQ(strip_json_whitespace("{ \"k\\\" \" : 1 }"), "{\"k\\\" \":1}");
}

TEST(JsonText, Utf8Check) {
  EXPECT_TRUE(is_valid_utf8("plain \xC3\xA9 \xF0\x9F\x98\x80"));
  EXPECT_FALSE(is_valid_utf8("\xFF"));
  EXPECT_FALSE(is_valid_utf8("\xE2\x82"));
  EXPECT_FALSE(is_valid_utf8("\xF4\x90\x80\x80"));
}

TEST(JsonValueTest, TypeNames) {
  EXPECT_EQ(json_type_name(JsonType::Object), "object");
  EXPECT_EQ(json_type_name(parse("[1]").as_array()[0].type()), "number");
}
