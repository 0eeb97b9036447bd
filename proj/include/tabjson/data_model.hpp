#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tabjson {

enum class ElementKind { Logical, Integer, Double, String, Complex, Factor, Date, Timestamp };

/// Per-slot state of a Double element. Other kinds only use None and NA.
enum class Special { None, NA, NaN, PosInf, NegInf };

std::string_view kind_name(ElementKind kind);
std::string_view special_name(Special special);

struct Complex {
  double re = 0.0;
  double im = 0.0;
  friend bool operator==(const Complex&, const Complex&) = default;
};

/// A factory input slot; nullopt is a missing value.
template <typename T>
using Cell = std::optional<T>;

/// Atomic vector. Payload lives in the array matching `kind`:
///   Logical -> logicals, Integer/Factor/Date -> integers (factor codes are
///   1-based, dates are days since 1970-01-01), Double -> doubles,
///   String -> strings, Complex -> complexes, Timestamp -> seconds.
/// Payload of a missing slot is unspecified (factories zero it).
struct Vector {
  ElementKind kind = ElementKind::Logical;
  std::vector<std::uint8_t> missing;
  std::vector<Special> special;  // Double only, same length as doubles
  std::vector<std::uint8_t> logicals;
  std::vector<std::int32_t> integers;
  std::vector<double> doubles;
  std::vector<std::string> strings;
  std::vector<Complex> complexes;
  std::vector<std::int64_t> seconds;
  std::vector<std::string> levels;  // Factor only

  static Vector empty(ElementKind kind);
  static Vector logical(std::vector<Cell<bool>> values);
  static Vector integer(std::vector<Cell<std::int32_t>> values);
  /// NaN and infinities in `values` get the matching Special tag.
  static Vector doubles_of(std::vector<double> values);
  static Vector doubles_with(std::vector<double> values, std::vector<Special> specials);
  static Vector string(std::vector<Cell<std::string>> values);
  static Vector complex(std::vector<Cell<Complex>> values);
  /// Levels default to the sorted unique non-missing labels.
  static Vector factor(const std::vector<Cell<std::string>>& labels,
                       std::optional<std::vector<std::string>> levels = std::nullopt);
  static Vector date(std::vector<Cell<std::int32_t>> days);
  static Vector timestamp(std::vector<Cell<std::int64_t>> secs);

  std::size_t size() const { return missing.size(); }
  bool is_missing(std::size_t i) const { return missing[i] != 0; }
  /// Copy of the slots at `indices`, in that order.
  Vector take(std::span<const std::size_t> indices) const;
  /// Appends slot `i` of `other` (same kind; factors must share levels).
  void push_from(const Vector& other, std::size_t i);
};

struct Matrix {
  Vector data;  // column-major, size nrow * ncol
  std::size_t nrow = 0;
  std::size_t ncol = 0;
  std::optional<std::vector<std::string>> row_names;
  std::optional<std::vector<std::string>> col_names;

  /// Builds from column-major data.
  static Matrix from_columns(Vector data, std::size_t nrow, std::size_t ncol);
  std::size_t index(std::size_t i, std::size_t j) const { return j * nrow + i; }
  Vector row(std::size_t i) const;
};

struct Frame;
struct List;

/// Owning pointer with value semantics, used to break the recursive type.
template <typename T>
class Boxed {
 public:
  Boxed() : ptr_(std::make_unique<T>()) {}
  Boxed(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Boxed(const Boxed& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Boxed(Boxed&&) noexcept = default;
  Boxed& operator=(const Boxed& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Boxed& operator=(Boxed&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

struct TabValue;

struct List {
  std::vector<TabValue> items;
  /// One entry per item when present; "" marks an unnamed item.
  std::optional<std::vector<std::string>> names;

  bool named() const { return names.has_value(); }
};

/// One TabValue per row.
struct ListColumn {
  std::vector<TabValue> items;
};

using Column = std::variant<Vector, Boxed<Frame>, ListColumn>;

struct NamedColumn {
  std::string name;
  Column column;
};

struct Frame {
  std::vector<NamedColumn> columns;
  std::size_t nrow = 0;
  std::optional<std::vector<std::string>> row_names;

  const Column* find(std::string_view name) const;
  Frame& add(std::string name, Column column);
};

std::size_t column_length(const Column& column);

struct TabValue {
  std::variant<Vector, Matrix, List, Frame> node;

  TabValue() = default;
  TabValue(Vector v) : node(std::move(v)) {}
  TabValue(Matrix m) : node(std::move(m)) {}
  TabValue(List l) : node(std::move(l)) {}
  TabValue(Frame f) : node(std::move(f)) {}

  bool is_vector() const { return node.index() == 0; }
  bool is_matrix() const { return node.index() == 1; }
  bool is_list() const { return node.index() == 2; }
  bool is_frame() const { return node.index() == 3; }
  const Vector& vector() const { return std::get<Vector>(node); }
  const Matrix& matrix() const { return std::get<Matrix>(node); }
  const List& list() const { return std::get<List>(node); }
  const Frame& frame() const { return std::get<Frame>(node); }
  Vector& vector() { return std::get<Vector>(node); }
  Matrix& matrix() { return std::get<Matrix>(node); }
  List& list() { return std::get<List>(node); }
  Frame& frame() { return std::get<Frame>(node); }
};

struct Violation {
  std::string path;
  std::string message;
};

std::vector<Violation> validate(const TabValue& value);
std::vector<Violation> validate(const Frame& frame);

bool deep_equal(const TabValue& a, const TabValue& b);
bool deep_equal(const Frame& a, const Frame& b);
bool deep_equal(const Vector& a, const Vector& b);

/// Path of the first difference found by deep_equal, or nullopt when equal.
std::optional<std::string> first_difference(const TabValue& a, const TabValue& b);

std::string type_name(const TabValue& value);
std::string type_name(const Column& column);

}  // namespace tabjson
