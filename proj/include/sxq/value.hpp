// Immutable s-expression values: symbols, numbers, strings, booleans, pairs
// and the empty list. Structural equality is total; a proper list is Empty
// or a Pair whose cdr is a proper list.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sxq {

class Value {
 public:
  enum class Kind { Empty, Symbol, Integer, Decimal, String, Boolean, Pair };

  /// Default-constructed values are the empty list.
  Value();

  static Value symbol(std::string name);
  static Value integer(std::int64_t value);
  static Value decimal(double value);
  static Value string(std::string text);
  static Value boolean(bool flag);
  static Value cons(Value car, Value cdr);
  static Value empty();

  /// Builds a proper list of the given elements.
  static Value list(std::vector<Value> elements);

  Kind kind() const;

  bool is_empty_list() const { return kind() == Kind::Empty; }
  bool is_symbol() const { return kind() == Kind::Symbol; }
  bool is_integer() const { return kind() == Kind::Integer; }
  bool is_decimal() const { return kind() == Kind::Decimal; }
  bool is_string() const { return kind() == Kind::String; }
  bool is_boolean() const { return kind() == Kind::Boolean; }
  bool is_pair() const { return kind() == Kind::Pair; }

  // Accessors require the matching kind and throw std::logic_error otherwise.
  const std::string& symbol_name() const;
  std::int64_t integer_value() const;
  double decimal_value() const;
  const std::string& string_text() const;
  bool boolean_value() const;
  const Value& car() const;
  const Value& cdr() const;

  /// Structural equality over the whole tree.
  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  /// Identity of the underlying node; distinct parses yield distinct nodes.
  const void* node_id() const;

 private:
  struct Rep;
  explicit Value(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  static const std::shared_ptr<const Rep>& empty_rep();

  std::shared_ptr<const Rep> rep_;
};

/// The car/cdr view of a pair value.
struct PairView {
  Value car;
  Value cdr;

  friend bool operator==(const PairView& a, const PairView& b) {
    return a.car == b.car && a.cdr == b.cdr;
  }
};

}  // namespace sxq
