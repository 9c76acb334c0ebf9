#include "sxq/value.hpp"

#include <stdexcept>
#include <utility>
#include <variant>

namespace sxq {

namespace {

struct SymbolData {
  std::string name;
};

struct StringData {
  std::string text;
};

}  // namespace

struct Value::Rep {
  struct PairData {
    Value car;
    Value cdr;
  };

  using Payload = std::variant<std::monostate, SymbolData, std::int64_t,
                               double, StringData, bool, PairData>;

  explicit Rep(Payload payload) : payload(std::move(payload)) {}

  Payload payload;
};

const std::shared_ptr<const Value::Rep>& Value::empty_rep() {
  static const std::shared_ptr<const Rep> rep =
      std::make_shared<const Rep>(Rep::Payload{std::monostate{}});
  return rep;
}

namespace {

[[noreturn]] void kind_error(const char* expected) {
  throw std::logic_error(std::string("value is not a ") + expected);
}

}  // namespace

Value::Value() : rep_(empty_rep()) {}

Value Value::symbol(std::string name) {
  return Value(std::make_shared<const Rep>(
      Rep::Payload{std::in_place_type<SymbolData>, std::move(name)}));
}

Value Value::integer(std::int64_t value) {
  return Value(std::make_shared<const Rep>(
      Rep::Payload{std::in_place_type<std::int64_t>, value}));
}

Value Value::decimal(double value) {
  return Value(std::make_shared<const Rep>(
      Rep::Payload{std::in_place_type<double>, value}));
}

Value Value::string(std::string text) {
  return Value(std::make_shared<const Rep>(
      Rep::Payload{std::in_place_type<StringData>, std::move(text)}));
}

Value Value::boolean(bool flag) {
  return Value(std::make_shared<const Rep>(
      Rep::Payload{std::in_place_type<bool>, flag}));
}

Value Value::cons(Value car, Value cdr) {
  return Value(std::make_shared<const Rep>(Rep::Payload{
      std::in_place_type<Rep::PairData>, std::move(car), std::move(cdr)}));
}

Value Value::empty() { return Value(empty_rep()); }

Value Value::list(std::vector<Value> elements) {
  Value out = empty();
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
    out = cons(std::move(*it), std::move(out));
  }
  return out;
}

Value::Kind Value::kind() const {
  switch (rep_->payload.index()) {
    case 0: return Kind::Empty;
    case 1: return Kind::Symbol;
    case 2: return Kind::Integer;
    case 3: return Kind::Decimal;
    case 4: return Kind::String;
    case 5: return Kind::Boolean;
    default: return Kind::Pair;
  }
}

const std::string& Value::symbol_name() const {
  if (const auto* s = std::get_if<SymbolData>(&rep_->payload)) return s->name;
  kind_error("symbol");
}

std::int64_t Value::integer_value() const {
  if (const auto* i = std::get_if<std::int64_t>(&rep_->payload)) return *i;
  kind_error("integer");
}

double Value::decimal_value() const {
  if (const auto* d = std::get_if<double>(&rep_->payload)) return *d;
  kind_error("decimal");
}

const std::string& Value::string_text() const {
  if (const auto* s = std::get_if<StringData>(&rep_->payload)) return s->text;
  kind_error("string");
}

bool Value::boolean_value() const {
  if (const auto* b = std::get_if<bool>(&rep_->payload)) return *b;
  kind_error("boolean");
}

const Value& Value::car() const {
  if (const auto* p = std::get_if<Rep::PairData>(&rep_->payload)) return p->car;
  kind_error("pair");
}

const Value& Value::cdr() const {
  if (const auto* p = std::get_if<Rep::PairData>(&rep_->payload)) return p->cdr;
  kind_error("pair");
}

const void* Value::node_id() const { return rep_.get(); }

bool operator==(const Value& a, const Value& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.rep_->payload.index() != b.rep_->payload.index()) return false;
  switch (a.kind()) {
    case Value::Kind::Empty: return true;
    case Value::Kind::Symbol: return a.symbol_name() == b.symbol_name();
    case Value::Kind::Integer: return a.integer_value() == b.integer_value();
    case Value::Kind::Decimal: return a.decimal_value() == b.decimal_value();
    case Value::Kind::String: return a.string_text() == b.string_text();
    case Value::Kind::Boolean: return a.boolean_value() == b.boolean_value();
    case Value::Kind::Pair:
      return a.car() == b.car() && a.cdr() == b.cdr();
  }
  return false;
}

}  // namespace sxq
