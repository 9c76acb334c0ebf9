#include "sxq/reader.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace sxq {

namespace {

bool is_whitespace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_delimiter(char c) {
  return is_whitespace(c) || c == '(' || c == ')' || c == '"' || c == ';';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Lexical shape [+-]?digits.
bool integer_shaped(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!is_digit(s[i])) return false;
  }
  return true;
}

// Lexical shape [+-]?digits.digits.
bool decimal_shaped(std::string_view s) {
  std::size_t dot = s.find('.');
  if (dot == std::string_view::npos) return false;
  return integer_shaped(s.substr(0, dot)) && !s.substr(dot + 1).empty() &&
         integer_shaped(s.substr(dot + 1)) && s[dot + 1] != '+' &&
         s[dot + 1] != '-';
}

class Reader {
 public:
  Reader(std::string_view text, PositionMap* positions)
      : text_(text), positions_(positions) {}

  Value read_single() {
    skip_blank();
    if (at_end()) throw ParseError("empty input", position());
    Value v = parse_value();
    skip_blank();
    if (!at_end()) throw ParseError("trailing garbage after expression", position());
    return v;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  SourcePosition position() const { return {line_, column_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (!at_end()) {
      if (is_whitespace(peek())) {
        advance();
      } else if (peek() == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  bool at_lone_dot() const {
    return peek() == '.' &&
           (pos_ + 1 >= text_.size() || is_delimiter(text_[pos_ + 1]));
  }

  void record(const Value& v, SourcePosition pos) {
    if (positions_) positions_->record(v, pos);
  }

  Value parse_value() {
    SourcePosition pos = position();
    char c = peek();
    if (c == '(') {
      advance();
      return parse_list_body(pos);
    }
    if (c == ')') throw ParseError("unexpected ')'", pos);
    if (c == '"') {
      advance();
      return parse_string(pos);
    }
    if (at_lone_dot()) throw ParseError("unexpected '.'", pos);
    return parse_atom(pos);
  }

  Value parse_list_body(SourcePosition open_pos) {
    std::vector<std::pair<Value, SourcePosition>> elements;
    Value tail = Value::empty();
    for (;;) {
      skip_blank();
      if (at_end()) throw ParseError("unbalanced '('", open_pos);
      if (peek() == ')') {
        advance();
        break;
      }
      if (at_lone_dot()) {
        SourcePosition dot_pos = position();
        if (elements.empty()) {
          throw ParseError("dotted tail without preceding element", dot_pos);
        }
        advance();
        skip_blank();
        if (at_end()) throw ParseError("unbalanced '('", open_pos);
        if (peek() == ')') {
          throw ParseError("missing value after '.'", position());
        }
        tail = parse_value();
        skip_blank();
        if (at_end()) throw ParseError("unbalanced '('", open_pos);
        if (peek() != ')') {
          throw ParseError("more than one value after '.'", position());
        }
        advance();
        break;
      }
      SourcePosition elem_pos = position();
      elements.emplace_back(parse_value(), elem_pos);
    }
    Value out = std::move(tail);
    for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
      out = Value::cons(std::move(it->first), out);
      // The outermost cell carries the position of the opening parenthesis.
      record(out, it + 1 == elements.rend() ? open_pos : it->second);
    }
    return out;
  }

  Value parse_string(SourcePosition open_pos) {
    std::string text;
    for (;;) {
      if (at_end()) throw ParseError("unterminated string literal", open_pos);
      char c = peek();
      if (c == '"') {
        advance();
        return Value::string(std::move(text));
      }
      if (c == '\\') {
        SourcePosition esc_pos = position();
        advance();
        if (at_end()) throw ParseError("unterminated string literal", open_pos);
        char e = peek();
        if (e != '"' && e != '\\') {
          throw ParseError("invalid string escape", esc_pos);
        }
        text.push_back(e);
        advance();
      } else {
        text.push_back(c);
        advance();
      }
    }
  }

  Value parse_atom(SourcePosition pos) {
    std::size_t start = pos_;
    while (!at_end() && !is_delimiter(peek())) advance();
    std::string_view lexeme = text_.substr(start, pos_ - start);
    if (lexeme == "#t") return Value::boolean(true);
    if (lexeme == "#f") return Value::boolean(false);
    if (integer_shaped(lexeme)) {
      std::string_view digits = lexeme;
      if (digits[0] == '+') digits.remove_prefix(1);
      std::int64_t value = 0;
      auto result =
          std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (result.ec != std::errc{}) {
        throw ParseError("integer literal out of range", pos);
      }
      return Value::integer(value);
    }
    if (decimal_shaped(lexeme)) {
      std::string_view digits = lexeme;
      if (digits[0] == '+') digits.remove_prefix(1);
      double value = 0;
      auto result =
          std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (result.ec != std::errc{} || !std::isfinite(value)) {
        throw ParseError("decimal literal out of range", pos);
      }
      return Value::decimal(value);
    }
    Value sym = Value::symbol(std::string(lexeme));
    record(sym, pos);
    return sym;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  PositionMap* positions_;
};

void print_decimal(std::string& out, double d) {
  char buf[512];
  auto result =
      std::to_chars(buf, buf + sizeof(buf), d, std::chars_format::fixed);
  std::string_view text(buf, result.ptr - buf);
  out += text;
  if (text.find('.') == std::string_view::npos) out += ".0";
}

void print_string(std::string& out, const std::string& text) {
  out += '"';
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

void print_value(std::string& out, const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Empty:
      out += "()";
      return;
    case Value::Kind::Symbol:
      out += v.symbol_name();
      return;
    case Value::Kind::Integer:
      out += std::to_string(v.integer_value());
      return;
    case Value::Kind::Decimal:
      print_decimal(out, v.decimal_value());
      return;
    case Value::Kind::String:
      print_string(out, v.string_text());
      return;
    case Value::Kind::Boolean:
      out += v.boolean_value() ? "#t" : "#f";
      return;
    case Value::Kind::Pair:
      break;
  }
  out += '(';
  print_value(out, v.car());
  const Value* rest = &v.cdr();
  while (rest->is_pair()) {
    out += ' ';
    print_value(out, rest->car());
    rest = &rest->cdr();
  }
  if (!rest->is_empty_list()) {
    out += " . ";
    print_value(out, *rest);
  }
  out += ')';
}

}  // namespace

Value read(std::string_view text) {
  Reader reader(text, nullptr);
  return reader.read_single();
}

Value read(std::string_view text, PositionMap& positions) {
  Reader reader(text, &positions);
  return reader.read_single();
}

std::string print(const Value& v) {
  std::string out;
  print_value(out, v);
  return out;
}

}  // namespace sxq
