// Textual s-expression reading and canonical printing.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "sxq/value.hpp"

namespace sxq {

/// 1-based position in the input text; columns count bytes.
struct SourcePosition {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, SourcePosition position)
      : std::runtime_error(std::to_string(position.line) + ":" +
                           std::to_string(position.column) + ": " + message),
        position_(position) {}

  SourcePosition position() const { return position_; }

 private:
  SourcePosition position_;
};

/// Source positions of the symbol and pair nodes of one read() result,
/// keyed by node identity.
class PositionMap {
 public:
  std::optional<SourcePosition> find(const Value& v) const {
    auto it = map_.find(v.node_id());
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void record(const Value& v, SourcePosition pos) {
    map_.emplace(v.node_id(), pos);
  }

 private:
  std::unordered_map<const void*, SourcePosition> map_;
};

/// Parses exactly one s-expression, optionally surrounded by whitespace and
/// line comments. Throws ParseError (with a position) on malformed input,
/// including trailing garbage after the expression.
Value read(std::string_view text);

/// As read(), also recording source positions of symbol and pair nodes.
Value read(std::string_view text, PositionMap& positions);

/// Canonical form: single spaces, proper lists without dots, dotted tails as
/// " . tail", strings re-escaped, booleans as #t and #f. Reading the printed
/// form yields a structurally equal value, and printing is idempotent.
std::string print(const Value& v);

}  // namespace sxq
