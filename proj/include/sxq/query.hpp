// The textual query language: parsed into QueryAst and compiled onto the
// pattern combinators.
//
// Surface syntax is s-expression shaped:
//   _                  matches anything
//   ?name              matches anything and binds it to name
//   ()                 matches the empty list
//   any other atom     matches literally
//   (%or p q ...)      alternatives, tried left to right
//   (%and p q ...)     all patterns against the same target
//   (%suffix p)        p against the target or any iterated cdr of it
//   (%elem p)          p against some list element, in list order
//   (p1 p2 [. ptail])  a pair template, proper form terminated by ()
//
// Symbols beginning with % are reserved for operators. A variable name
// reused within one query requires structurally equal values at every
// occurrence.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sxq/pattern.hpp"
#include "sxq/value.hpp"

namespace sxq {

namespace detail {
struct QueryNode;
struct VarSlot;
}  // namespace detail

class QueryAst {
 public:
  enum class Kind {
    Wildcard,
    Var,
    Literal,
    PairPat,
    EmptyPat,
    OrPat,
    AndPat,
    SuffixPat,
    ElemPat,
  };

  static QueryAst wildcard();
  static QueryAst var(std::string name);
  static QueryAst literal(Value v);
  static QueryAst pair(QueryAst car, QueryAst cdr);
  static QueryAst empty_list();
  static QueryAst any_of(std::vector<QueryAst> branches);
  static QueryAst all_of(std::vector<QueryAst> branches);
  static QueryAst suffix(QueryAst inner);
  static QueryAst element(QueryAst inner);

  Kind kind() const;

  const std::string& var_name() const;      // Var
  const Value& literal_value() const;       // Literal
  const QueryAst& car() const;              // PairPat
  const QueryAst& cdr() const;              // PairPat
  const std::vector<QueryAst>& branches() const;  // OrPat, AndPat
  const QueryAst& inner() const;            // SuffixPat, ElemPat

  /// Renders the query in surface syntax; intended for diagnostics.
  std::string to_text() const;

  friend bool operator==(const QueryAst& a, const QueryAst& b);
  friend bool operator!=(const QueryAst& a, const QueryAst& b) {
    return !(a == b);
  }

 private:
  explicit QueryAst(std::shared_ptr<const detail::QueryNode> node)
      : node_(std::move(node)) {}

  static QueryAst make(Kind kind, std::string name, Value literal,
                       std::vector<QueryAst> kids);

  std::shared_ptr<const detail::QueryNode> node_;
};

/// Parses the surface syntax. Throws ParseError, with a source position, on
/// malformed text, unknown or misplaced % operators, and arity violations.
QueryAst parse_query(std::string_view text);

/// One solution's bindings, in binding order.
struct BindingSet {
  std::vector<std::pair<std::string, Value>> entries;

  const Value* find(std::string_view name) const;

  friend bool operator==(const BindingSet& a, const BindingSet& b);
  friend bool operator!=(const BindingSet& a, const BindingSet& b) {
    return !(a == b);
  }
};

/// A fresh pattern compiled from a QueryAst together with its variable
/// table. Single-session like the pattern it wraps; compile one per
/// concurrent consumer.
class CompiledQuery {
 public:
  /// Opens a new session, clearing all variable bindings first.
  bool match(const Value& target);

  /// Advances to the next solution.
  bool match_again();

  /// Snapshot of the current solution's bindings. Variables not bound on
  /// the successful branch are absent.
  BindingSet bindings() const;

  /// Variable names in first-occurrence order.
  std::vector<std::string> variable_names() const;

 private:
  friend CompiledQuery compile_query(const QueryAst& ast);

  CompiledQuery(Pattern<Value> pattern,
                std::vector<std::shared_ptr<detail::VarSlot>> slots);

  Pattern<Value> pattern_;
  std::vector<std::shared_ptr<detail::VarSlot>> slots_;
};

CompiledQuery compile_query(const QueryAst& ast);

/// Parses and compiles in one step.
CompiledQuery compile_query(std::string_view text);

/// Drains the query's session over target, snapshotting each solution, in
/// solution order; stops after max solutions when given (max must be >= 1).
std::vector<BindingSet> collect_bindings(
    CompiledQuery& query, const Value& target,
    std::optional<std::size_t> max = std::nullopt);

}  // namespace sxq
