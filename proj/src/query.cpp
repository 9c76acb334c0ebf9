#include "sxq/query.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "sxq/list_patterns.hpp"
#include "sxq/motif.hpp"
#include "sxq/reader.hpp"

namespace sxq {

struct detail::QueryNode {
  QueryAst::Kind kind;
  std::string name;           // Var
  Value literal;              // Literal
  std::vector<QueryAst> kids; // PairPat: car, cdr; Or/And: branches; Suffix/Elem: inner
};

QueryAst QueryAst::make(Kind kind, std::string name, Value literal,
                        std::vector<QueryAst> kids) {
  return QueryAst(std::make_shared<const detail::QueryNode>(detail::QueryNode{
      kind, std::move(name), std::move(literal), std::move(kids)}));
}

QueryAst QueryAst::wildcard() {
  return make(Kind::Wildcard, {}, {}, {});
}

QueryAst QueryAst::var(std::string name) {
  return make(Kind::Var, std::move(name), {}, {});
}

QueryAst QueryAst::literal(Value v) {
  return make(Kind::Literal, {}, std::move(v), {});
}

QueryAst QueryAst::pair(QueryAst car, QueryAst cdr) {
  return make(Kind::PairPat, {}, {}, {std::move(car), std::move(cdr)});
}

QueryAst QueryAst::empty_list() {
  return make(Kind::EmptyPat, {}, {}, {});
}

QueryAst QueryAst::any_of(std::vector<QueryAst> branches) {
  if (branches.empty()) throw std::invalid_argument("any_of needs a branch");
  return make(Kind::OrPat, {}, {}, std::move(branches));
}

QueryAst QueryAst::all_of(std::vector<QueryAst> branches) {
  if (branches.empty()) throw std::invalid_argument("all_of needs a branch");
  return make(Kind::AndPat, {}, {}, std::move(branches));
}

QueryAst QueryAst::suffix(QueryAst inner) {
  return make(Kind::SuffixPat, {}, {}, {std::move(inner)});
}

QueryAst QueryAst::element(QueryAst inner) {
  return make(Kind::ElemPat, {}, {}, {std::move(inner)});
}

QueryAst::Kind QueryAst::kind() const { return node_->kind; }

const std::string& QueryAst::var_name() const { return node_->name; }

const Value& QueryAst::literal_value() const { return node_->literal; }

const QueryAst& QueryAst::car() const { return node_->kids[0]; }

const QueryAst& QueryAst::cdr() const { return node_->kids[1]; }

const std::vector<QueryAst>& QueryAst::branches() const { return node_->kids; }

const QueryAst& QueryAst::inner() const { return node_->kids[0]; }

bool operator==(const QueryAst& a, const QueryAst& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case QueryAst::Kind::Wildcard:
    case QueryAst::Kind::EmptyPat:
      return true;
    case QueryAst::Kind::Var:
      return a.var_name() == b.var_name();
    case QueryAst::Kind::Literal:
      return a.literal_value() == b.literal_value();
    default:
      return a.node_->kids == b.node_->kids;
  }
}

namespace {

void render(const QueryAst& q, std::string& out) {
  switch (q.kind()) {
    case QueryAst::Kind::Wildcard:
      out += "_";
      return;
    case QueryAst::Kind::Var:
      out += "?" + q.var_name();
      return;
    case QueryAst::Kind::Literal:
      out += print(q.literal_value());
      return;
    case QueryAst::Kind::EmptyPat:
      out += "()";
      return;
    case QueryAst::Kind::OrPat:
    case QueryAst::Kind::AndPat:
      out += q.kind() == QueryAst::Kind::OrPat ? "(%or" : "(%and";
      for (const QueryAst& b : q.branches()) {
        out += ' ';
        render(b, out);
      }
      out += ')';
      return;
    case QueryAst::Kind::SuffixPat:
    case QueryAst::Kind::ElemPat:
      out += q.kind() == QueryAst::Kind::SuffixPat ? "(%suffix " : "(%elem ";
      render(q.inner(), out);
      out += ')';
      return;
    case QueryAst::Kind::PairPat:
      break;
  }
  out += '(';
  render(q.car(), out);
  const QueryAst* rest = &q.cdr();
  while (rest->kind() == QueryAst::Kind::PairPat) {
    out += ' ';
    render(rest->car(), out);
    rest = &rest->cdr();
  }
  if (rest->kind() != QueryAst::Kind::EmptyPat) {
    out += " . ";
    render(*rest, out);
  }
  out += ')';
}

}  // namespace

std::string QueryAst::to_text() const {
  std::string out;
  render(*this, out);
  return out;
}

namespace {

SourcePosition position_of(const PositionMap& positions, const Value& v) {
  return positions.find(v).value_or(SourcePosition{1, 1});
}

QueryAst query_from_value(const Value& v, const PositionMap& positions);

// Operator forms carry their arguments as a proper list after the head.
std::vector<QueryAst> operator_args(const Value& form,
                                    const PositionMap& positions) {
  std::vector<QueryAst> args;
  const Value* rest = &form.cdr();
  while (rest->is_pair()) {
    args.push_back(query_from_value(rest->car(), positions));
    rest = &rest->cdr();
  }
  if (!rest->is_empty_list()) {
    throw ParseError("operator form must be a proper list",
                     position_of(positions, form));
  }
  return args;
}

QueryAst operator_form(const Value& form, const PositionMap& positions) {
  const std::string& op = form.car().symbol_name();
  if (op == "%or" || op == "%and") {
    std::vector<QueryAst> args = operator_args(form, positions);
    if (args.size() < 2) {
      throw ParseError("operator " + op + " needs at least 2 arguments",
                       position_of(positions, form));
    }
    return op == "%or" ? QueryAst::any_of(std::move(args))
                       : QueryAst::all_of(std::move(args));
  }
  if (op == "%suffix" || op == "%elem") {
    std::vector<QueryAst> args = operator_args(form, positions);
    if (args.size() != 1) {
      throw ParseError("operator " + op + " needs exactly 1 argument",
                       position_of(positions, form));
    }
    return op == "%suffix" ? QueryAst::suffix(std::move(args[0]))
                           : QueryAst::element(std::move(args[0]));
  }
  throw ParseError("unknown operator " + op,
                   position_of(positions, form.car()));
}

QueryAst query_from_value(const Value& v, const PositionMap& positions) {
  switch (v.kind()) {
    case Value::Kind::Pair:
      if (v.car().is_symbol() && v.car().symbol_name().starts_with("%")) {
        return operator_form(v, positions);
      }
      return QueryAst::pair(query_from_value(v.car(), positions),
                            query_from_value(v.cdr(), positions));
    case Value::Kind::Empty:
      return QueryAst::empty_list();
    case Value::Kind::Symbol: {
      const std::string& name = v.symbol_name();
      if (name == "_") return QueryAst::wildcard();
      if (name.starts_with("?")) {
        if (name.size() == 1) {
          throw ParseError("malformed variable name '?'",
                           position_of(positions, v));
        }
        return QueryAst::var(name.substr(1));
      }
      if (name.starts_with("%")) {
        throw ParseError("reserved operator symbol " + name +
                             " outside operator position",
                         position_of(positions, v));
      }
      return QueryAst::literal(v);
    }
    default:
      return QueryAst::literal(v);
  }
}

}  // namespace

QueryAst parse_query(std::string_view text) {
  PositionMap positions;
  Value form = read(text, positions);
  return query_from_value(form, positions);
}

const Value* BindingSet::find(std::string_view name) const {
  for (const auto& [entry_name, value] : entries) {
    if (entry_name == name) return &value;
  }
  return nullptr;
}

bool operator==(const BindingSet& a, const BindingSet& b) {
  return a.entries == b.entries;
}

struct detail::VarSlot {
  std::string name;
  bool bound = false;
  Value value;
  std::uint64_t seq = 0;
  std::shared_ptr<std::uint64_t> clock;
};

namespace {

// One occurrence of a query variable. If its slot is unbound it binds the
// target; otherwise it checks structural equality with the current binding.
// A binding made here is withdrawn when this occurrence is exhausted, so a
// solution's bindings are exactly those on its live search path.
class VarRefPattern final : public PatternImpl<Value> {
 public:
  explicit VarRefPattern(std::shared_ptr<detail::VarSlot> slot)
      : slot_(std::move(slot)) {}

 protected:
  bool do_match(const Value& target) override {
    if (slot_->bound) {
      holds_binding_ = false;
      return target == slot_->value;
    }
    slot_->bound = true;
    slot_->value = target;
    slot_->seq = ++*slot_->clock;
    holds_binding_ = true;
    return true;
  }

  bool do_match_again() override {
    if (holds_binding_) {
      slot_->bound = false;
      holds_binding_ = false;
    }
    return false;
  }

 private:
  std::shared_ptr<detail::VarSlot> slot_;
  bool holds_binding_ = false;
};

using SlotTable = std::vector<std::shared_ptr<detail::VarSlot>>;

Pattern<Value> compile_node(const QueryAst& ast, SlotTable& slots,
                            const std::shared_ptr<std::uint64_t>& clock) {
  switch (ast.kind()) {
    case QueryAst::Kind::Wildcard:
      return any<Value>();
    case QueryAst::Kind::Var: {
      auto found = std::find_if(slots.begin(), slots.end(), [&](const auto& s) {
        return s->name == ast.var_name();
      });
      std::shared_ptr<detail::VarSlot> slot;
      if (found != slots.end()) {
        slot = *found;
      } else {
        slot = std::make_shared<detail::VarSlot>();
        slot->name = ast.var_name();
        slot->clock = clock;
        slots.push_back(slot);
      }
      return Pattern<Value>(std::make_shared<VarRefPattern>(std::move(slot)));
    }
    case QueryAst::Kind::Literal:
      return eq(ast.literal_value());
    case QueryAst::Kind::EmptyPat:
      return is_empty();
    case QueryAst::Kind::PairPat:
      return pair_pattern(compile_node(ast.car(), slots, clock),
                          compile_node(ast.cdr(), slots, clock));
    case QueryAst::Kind::OrPat:
    case QueryAst::Kind::AndPat: {
      const std::vector<QueryAst>& branches = ast.branches();
      Pattern<Value> out = compile_node(branches[0], slots, clock);
      for (std::size_t i = 1; i < branches.size(); ++i) {
        Pattern<Value> next = compile_node(branches[i], slots, clock);
        out = ast.kind() == QueryAst::Kind::OrPat
                  ? disj(std::move(out), std::move(next))
                  : conj(std::move(out), std::move(next));
      }
      return out;
    }
    case QueryAst::Kind::SuffixPat:
      return nthcdr().apply(compile_node(ast.inner(), slots, clock));
    case QueryAst::Kind::ElemPat:
      return nth().apply(compile_node(ast.inner(), slots, clock));
  }
  throw std::logic_error("unhandled query node");
}

}  // namespace

CompiledQuery::CompiledQuery(Pattern<Value> pattern,
                             std::vector<std::shared_ptr<detail::VarSlot>> slots)
    : pattern_(std::move(pattern)), slots_(std::move(slots)) {}

bool CompiledQuery::match(const Value& target) {
  for (const auto& slot : slots_) slot->bound = false;
  return pattern_.match(target);
}

bool CompiledQuery::match_again() { return pattern_.match_again(); }

BindingSet CompiledQuery::bindings() const {
  std::vector<const detail::VarSlot*> live;
  for (const auto& slot : slots_) {
    if (slot->bound) live.push_back(slot.get());
  }
  std::sort(live.begin(), live.end(),
            [](const detail::VarSlot* a, const detail::VarSlot* b) { return a->seq < b->seq; });
  BindingSet out;
  for (const detail::VarSlot* slot : live) out.entries.emplace_back(slot->name, slot->value);
  return out;
}

std::vector<std::string> CompiledQuery::variable_names() const {
  std::vector<std::string> names;
  names.reserve(slots_.size());
  for (const auto& slot : slots_) names.push_back(slot->name);
  return names;
}

CompiledQuery compile_query(const QueryAst& ast) {
  auto clock = std::make_shared<std::uint64_t>(0);
  SlotTable slots;
  Pattern<Value> pattern = compile_node(ast, slots, clock);
  return CompiledQuery(std::move(pattern), std::move(slots));
}

CompiledQuery compile_query(std::string_view text) {
  return compile_query(parse_query(text));
}

std::vector<BindingSet> collect_bindings(CompiledQuery& query,
                                         const Value& target,
                                         std::optional<std::size_t> max) {
  if (max && *max == 0) {
    throw std::invalid_argument("solution limit must be at least 1");
  }
  std::vector<BindingSet> out;
  for (bool ok = query.match(target); ok; ok = query.match_again()) {
    out.push_back(query.bindings());
    if (max && out.size() >= *max) break;
  }
  return out;
}

}  // namespace sxq
