// An independent reference semantics for the query language: a direct
// recursive interpreter threading an environment of bindings, plus a seeded
// query generator. The interpreter never touches patterns or motifs; it is
// the yardstick the compiled queries are checked against.

#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sxq/query.hpp"
#include "sxq/value.hpp"

#include "test_values.hpp"

namespace testutil {

using Env = std::vector<std::pair<std::string, sxq::Value>>;

inline void oracle_solve(const sxq::QueryAst& q, const sxq::Value& v,
                         const Env& env, std::vector<Env>& out) {
  using Kind = sxq::QueryAst::Kind;
  switch (q.kind()) {
    case Kind::Wildcard:
      out.push_back(env);
      return;
    case Kind::Var: {
      for (const auto& [name, bound] : env) {
        if (name == q.var_name()) {
          if (bound == v) out.push_back(env);
          return;
        }
      }
      Env extended = env;
      extended.emplace_back(q.var_name(), v);
      out.push_back(std::move(extended));
      return;
    }
    case Kind::Literal:
      if (q.literal_value() == v) out.push_back(env);
      return;
    case Kind::EmptyPat:
      if (v.is_empty_list()) out.push_back(env);
      return;
    case Kind::PairPat: {
      if (!v.is_pair()) return;
      std::vector<Env> after_car;
      oracle_solve(q.car(), v.car(), env, after_car);
      for (const Env& e : after_car) oracle_solve(q.cdr(), v.cdr(), e, out);
      return;
    }
    case Kind::OrPat:
      for (const sxq::QueryAst& branch : q.branches()) {
        oracle_solve(branch, v, env, out);
      }
      return;
    case Kind::AndPat: {
      std::vector<Env> current{env};
      for (const sxq::QueryAst& branch : q.branches()) {
        std::vector<Env> next;
        for (const Env& e : current) oracle_solve(branch, v, e, next);
        current = std::move(next);
      }
      for (Env& e : current) out.push_back(std::move(e));
      return;
    }
    case Kind::SuffixPat:
      for (const sxq::Value& s : walk_suffixes(v)) {
        oracle_solve(q.inner(), s, env, out);
      }
      return;
    case Kind::ElemPat:
      for (const sxq::Value& e : walk_elements(v)) {
        oracle_solve(q.inner(), e, env, out);
      }
      return;
  }
}

inline std::vector<sxq::BindingSet> oracle_bindings(const sxq::QueryAst& q,
                                                    const sxq::Value& v) {
  std::vector<Env> envs;
  oracle_solve(q, v, Env{}, envs);
  std::vector<sxq::BindingSet> out;
  out.reserve(envs.size());
  for (Env& env : envs) out.push_back(sxq::BindingSet{std::move(env)});
  return out;
}

/// Random query with operator nesting of at most `depth`. Literals come
/// from the same small alphabet as the plain random values so that matches
/// are common.
inline sxq::QueryAst random_query(std::mt19937& rng, int depth) {
  using sxq::QueryAst;
  auto pick = [&rng](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  auto leaf = [&]() -> QueryAst {
    switch (pick(9)) {
      case 0:
      case 1: return QueryAst::wildcard();
      case 2: return QueryAst::var("x");
      case 3: return QueryAst::var("y");
      case 4: return QueryAst::literal(sym("a"));
      case 5: return QueryAst::literal(sym("b"));
      case 6: return QueryAst::literal(num(0));
      case 7: return QueryAst::literal(num(1));
      default: return QueryAst::empty_list();
    }
  };
  if (depth <= 0) return leaf();
  switch (pick(12)) {
    case 0:
    case 1:
    case 2:
    case 3:
      return QueryAst::pair(random_query(rng, depth - 1),
                            random_query(rng, depth - 1));
    case 4:
    case 5:
      return QueryAst::any_of(
          {random_query(rng, depth - 1), random_query(rng, depth - 1)});
    case 6:
      return QueryAst::all_of(
          {random_query(rng, depth - 1), random_query(rng, depth - 1)});
    case 7:
      return QueryAst::suffix(random_query(rng, depth - 1));
    case 8:
      return QueryAst::element(random_query(rng, depth - 1));
    default:
      return leaf();
  }
}

}  // namespace testutil
