// Shared helpers for the test suites: shorthand value constructors,
// session-drain utilities, instrumented pattern wrappers, brute-force
// list walkers and a seeded random value generator. The walkers are the
// independent oracles; they use only Value accessors, never patterns.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sxq/pattern.hpp"
#include "sxq/value.hpp"

namespace testutil {

inline sxq::Value sym(const std::string& name) {
  return sxq::Value::symbol(name);
}

inline sxq::Value num(std::int64_t v) { return sxq::Value::integer(v); }

inline sxq::Value lst(std::vector<sxq::Value> elements) {
  return sxq::Value::list(std::move(elements));
}

template <class A>
int count_solutions(sxq::Pattern<A> p, const A& target) {
  int n = 0;
  for (bool ok = p.match(target); ok; ok = p.match_again()) ++n;
  return n;
}

/// k-fold disjunction of any(); each solution runs note(i) for its branch
/// index i in 0..k-1.
template <class A>
sxq::Pattern<A> or_n(int k, std::function<void(int)> note = nullptr) {
  auto branch = [&](int i) {
    sxq::Pattern<A> p = sxq::any<A>();
    if (note) p = p.and_then([note, i] { note(i); });
    return p;
  };
  sxq::Pattern<A> out = branch(0);
  for (int i = 1; i < k; ++i) out = sxq::disj(out, branch(i));
  return out;
}

/// Wraps a pattern, counting how often its match and match_again advance.
template <class A>
sxq::Pattern<A> counted(sxq::Pattern<A> inner, int* match_count,
                        int* again_count) {
  struct Impl final : sxq::PatternImpl<A> {
    Impl(sxq::Pattern<A> p, int* m, int* a)
        : inner(std::move(p)), m(m), a(a) {}
    bool do_match(const A& t) override {
      if (m) ++*m;
      return inner.match(t);
    }
    bool do_match_again() override {
      if (a) ++*a;
      return inner.match_again();
    }
    sxq::Pattern<A> inner;
    int* m;
    int* a;
  };
  return sxq::Pattern<A>(
      std::make_shared<Impl>(std::move(inner), match_count, again_count));
}

/// Drains a full session, logging match/match_again outcomes after any
/// marks the pattern's own actions record through the same logger.
template <class A>
std::vector<std::string> run_transcript(
    const std::function<sxq::Pattern<A>(std::function<void(std::string)>)>&
        factory,
    const A& target) {
  auto log = std::make_shared<std::vector<std::string>>();
  auto recorder = [log](std::string s) { log->push_back(std::move(s)); };
  sxq::Pattern<A> p = factory(recorder);
  bool ok = p.match(target);
  log->push_back(ok ? "match:T" : "match:F");
  while (ok) {
    ok = p.match_again();
    log->push_back(ok ? "again:T" : "again:F");
  }
  return *log;
}

// Brute-force list walkers.

inline std::vector<sxq::Value> walk_suffixes(const sxq::Value& v) {
  std::vector<sxq::Value> out;
  sxq::Value current = v;
  out.push_back(current);
  while (current.is_pair()) {
    current = current.cdr();
    out.push_back(current);
  }
  return out;
}

inline std::vector<sxq::Value> walk_elements(const sxq::Value& v) {
  std::vector<sxq::Value> out;
  sxq::Value current = v;
  while (current.is_pair()) {
    out.push_back(current.car());
    current = current.cdr();
  }
  return out;
}

inline std::optional<int> proper_list_length(const sxq::Value& v) {
  int n = 0;
  sxq::Value current = v;
  while (current.is_pair()) {
    ++n;
    current = current.cdr();
  }
  if (!current.is_empty_list()) return std::nullopt;
  return n;
}

// Seeded value generation.

inline sxq::Value random_atom(std::mt19937& rng, bool rich) {
  auto pick = [&rng](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  if (!rich) {
    switch (pick(4)) {
      case 0: return sym("a");
      case 1: return sym("b");
      case 2: return num(pick(2));
      default: return sxq::Value::empty();
    }
  }
  switch (pick(9)) {
    case 0: return sym("a");
    case 1: return sym("b");
    case 2: return sym("waldo");
    case 3: return num(pick(101) - 50);
    case 4: return sxq::Value::decimal((pick(65) - 32) / 4.0);
    case 5: {
      static const std::string samples[] = {"", "a b", "quo\"te",
                                            "back\\slash", "h\xc3\xa9llo"};
      return sxq::Value::string(samples[pick(5)]);
    }
    case 6: return sxq::Value::boolean(pick(2) == 0);
    default: return sxq::Value::empty();
  }
}

/// Random value with pair nesting of at most `depth`. The rich alphabet
/// covers every atom kind; the plain one uses two symbols, tiny integers
/// and the empty list.
inline sxq::Value random_value(std::mt19937& rng, int depth,
                               bool rich = true) {
  auto pick = [&rng](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  if (depth <= 0 || pick(3) == 0) return random_atom(rng, rich);
  return sxq::Value::cons(random_value(rng, depth - 1, rich),
                          random_value(rng, depth - 1, rich));
}

}  // namespace testutil
