// Pattern bindings for the list data model: shape tests, the pair
// construction pattern, list-navigation motifs, a small vocabulary for
// fixed-shape lists, and continuation-style clause operators. Everything
// here is composed from the public pattern and motif API.

#pragma once

#include <functional>

#include "sxq/motif.hpp"
#include "sxq/pattern.hpp"
#include "sxq/value.hpp"

namespace sxq {

/// A continuation receiving the deconstructed components of a pair.
using PairContinuation = std::function<void(const Value&, const Value&)>;

// Primitive bindings.
Pattern<Value> is_pair();
Pattern<Value> is_empty();
Motif<PairView, Value> as_pair();
Motif<Value, PairView> car_proj();
Motif<Value, PairView> cdr_proj();

/// Matches pairs whose car matches pcar and whose cdr matches pcdr; the cdr
/// side backtracks fastest.
Pattern<Value> pair_pattern(Pattern<Value> pcar, Pattern<Value> pcdr);

// Navigation motifs.
Motif<Value, Value> pair_car();
Motif<Value, Value> pair_cdr();
/// Enumerates the target and all its iterated cdrs, outermost first.
Motif<Value, Value> nthcdr();
/// Enumerates the elements of a list in order; stops at a non-pair tail.
Motif<Value, Value> nth();

// Fixed-shape vocabulary.
Pattern<Value> triple(Pattern<Value> x, Pattern<Value> y, Pattern<Value> z);
Pattern<Value> singleton(Pattern<Value> x);
bool singleton_then(const Value& target, Action r);

// Clause operators: run the continuation exactly once if the target is a
// pair, and report whether it was.
bool pair_then(const Value& target, const PairContinuation& pc);
bool pair_then(const Value& target, const Action& r);

// Pattern wrappers around the clause operators, for compositional use.
Pattern<Value> pair_cont(PairContinuation pc);
Pattern<Value> pair_cont(Action r);

}  // namespace sxq
