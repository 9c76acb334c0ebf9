#include "sxq/list_patterns.hpp"

#include <optional>
#include <utility>

namespace sxq {

Pattern<Value> is_pair() {
  return test<Value>([](const Value& v) { return v.is_pair(); });
}

Pattern<Value> is_empty() { return eq(Value::empty()); }

Motif<PairView, Value> as_pair() {
  return transform_partial<PairView, Value>(
      [](const Value& v) -> std::optional<PairView> {
        if (!v.is_pair()) return std::nullopt;
        return PairView{v.car(), v.cdr()};
      },
      "as_pair");
}

Motif<Value, PairView> car_proj() {
  return transform<Value, PairView>(
      [](const PairView& pv) { return pv.car; }, "car");
}

Motif<Value, PairView> cdr_proj() {
  return transform<Value, PairView>(
      [](const PairView& pv) { return pv.cdr; }, "cdr");
}

Pattern<Value> pair_pattern(Pattern<Value> pcar, Pattern<Value> pcdr) {
  return as_pair().apply(
      conj(car_proj().apply(std::move(pcar)), cdr_proj().apply(std::move(pcdr))));
}

Motif<Value, Value> pair_car() { return as_pair().then(car_proj()); }

Motif<Value, Value> pair_cdr() { return as_pair().then(cdr_proj()); }

Motif<Value, Value> nthcdr() { return star(pair_cdr()); }

Motif<Value, Value> nth() { return nthcdr().then(pair_car()); }

Pattern<Value> triple(Pattern<Value> x, Pattern<Value> y, Pattern<Value> z) {
  return pair_pattern(
      std::move(x),
      pair_pattern(std::move(y), pair_pattern(std::move(z), is_empty())));
}

Pattern<Value> singleton(Pattern<Value> x) {
  return pair_pattern(std::move(x), is_empty());
}

bool singleton_then(const Value& target, Action r) {
  return test_then(target, singleton(any<Value>()), std::move(r));
}

bool pair_then(const Value& target, const PairContinuation& pc) {
  Variable<Value> car("car");
  Variable<Value> cdr("cdr");
  if (pair_pattern(car, cdr).match(target)) {
    pc(car.value(), cdr.value());
    return true;
  }
  return false;
}

bool pair_then(const Value& target, const Action& r) {
  return test_then(target, is_pair(), r);
}

Pattern<Value> pair_cont(PairContinuation pc) {
  return test<Value>(
      [pc = std::move(pc)](const Value& x) { return pair_then(x, pc); });
}

Pattern<Value> pair_cont(Action r) {
  return test<Value>(
      [r = std::move(r)](const Value& x) { return pair_then(x, r); });
}

}  // namespace sxq
