// Pattern transformers.
//
// A Motif<A, B> turns patterns over A into patterns over B: the contravariant
// lifting of data access from B to A. Motifs are immutable and stateless; the
// patterns they produce carry all session state. They compose with then(),
// and endo-motifs form a Kleene algebra under star() and plus().

#pragma once

#include <functional>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sxq/pattern.hpp"

namespace sxq {

template <class A, class B>
class LazyBindings;

template <class A, class B>
class Motif {
 public:
  using Transformer = std::function<Pattern<B>(Pattern<A>)>;

  Motif(std::string name, Transformer fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  /// Lifts a pattern over A to a pattern over B.
  Pattern<B> apply(Pattern<A> p) const { return fn_(std::move(p)); }

  /// Composition: (m.then(n)).apply(p) == m.apply(n.apply(p)). The outer
  /// motif views the target first, the argument projects further.
  template <class C>
  Motif<C, B> then(Motif<C, A> n) const {
    Motif self = *this;
    return Motif<C, B>(name_ + "." + n.name(),
                       [self, n](Pattern<C> p) -> Pattern<B> {
                         return self.apply(n.apply(std::move(p)));
                       });
  }

  /// All bindings of a fresh variable driven through a full backtracking
  /// session over target, in solution order, duplicates preserved.
  std::vector<A> eager_bindings(const B& target) const {
    std::vector<A> out;
    Variable<A> var(name_);
    Pattern<B> pat = apply(var);
    for (bool ok = pat.match(target); ok; ok = pat.match_again()) {
      out.push_back(var.value());
    }
    return out;
  }

  /// Like eager_bindings but advances the session one solution per element
  /// demanded. Single consumer; iterate at most once.
  LazyBindings<A, B> lazy_bindings(B target) const;

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Transformer fn_;
};

/// An on-demand, single-pass sequence of bindings.
template <class A, class B>
class LazyBindings {
  struct State;

 public:
  class iterator {
   public:
    using value_type = A;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    const A& operator*() const { return state_->var.value(); }

    iterator& operator++() {
      live_ = state_->pattern.match_again();
      return *this;
    }

    void operator++(int) { ++*this; }

    bool operator==(std::default_sentinel_t) const { return !live_; }
    bool operator!=(std::default_sentinel_t) const { return live_; }

   private:
    friend class LazyBindings;
    iterator(std::shared_ptr<State> state, bool live)
        : state_(std::move(state)), live_(live) {}

    std::shared_ptr<State> state_;
    bool live_;
  };

  iterator begin() {
    if (state_->consumed) {
      throw std::logic_error("lazy bindings of '" + state_->var.name() +
                             "' iterated more than once");
    }
    state_->consumed = true;
    return iterator(state_, state_->pattern.match(state_->target));
  }

  std::default_sentinel_t end() const { return {}; }

 private:
  friend class Motif<A, B>;

  struct State {
    State(Variable<A> v, Pattern<B> p, B t)
        : var(std::move(v)), pattern(std::move(p)), target(std::move(t)) {}
    Variable<A> var;
    Pattern<B> pattern;
    B target;
    bool consumed = false;
  };

  explicit LazyBindings(std::shared_ptr<State> state)
      : state_(std::move(state)) {}

  std::shared_ptr<State> state_;
};

template <class A, class B>
LazyBindings<A, B> Motif<A, B>::lazy_bindings(B target) const {
  Variable<A> var(name_);
  Pattern<B> pat = apply(var);
  return LazyBindings<A, B>(std::make_shared<typename LazyBindings<A, B>::State>(
      std::move(var), std::move(pat), std::move(target)));
}

/// Lifts a total projection f: B -> A. The lifted pattern matched on b
/// behaves exactly like the inner pattern matched on f(b).
template <class A, class B>
Motif<A, B> transform(std::function<A(const B&)> f,
                      std::string name = "transform") {
  return Motif<A, B>(std::move(name), [f](Pattern<A> p) -> Pattern<B> {
    struct Lifted final : PatternImpl<B> {
      Lifted(std::function<A(const B&)> fn, Pattern<A> inner)
          : fn(std::move(fn)), inner(std::move(inner)) {}
      bool do_match(const B& target) override { return inner.match(fn(target)); }
      bool do_match_again() override { return inner.match_again(); }
      std::function<A(const B&)> fn;
      Pattern<A> inner;
    };
    return Pattern<B>(std::make_shared<Lifted>(f, std::move(p)));
  });
}

/// Lifts a partial projection; absence means zero solutions.
template <class A, class B>
Motif<A, B> transform_partial(std::function<std::optional<A>(const B&)> f,
                              std::string name = "view") {
  return Motif<A, B>(std::move(name), [f](Pattern<A> p) -> Pattern<B> {
    struct Lifted final : PatternImpl<B> {
      Lifted(std::function<std::optional<A>(const B&)> fn, Pattern<A> inner)
          : fn(std::move(fn)), inner(std::move(inner)) {}
      bool do_match(const B& target) override {
        std::optional<A> projected = fn(target);
        if (!projected) return false;
        return inner.match(*projected);
      }
      bool do_match_again() override { return inner.match_again(); }
      std::function<std::optional<A>(const B&)> fn;
      Pattern<A> inner;
    };
    return Pattern<B>(std::make_shared<Lifted>(f, std::move(p)));
  });
}

/// Zero or more applications of an endo-motif. star(m).apply(p) enumerates
/// p's solutions at iteration depth 0, then recursively at depths 1, 2, ...
/// in depth-first pre-order. The recursive structure is built lazily, one
/// level per demand; termination on cyclic data is the caller's concern
/// (see star_bounded).
template <class A>
Motif<A, A> star(Motif<A, A> m) {
  std::string name = "star(" + m.name() + ")";
  return Motif<A, A>(name, [m](Pattern<A> p) -> Pattern<A> {
    return disj(p, defer<A>([m, p]() -> Pattern<A> {
                  return m.apply(star(m).apply(p));
                }));
  });
}

/// One or more applications: plus(m).apply(p) == m.apply(star(m).apply(p)).
template <class A>
Motif<A, A> plus(Motif<A, A> m) {
  std::string name = "plus(" + m.name() + ")";
  return Motif<A, A>(name, [m](Pattern<A> p) -> Pattern<A> {
    return m.apply(star(m).apply(std::move(p)));
  });
}

/// star limited to iteration depths 0..max_depth; safe on cyclic data.
template <class A>
Motif<A, A> star_bounded(Motif<A, A> m, int max_depth) {
  std::string name = "star_bounded(" + m.name() + ")";
  return Motif<A, A>(name, [m, max_depth](Pattern<A> p) -> Pattern<A> {
    if (max_depth <= 0) return p;
    return disj(p, defer<A>([m, max_depth, p]() -> Pattern<A> {
                  return m.apply(star_bounded(m, max_depth - 1).apply(p));
                }));
  });
}

/// The identity lifting; apply(p) behaves exactly like p.
template <class A>
Motif<A, A> identity_motif() {
  return Motif<A, A>("identity",
                     [](Pattern<A> p) -> Pattern<A> { return p; });
}

}  // namespace sxq
