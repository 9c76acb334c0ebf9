// Backtracking pattern combinators.
//
// A Pattern<A> is a restartable matcher over targets of type A. Calling
// match(target) opens a session and reports whether at least one solution
// exists; match_again() advances the session to the next solution. Data
// flows out of a match purely by side effects: Variable<A> records the
// matched target, and_then/or_else attach continuations.
//
// Session contract, kept by every combinator in this file:
//   - match_again before any match in a session reports failure.
//   - Once a session has reported failure, it stays exhausted.
//   - A fresh match discards all prior session state; patterns are reusable.
//   - Exceptions thrown by user predicates or actions abort the session and
//     leave the pattern exhausted.
//
// Pattern handles have reference semantics: copies share one session. A
// pattern instance supports one session at a time, driven by one thread.

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sxq {

/// Raised by ensure(false); the failure signal of clause-style matching.
class MatchFailure : public std::runtime_error {
 public:
  explicit MatchFailure(const std::string& message)
      : std::runtime_error(message) {}
};

/// Raised when a Variable is read before it was ever bound.
class UnboundVariableError : public MatchFailure {
 public:
  explicit UnboundVariableError(const std::string& message)
      : MatchFailure(message) {}
};

/// A parameterless continuation run for its side effects.
using Action = std::function<void()>;

// Base of all pattern implementations. Centralizes the session contract;
// subclasses only provide do_match / do_match_again for a live session.
template <class A>
class PatternImpl {
 public:
  virtual ~PatternImpl() = default;

  bool match(const A& target) {
    started_ = true;
    exhausted_ = false;
    bool ok = false;
    try {
      ok = do_match(target);
    } catch (...) {
      exhausted_ = true;
      throw;
    }
    if (!ok) exhausted_ = true;
    return ok;
  }

  bool match_again() {
    if (!started_ || exhausted_) return false;
    bool ok = false;
    try {
      ok = do_match_again();
    } catch (...) {
      exhausted_ = true;
      throw;
    }
    if (!ok) exhausted_ = true;
    return ok;
  }

 protected:
  // First solution against target, opening the session.
  virtual bool do_match(const A& target) = 0;
  // Next solution; called only while the session is live.
  virtual bool do_match_again() = 0;

 private:
  bool started_ = false;
  bool exhausted_ = false;
};

template <class A>
class Pattern;

namespace detail {

template <class A>
class TestPattern final : public PatternImpl<A> {
 public:
  explicit TestPattern(std::function<bool(const A&)> pred)
      : pred_(std::move(pred)) {}

 protected:
  bool do_match(const A& target) override { return pred_(target); }
  bool do_match_again() override { return false; }

 private:
  std::function<bool(const A&)> pred_;
};

// Dependent sum of solutions: right side restarted after each left solution,
// so the right side varies fastest.
template <class A>
class ConjPattern final : public PatternImpl<A> {
 public:
  ConjPattern(Pattern<A> left, Pattern<A> right)
      : left_(std::move(left)), right_(std::move(right)) {}

 protected:
  bool do_match(const A& target) override {
    target_ = target;
    if (!left_.match(target)) return false;
    do {
      if (right_.match(*target_)) return true;
    } while (left_.match_again());
    return false;
  }

  bool do_match_again() override {
    if (right_.match_again()) return true;
    while (left_.match_again()) {
      if (right_.match(*target_)) return true;
    }
    return false;
  }

 private:
  Pattern<A> left_;
  Pattern<A> right_;
  std::optional<A> target_;  // retained so the right side can be restarted
};

// All left solutions, then all right solutions against the same target.
template <class A>
class DisjPattern final : public PatternImpl<A> {
 public:
  DisjPattern(Pattern<A> left, Pattern<A> right)
      : left_(std::move(left)), right_(std::move(right)) {}

 protected:
  bool do_match(const A& target) override {
    target_ = target;
    in_left_ = true;
    if (left_.match(target)) return true;
    in_left_ = false;
    return right_.match(*target_);
  }

  bool do_match_again() override {
    if (in_left_) {
      if (left_.match_again()) return true;
      in_left_ = false;
      return right_.match(*target_);
    }
    return right_.match_again();
  }

 private:
  Pattern<A> left_;
  Pattern<A> right_;
  std::optional<A> target_;
  bool in_left_ = true;
};

template <class A>
class AndThenPattern final : public PatternImpl<A> {
 public:
  AndThenPattern(Pattern<A> inner, Action action)
      : inner_(std::move(inner)), action_(std::move(action)) {}

 protected:
  bool do_match(const A& target) override {
    bool ok = inner_.match(target);
    if (ok) action_();
    return ok;
  }

  bool do_match_again() override {
    bool ok = inner_.match_again();
    if (ok) action_();
    return ok;
  }

 private:
  Pattern<A> inner_;
  Action action_;
};

// The else action runs exactly once, on initial match failure. Exhaustion
// via match_again does not run it; else-branches select clauses, they do
// not observe the end of a backtracking drain.
template <class A>
class OrElsePattern final : public PatternImpl<A> {
 public:
  OrElsePattern(Pattern<A> inner, Action action)
      : inner_(std::move(inner)), action_(std::move(action)) {}

 protected:
  bool do_match(const A& target) override {
    bool ok = inner_.match(target);
    if (!ok) action_();
    return ok;
  }

  bool do_match_again() override { return inner_.match_again(); }

 private:
  Pattern<A> inner_;
  Action action_;
};

// Materializes its underlying pattern on first use. Building block for
// recursive pattern structure that must not be constructed up front.
template <class A>
class DeferPattern final : public PatternImpl<A> {
 public:
  explicit DeferPattern(std::function<Pattern<A>()> make)
      : make_(std::move(make)) {}

 protected:
  bool do_match(const A& target) override {
    if (!inner_) inner_.emplace(make_());
    return inner_->match(target);
  }

  bool do_match_again() override { return inner_->match_again(); }

 private:
  std::function<Pattern<A>()> make_;
  std::optional<Pattern<A>> inner_;
};

}  // namespace detail

/// Handle to a pattern. Copies share the implementation and its session.
template <class A>
class Pattern {
 public:
  using Target = A;

  explicit Pattern(std::shared_ptr<PatternImpl<A>> impl)
      : impl_(std::move(impl)) {}

  /// Opens a new session; true iff at least one solution exists.
  bool match(const A& target) { return impl_->match(target); }

  /// Advances the session; true iff another solution exists.
  bool match_again() { return impl_->match_again(); }

  /// Conjunction; the argument is restarted after each of this pattern's
  /// solutions, so it varies fastest.
  Pattern and_(Pattern q) const;

  /// Disjunction; this pattern's solutions first, then the argument's.
  Pattern or_(Pattern q) const;

  /// Runs the action after every solution, on match and on match_again.
  Pattern and_then(Action r) const;

  /// Runs the action exactly once if the initial match fails.
  Pattern or_else(Action r) const;

 private:
  std::shared_ptr<PatternImpl<A>> impl_;
};

/// A pattern that succeeds deterministically and records the matched target.
/// The recorded value persists across failed branches and later sessions;
/// reading a variable that was never bound is an error.
template <class A>
class Variable;

namespace detail {

template <class A>
class VariableImpl final : public PatternImpl<A> {
 public:
  explicit VariableImpl(std::string name) : name_(std::move(name)) {}

  const A& value() const {
    if (!bound_) {
      throw UnboundVariableError(name_.empty()
                                     ? "unbound variable read"
                                     : "unbound variable '" + name_ + "' read");
    }
    return *value_;
  }

  bool is_bound() const { return bound_; }
  const std::string& name() const { return name_; }

 protected:
  bool do_match(const A& target) override {
    value_ = target;
    bound_ = true;
    return true;
  }

  bool do_match_again() override { return false; }

 private:
  std::string name_;
  std::optional<A> value_;
  bool bound_ = false;
};

}  // namespace detail

template <class A>
class Variable : public Pattern<A> {
 public:
  explicit Variable(std::string name = {})
      : Variable(std::make_shared<detail::VariableImpl<A>>(std::move(name))) {}

  /// The most recently matched target. Throws UnboundVariableError if the
  /// variable was never bound.
  const A& value() const { return impl_->value(); }

  bool is_bound() const { return impl_->is_bound(); }
  const std::string& name() const { return impl_->name(); }

 private:
  explicit Variable(std::shared_ptr<detail::VariableImpl<A>> impl)
      : Pattern<A>(impl), impl_(std::move(impl)) {}

  std::shared_ptr<detail::VariableImpl<A>> impl_;
};

/// One solution iff the predicate holds; exceptions from it propagate.
template <class A>
Pattern<A> test(std::function<bool(const A&)> pred) {
  return Pattern<A>(std::make_shared<detail::TestPattern<A>>(std::move(pred)));
}

/// Always exactly one solution.
template <class A>
Pattern<A> any() {
  return test<A>([](const A&) { return true; });
}

/// One solution iff the target equals the reference value.
template <class A>
Pattern<A> eq(A reference) {
  return test<A>(
      [ref = std::move(reference)](const A& target) { return target == ref; });
}

template <class A>
Pattern<A> conj(Pattern<A> p, Pattern<A> q) {
  return Pattern<A>(
      std::make_shared<detail::ConjPattern<A>>(std::move(p), std::move(q)));
}

template <class A>
Pattern<A> disj(Pattern<A> p, Pattern<A> q) {
  return Pattern<A>(
      std::make_shared<detail::DisjPattern<A>>(std::move(p), std::move(q)));
}

template <class A>
Pattern<A> and_then(Pattern<A> p, Action r) {
  return Pattern<A>(
      std::make_shared<detail::AndThenPattern<A>>(std::move(p), std::move(r)));
}

template <class A>
Pattern<A> or_else(Pattern<A> p, Action r) {
  return Pattern<A>(
      std::make_shared<detail::OrElsePattern<A>>(std::move(p), std::move(r)));
}

/// Defers construction of a pattern until it is first matched.
template <class A>
Pattern<A> defer(std::function<Pattern<A>()> make) {
  return Pattern<A>(std::make_shared<detail::DeferPattern<A>>(std::move(make)));
}

template <class A>
Pattern<A> Pattern<A>::and_(Pattern q) const {
  return conj(*this, std::move(q));
}

template <class A>
Pattern<A> Pattern<A>::or_(Pattern q) const {
  return disj(*this, std::move(q));
}

template <class A>
Pattern<A> Pattern<A>::and_then(Action r) const {
  return sxq::and_then(*this, std::move(r));
}

template <class A>
Pattern<A> Pattern<A>::or_else(Action r) const {
  return sxq::or_else(*this, std::move(r));
}

/// Matches pat against target with r attached as a success continuation.
/// Literally match(and_then(pat, r), target).
template <class A>
bool test_then(const A& target, Pattern<A> pat, Action r) {
  return pat.and_then(std::move(r)).match(target);
}

/// Runs the else continuation and reports true, so that
/// `clause(...) || otherwise(...)` selects exactly one branch.
inline bool otherwise(const Action& r) {
  r();
  return true;
}

/// Converts a clause-selection result to a continuation-friendly void
/// expression; throws MatchFailure when no clause applied.
inline void ensure(bool success) {
  if (!success) throw MatchFailure("pattern match failure");
}

}  // namespace sxq
