#pragma once

#include <optional>
#include <unordered_map>

#include "clazy/environment.hpp"
#include "clazy/reader.hpp"
#include "clazy/value.hpp"

namespace clazy {

/// A delayed expression closed over its environment.
///
/// Without memoization every force re-evaluates the expression
/// (call-by-name). With it, the first completed force stores the result and
/// later forces return it (call-by-need).
class Thunk {
 public:
  Thunk(const Form& expr, EnvPtr env, bool memoizing)
      : expr_(&expr), env_(std::move(env)), memoizing_(memoizing) {}

  const Form& expr() const noexcept { return *expr_; }
  const EnvPtr& env() const noexcept { return env_; }
  bool memoizing() const noexcept { return memoizing_; }
  const std::optional<Value>& memo() const noexcept { return memo_; }

  /// No-op unless memoizing and still empty. `v` must not be a thunk.
  void store(const Value& v);

 private:
  const Form* expr_;
  EnvPtr env_;
  bool memoizing_;
  std::optional<Value> memo_;
};

/// Name -> lazy half of a `deflazy` definition.
class LazyRegistry {
 public:
  void define(Symbol name, FunctionPtr lazy_fn) { entries_[name] = std::move(lazy_fn); }
  void erase(Symbol name) { entries_.erase(name); }
  FunctionPtr find(Symbol name) const;
  std::size_t size() const noexcept { return entries_.size(); }
  void clear() { entries_.clear(); }

 private:
  std::unordered_map<Symbol, FunctionPtr, Symbol::Hash> entries_;
};

/// Self-evaluating atoms (integers, strings, keywords, t, nil) and
/// `(quote x)` forms. These are passed to lazy calls without a thunk.
bool constant_p(const Form& form) noexcept;

}  // namespace clazy
