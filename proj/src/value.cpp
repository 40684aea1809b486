#include "clazy/value.hpp"

#include <mutex>
#include <unordered_set>

namespace clazy {

Symbol Symbol::intern(std::string_view name) {
  // Node-based storage keeps element addresses stable across rehashing.
  static std::mutex mutex;
  static std::unordered_set<std::string> table;
  std::lock_guard lock(mutex);
  auto it = table.find(std::string(name));
  if (it == table.end()) it = table.emplace(name).first;
  return Symbol(&*it);
}

std::string_view Value::type_name() const noexcept {
  switch (data_.index()) {
    case 0: return "null";
    case 1: return "boolean";
    case 2: return "integer";
    case 3: return "symbol";
    case 4: return "keyword";
    case 5: return "string";
    case 6: return "cons";
    case 7: return "function";
    case 8: return "thunk";
  }
  return "unknown";
}

Value make_cons(Value car, Value cdr) {
  return Value(std::make_shared<const Cons>(Cons{std::move(car), std::move(cdr)}));
}

bool eql(const Value& a, const Value& b) noexcept {
  if (a.is_nil() || a.is_true()) return a.is_nil() == b.is_nil() && a.is_true() == b.is_true();
  if (auto x = a.integer()) return b.integer() && *x == *b.integer();
  if (auto x = a.symbol()) return b.symbol() && *x == *b.symbol();
  if (auto x = a.keyword()) return b.keyword() && *x == *b.keyword();
  if (auto x = a.string()) return b.string() && *x == *b.string();
  if (auto x = a.cons()) return x == b.cons();
  if (auto x = a.function()) return b.function() && *x == *b.function();
  if (auto x = a.thunk()) return b.thunk() && *x == *b.thunk();
  return false;
}

bool equal(const Value& a, const Value& b) noexcept {
  const Value* x = &a;
  const Value* y = &b;
  while (x->cons() && y->cons()) {
    if (!equal(x->cons()->car, y->cons()->car)) return false;
    x = &x->cons()->cdr;
    y = &y->cons()->cdr;
  }
  return eql(*x, *y);
}

}  // namespace clazy
