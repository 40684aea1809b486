#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace clazy {

class Function;
class Thunk;
struct Cons;

/// Interned, upper-case symbol name. Equality is identity.
class Symbol {
 public:
  /// `name` is used verbatim; the reader upcases before interning.
  static Symbol intern(std::string_view name);

  std::string_view name() const noexcept { return *name_; }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.name_ == b.name_; }

  struct Hash {
    std::size_t operator()(Symbol s) const noexcept {
      return std::hash<const void*>{}(s.name_);
    }
  };

 private:
  explicit Symbol(const std::string* name) : name_(name) {}
  const std::string* name_;
};

/// `:name`. Holds the interned name without the colon.
class Keyword {
 public:
  static Keyword intern(std::string_view name) { return Keyword(Symbol::intern(name)); }
  explicit Keyword(Symbol name) : name_(name) {}

  std::string_view name() const noexcept { return name_.name(); }
  Symbol symbol() const noexcept { return name_; }

  friend bool operator==(Keyword a, Keyword b) noexcept { return a.name_ == b.name_; }

 private:
  Symbol name_;
};

using ConsPtr = std::shared_ptr<const Cons>;
using FunctionPtr = std::shared_ptr<const Function>;
using ThunkPtr = std::shared_ptr<Thunk>;
using StringPtr = std::shared_ptr<const std::string>;

/// Tagged runtime datum. `nil` doubles as the empty list and the only false
/// value.
class Value {
 public:
  Value() = default;

  static Value nil() { return Value(); }
  static Value t() { return Value(True{}); }
  static Value boolean(bool b) { return b ? t() : nil(); }
  static Value integer(std::int64_t n) { return Value(n); }
  static Value symbol(Symbol s) { return Value(s); }
  static Value keyword(Keyword k) { return Value(k); }
  static Value string(std::string s) {
    return Value(std::make_shared<const std::string>(std::move(s)));
  }

  explicit Value(ConsPtr c) : data_(std::move(c)) {}
  explicit Value(FunctionPtr f) : data_(std::move(f)) {}
  explicit Value(ThunkPtr t) : data_(std::move(t)) {}

  bool is_nil() const noexcept { return std::holds_alternative<Nil>(data_); }
  bool is_true() const noexcept { return std::holds_alternative<True>(data_); }
  bool truthy() const noexcept { return !is_nil(); }

  const std::int64_t* integer() const noexcept { return std::get_if<std::int64_t>(&data_); }
  const Symbol* symbol() const noexcept { return std::get_if<Symbol>(&data_); }
  const Keyword* keyword() const noexcept { return std::get_if<Keyword>(&data_); }
  const std::string* string() const noexcept {
    auto p = std::get_if<StringPtr>(&data_);
    return p ? p->get() : nullptr;
  }
  const Cons* cons() const noexcept {
    auto p = std::get_if<ConsPtr>(&data_);
    return p ? p->get() : nullptr;
  }
  const FunctionPtr* function() const noexcept { return std::get_if<FunctionPtr>(&data_); }
  const ThunkPtr* thunk() const noexcept { return std::get_if<ThunkPtr>(&data_); }

  /// Lisp type name for error messages, e.g. "integer", "thunk".
  std::string_view type_name() const noexcept;

 private:
  struct Nil {};
  struct True {};

  explicit Value(True v) : data_(v) {}
  explicit Value(std::int64_t n) : data_(n) {}
  explicit Value(Symbol s) : data_(s) {}
  explicit Value(Keyword k) : data_(k) {}
  explicit Value(StringPtr s) : data_(std::move(s)) {}

  std::variant<Nil, True, std::int64_t, Symbol, Keyword, StringPtr, ConsPtr, FunctionPtr,
               ThunkPtr>
      data_;
};

struct Cons {
  Value car;
  Value cdr;
};

Value make_cons(Value car, Value cdr);

/// Identity for symbols, keywords, booleans, and objects; numeric equality for
/// integers; content equality for strings.
bool eql(const Value& a, const Value& b) noexcept;

/// Structural equality over conses, falling back to `eql` at the leaves.
bool equal(const Value& a, const Value& b) noexcept;

}  // namespace clazy
