#pragma once

#include <memory>
#include <vector>

#include "clazy/value.hpp"

namespace clazy {

/// Plain slots return their cell verbatim. Lazy slots force the cell on every
/// read, which is how lazy parameters behave inside a lazy function body.
enum class SlotKind { Plain, Lazy };

struct Binding {
  Symbol name;
  SlotKind kind;
  Value cell;
};

class Environment;
using EnvPtr = std::shared_ptr<const Environment>;

/// One lexical frame plus a link to its parent. A null EnvPtr is the empty
/// chain; globals live in the interpreter, not in a frame.
///
/// Frames are filled while being built and treated as immutable once they
/// are shared.
class Environment {
 public:
  explicit Environment(EnvPtr parent) : parent_(std::move(parent)) {}

  void bind(Symbol name, SlotKind kind, Value cell) {
    bindings_.push_back(Binding{name, kind, std::move(cell)});
  }

  const EnvPtr& parent() const noexcept { return parent_; }
  std::size_t size() const noexcept { return bindings_.size(); }

  /// Innermost binding of `name` along the chain starting at `env`.
  static const Binding* lookup(const Environment* env, Symbol name) noexcept;

 private:
  EnvPtr parent_;
  std::vector<Binding> bindings_;
};

}  // namespace clazy
