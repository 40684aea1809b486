#include "clazy/environment.hpp"

namespace clazy {

const Binding* Environment::lookup(const Environment* env, Symbol name) noexcept {
  for (; env != nullptr; env = env->parent_.get()) {
    // Later bindings in a frame shadow earlier ones.
    for (auto it = env->bindings_.rbegin(); it != env->bindings_.rend(); ++it) {
      if (it->name == name) return &*it;
    }
  }
  return nullptr;
}

}  // namespace clazy
