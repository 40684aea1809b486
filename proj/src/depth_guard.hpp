#pragma once

#include <string>

#include "clazy/interpreter.hpp"
#include "stack.hpp"

namespace clazy {

// Counts one level of evaluation nesting for the lifetime of the guard.
class Interpreter::DepthGuard {
 public:
  explicit DepthGuard(Interpreter& interp) : interp_(interp) {
    if (interp_.depth_ >= interp_.config_.recursion_limit) {
      throw EvalError(ErrorKind::RecursionLimit,
                      "evaluation nested deeper than " +
                          std::to_string(interp_.config_.recursion_limit) + " levels");
    }
    if (detail::stack_nearly_exhausted()) {
      throw EvalError(ErrorKind::RecursionLimit, "native stack exhausted at nesting depth " +
                                                     std::to_string(interp_.depth_));
    }
    ++interp_.depth_;
  }
  ~DepthGuard() { --interp_.depth_; }

  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

 private:
  Interpreter& interp_;
};

}  // namespace clazy
