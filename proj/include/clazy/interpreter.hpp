#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "clazy/environment.hpp"
#include "clazy/error.hpp"
#include "clazy/lambda_list.hpp"
#include "clazy/lazy.hpp"
#include "clazy/reader.hpp"
#include "clazy/value.hpp"

namespace clazy {

class Interpreter;

enum class CallMode { Strict, Lazy };

using Builtin = Value (*)(Interpreter&, std::span<const Value>);

/// A callable. Either a host builtin (always strict) or a closure over a
/// lambda list and body. The mode is fixed at construction.
class Function {
 public:
  std::optional<Symbol> name;
  CallMode mode = CallMode::Strict;
  std::shared_ptr<const LambdaList> params;
  std::span<const Form> body;
  EnvPtr closure;
  Builtin builtin = nullptr;

  bool is_builtin() const noexcept { return builtin != nullptr; }
};

struct Config {
  bool memoize = false;
  /// Evaluator steps plus `(loop)` iterations allowed per top-level form.
  /// nullopt disables the limit.
  std::optional<std::uint64_t> step_limit = 10'000'000;
  std::uint32_t recursion_limit = 10'000;
  bool load_prelude = true;
  /// Replaces the embedded prelude when set.
  std::optional<std::filesystem::path> prelude_path;
};

/// Source of the stream library loaded at startup.
std::string_view embedded_prelude();

/// One interpreter instance: global function and variable namespaces, the
/// lazy registry, and the instrumentation counters.
///
/// Values produced by an instance refer to forms it owns and must not
/// outlive it. Not thread-safe; use one instance per thread.
class Interpreter {
 public:
  explicit Interpreter(Config config = {});
  ~Interpreter();

  Interpreter(const Interpreter&) = delete;
  Interpreter& operator=(const Interpreter&) = delete;

  const Config& config() const noexcept { return config_; }

  /// Reads and evaluates every top-level form; returns the last value (nil
  /// when there are none). Errors carry `source_name` and a position.
  ///
  /// Evaluation runs on a helper thread with a stack sized for the
  /// recursion limit; the call blocks until it finishes.
  Value eval_string(std::string_view text, std::string_view source_name = "<string>");
  Value load_file(const std::filesystem::path& path);

  /// Like eval_string but reports every top-level value.
  void eval_each(std::string_view text, std::string_view source_name,
                 const std::function<void(const Value&)>& on_value);

  // Core evaluator.
  Value evaluate(const Form& form, const EnvPtr& env);
  Value apply_strict(const Function& fn, std::span<const Value> args);
  Value apply_lazy(const Function& fn, std::span<const Value> args);
  /// `funcall`: accepts a function object or a symbol naming one.
  Value funcall(const Value& designator, std::span<const Value> args);
  EnvPtr bind_lambda_list(const LambdaList& ll, std::span<const Value> args, CallMode mode,
                          const EnvPtr& defaults_env);

  // Lazy runtime.
  Value delay(const Form& expr, const EnvPtr& env);
  Value force(const Value& v);
  Symbol define_lazy(Symbol name, const Form& lambda_list, std::span<const Form> body,
                     const EnvPtr& env);
  Value lazy_call(const Form& op_form, std::span<const Form> arg_forms, const EnvPtr& env);
  FunctionPtr lazify(const Form& expr, const EnvPtr& env);
  const LazyRegistry& lazy_registry() const noexcept { return registry_; }

  // Global namespaces. Functions and variables are separate.
  void define_function(Symbol name, FunctionPtr fn);
  void define_builtin(std::string_view name, Builtin fn);
  FunctionPtr find_function(Symbol name) const;
  void define_global(Symbol name, Value v);
  const Value* find_global(Symbol name) const;

  // Instrumentation.
  std::uint64_t tick() noexcept { return ++ticks_; }
  std::uint64_t ticks() const noexcept { return ticks_; }
  std::uint64_t thunk_allocations() const noexcept { return thunk_allocations_; }
  void reset_thunk_allocations() noexcept { thunk_allocations_ = 0; }
  std::uint64_t steps() const noexcept { return steps_; }

  /// Sink for `print`. Defaults to stdout.
  void set_output(std::function<void(std::string_view)> sink) { output_ = std::move(sink); }
  void write_output(std::string_view text) { output_(text); }

  /// Counts one evaluator step or loop iteration against the step limit.
  void count_step();

 private:
  using SpecialForm = Value (Interpreter::*)(const Form&, const EnvPtr&);

  class DepthGuard;

  const std::vector<Form>& own(std::vector<Form> forms);
  std::size_t stack_bytes() const noexcept;
  Value evaluate_compound(const Form& form, const EnvPtr& env);
  Value lookup_variable(Symbol name, const EnvPtr& env);
  Value eval_body(std::span<const Form> body, const EnvPtr& env);
  FunctionPtr make_closure(const Form& lambda_form, const EnvPtr& env, CallMode mode,
                           std::optional<Symbol> name);
  FunctionPtr resolve_lazy_operator(const Value& op);
  FunctionPtr lazy_version_of(const FunctionPtr& fn);
  Value bind_default(const Form* default_form, const EnvPtr& visible, CallMode mode);
  void install_special_forms();

  Value sf_quote(const Form&, const EnvPtr&);
  Value sf_if(const Form&, const EnvPtr&);
  Value sf_progn(const Form&, const EnvPtr&);
  Value sf_let(const Form&, const EnvPtr&);
  Value sf_lambda(const Form&, const EnvPtr&);
  Value sf_function(const Form&, const EnvPtr&);
  Value sf_defun(const Form&, const EnvPtr&);
  Value sf_defparameter(const Form&, const EnvPtr&);
  Value sf_ecase(const Form&, const EnvPtr&);
  Value sf_loop(const Form&, const EnvPtr&);
  Value sf_deflazy(const Form&, const EnvPtr&);
  Value sf_lazy_call(const Form&, const EnvPtr&);
  Value sf_lazy(const Form&, const EnvPtr&);
  Value sf_delay(const Form&, const EnvPtr&);

  Config config_;
  std::deque<std::vector<Form>> programs_;
  std::unordered_map<Symbol, SpecialForm, Symbol::Hash> special_forms_;
  std::unordered_map<Symbol, FunctionPtr, Symbol::Hash> functions_;
  std::unordered_map<Symbol, Value, Symbol::Hash> globals_;
  LazyRegistry registry_;
  std::function<void(std::string_view)> output_;

  std::uint64_t ticks_ = 0;
  std::uint64_t thunk_allocations_ = 0;
  std::uint64_t steps_ = 0;
  std::uint32_t depth_ = 0;
};

/// Registers the host primitives (`+`, `car`, `tick!`, ...).
void install_builtins(Interpreter& interp);

}  // namespace clazy
