#include "clazy/lazy.hpp"

#include "clazy/interpreter.hpp"
#include "clazy/printer.hpp"
#include "depth_guard.hpp"

namespace clazy {
namespace {

const Symbol& sym_lambda() {
  static const Symbol s = Symbol::intern("LAMBDA");
  return s;
}

const Symbol& sym_function() {
  static const Symbol s = Symbol::intern("FUNCTION");
  return s;
}

const Symbol& sym_quote() {
  static const Symbol s = Symbol::intern("QUOTE");
  return s;
}

std::string function_label(const Function& fn) {
  return fn.name ? std::string(fn.name->name()) : std::string("(lambda)");
}

[[noreturn]] void malformed(const Form& form, const std::string& what) {
  throw EvalError(ErrorKind::MalformedForm, what + " in " + print_value(form.to_value()));
}

}  // namespace

void Thunk::store(const Value& v) {
  if (memoizing_ && !memo_) memo_ = v;
}

FunctionPtr LazyRegistry::find(Symbol name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : it->second;
}

bool constant_p(const Form& form) noexcept {
  if (form.is_atom()) return form.symbol() == nullptr;
  return form.items().size() == 2 && form.items()[0].is_symbol(sym_quote());
}

Value Interpreter::delay(const Form& expr, const EnvPtr& env) {
  ++thunk_allocations_;
  return Value(std::make_shared<Thunk>(expr, env, config_.memoize));
}

Value Interpreter::force(const Value& v) {
  const ThunkPtr* tp = v.thunk();
  if (tp == nullptr) return v;
  const ThunkPtr thunk = *tp;
  if (thunk->memo()) return *thunk->memo();
  DepthGuard guard(*this);
  Value result = evaluate(thunk->expr(), thunk->env());
  if (result.thunk()) result = force(result);
  thunk->store(result);
  return result;
}

Symbol Interpreter::define_lazy(Symbol name, const Form& lambda_list, std::span<const Form> body,
                                const EnvPtr& env) {
  // One parsed lambda list and one body shared by both halves; only the
  // binding mode differs.
  auto params = std::make_shared<const LambdaList>(LambdaList::parse(lambda_list));
  auto strict = std::make_shared<Function>();
  strict->name = name;
  strict->mode = CallMode::Strict;
  strict->params = params;
  strict->body = body;
  strict->closure = env;
  auto lazy = std::make_shared<Function>(*strict);
  lazy->mode = CallMode::Lazy;
  define_function(name, std::move(strict));
  registry_.define(name, std::move(lazy));
  return name;
}

Value Interpreter::apply_lazy(const Function& fn, std::span<const Value> args) {
  if (fn.mode != CallMode::Lazy || fn.is_builtin()) {
    throw EvalError(ErrorKind::NoLazyVersion, "function " + function_label(fn) + " is not lazy");
  }
  EnvPtr env = bind_lambda_list(*fn.params, args, CallMode::Lazy, fn.closure);
  return eval_body(fn.body, env);
}

FunctionPtr Interpreter::resolve_lazy_operator(const Value& op) {
  if (const FunctionPtr* fn = op.function()) {
    if ((*fn)->mode == CallMode::Lazy) return *fn;
    if ((*fn)->name) {
      if (FunctionPtr entry = registry_.find(*(*fn)->name)) return entry;
    }
    throw EvalError(ErrorKind::NoLazyVersion,
                    "function " + function_label(**fn) +
                        " has no lazy version; define it with deflazy or wrap it with lazy");
  }
  if (const Symbol* name = op.symbol()) {
    if (FunctionPtr entry = registry_.find(*name)) return entry;
    throw EvalError(ErrorKind::NoLazyVersion,
                    std::string(name->name()) + " has no lazy version; define it with deflazy");
  }
  throw EvalError(ErrorKind::NotAFunction, print_value(op) + " is not a function designator");
}

Value Interpreter::lazy_call(const Form& op_form, std::span<const Form> arg_forms,
                             const EnvPtr& env) {
  FunctionPtr fn = resolve_lazy_operator(evaluate(op_form, env));
  std::vector<Value> args;
  args.reserve(arg_forms.size());
  for (const Form& arg : arg_forms) {
    args.push_back(constant_p(arg) ? evaluate(arg, env) : delay(arg, env));
  }
  return apply_lazy(*fn, args);
}

FunctionPtr Interpreter::lazy_version_of(const FunctionPtr& fn) {
  if (fn->mode == CallMode::Lazy) return fn;
  if (fn->name) {
    if (FunctionPtr entry = registry_.find(*fn->name)) return entry;
  }
  if (fn->is_builtin()) {
    throw EvalError(ErrorKind::NoLazyVersion,
                    "builtin " + function_label(*fn) + " has no lazy version");
  }
  auto wrapper = std::make_shared<Function>(*fn);
  wrapper->mode = CallMode::Lazy;
  return wrapper;
}

FunctionPtr Interpreter::lazify(const Form& expr, const EnvPtr& env) {
  if (expr.starts_with(sym_lambda())) {
    return make_closure(expr, env, CallMode::Lazy, std::nullopt);
  }
  if (expr.starts_with(sym_function())) {
    if (expr.items().size() != 2) malformed(expr, "malformed function");
    const Form& target = expr.items()[1];
    if (target.starts_with(sym_lambda())) {
      return make_closure(target, env, CallMode::Lazy, std::nullopt);
    }
  }
  if (auto name = expr.symbol()) {
    if (FunctionPtr fn = find_function(*name)) return lazy_version_of(fn);
  }
  const Value v = evaluate(expr, env);
  if (const FunctionPtr* fn = v.function()) return lazy_version_of(*fn);
  if (const Symbol* name = v.symbol()) {
    if (FunctionPtr fn = find_function(*name)) return lazy_version_of(fn);
  }
  throw EvalError(ErrorKind::NotAFunction, print_value(v) + " is not a function");
}

Value Interpreter::sf_deflazy(const Form& form, const EnvPtr& env) {
  const auto items = form.items();
  if (items.size() < 3) malformed(form, "malformed deflazy");
  const Symbol* name = items[1].symbol();
  if (name == nullptr) malformed(form, "deflazy needs a function name");
  return Value::symbol(define_lazy(*name, items[2], items.subspan(3), env));
}

Value Interpreter::sf_lazy_call(const Form& form, const EnvPtr& env) {
  const auto items = form.items();
  if (items.size() < 2) malformed(form, "lazy-call needs an operator");
  return lazy_call(items[1], items.subspan(2), env);
}

Value Interpreter::sf_lazy(const Form& form, const EnvPtr& env) {
  if (form.items().size() != 2) malformed(form, "lazy takes exactly one form");
  return Value(lazify(form.items()[1], env));
}

Value Interpreter::sf_delay(const Form& form, const EnvPtr& env) {
  if (form.items().size() != 2) malformed(form, "delay takes exactly one form");
  return delay(form.items()[1], env);
}

}  // namespace clazy
