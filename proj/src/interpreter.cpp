#include "clazy/interpreter.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "clazy/printer.hpp"
#include "depth_guard.hpp"

namespace clazy {
namespace {

const Symbol& sym_lambda() {
  static const Symbol s = Symbol::intern("LAMBDA");
  return s;
}

[[noreturn]] void malformed(const Form& form, const std::string& what) {
  throw EvalError(ErrorKind::MalformedForm, what + " in " + print_value(form.to_value()));
}

void expect_size(const Form& form, std::size_t min, std::size_t max, const char* name) {
  const std::size_t n = form.items().size();
  if (n < min || n > max) malformed(form, std::string("malformed ") + name);
}

Symbol expect_symbol(const Form& form, const Form& whole) {
  auto sym = form.symbol();
  if (!sym) malformed(whole, "expected a symbol");
  return *sym;
}

}  // namespace


Interpreter::Interpreter(Config config)
    : config_(std::move(config)), output_([](std::string_view text) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        std::fflush(stdout);
      }) {
  if (config_.step_limit && *config_.step_limit == 0) config_.step_limit.reset();
  if (config_.recursion_limit == 0) config_.recursion_limit = 1;
  install_special_forms();
  install_builtins(*this);
  if (config_.load_prelude) {
    if (config_.prelude_path) {
      load_file(*config_.prelude_path);
    } else {
      eval_string(embedded_prelude(), "<prelude>");
    }
  }
}

Interpreter::~Interpreter() {
  // Long memoized chains are released recursively; give that the big stack.
  try {
    detail::run_with_stack(stack_bytes(), [this] {
      globals_.clear();
      functions_.clear();
      registry_.clear();
    });
  } catch (...) {
  }
}

void Interpreter::install_special_forms() {
  auto add = [this](const char* name, SpecialForm handler) {
    special_forms_[Symbol::intern(name)] = handler;
  };
  add("QUOTE", &Interpreter::sf_quote);
  add("IF", &Interpreter::sf_if);
  add("PROGN", &Interpreter::sf_progn);
  add("LET", &Interpreter::sf_let);
  add("LAMBDA", &Interpreter::sf_lambda);
  add("FUNCTION", &Interpreter::sf_function);
  add("DEFUN", &Interpreter::sf_defun);
  add("DEFPARAMETER", &Interpreter::sf_defparameter);
  add("ECASE", &Interpreter::sf_ecase);
  add("LOOP", &Interpreter::sf_loop);
  add("DEFLAZY", &Interpreter::sf_deflazy);
  add("LAZY-CALL", &Interpreter::sf_lazy_call);
  add("LAZY", &Interpreter::sf_lazy);
  add("DELAY", &Interpreter::sf_delay);
  // Package-qualified spellings used in published transcripts.
  add("LAZY:DEFLAZY", &Interpreter::sf_deflazy);
  add("LAZY:CALL", &Interpreter::sf_lazy_call);
  add("LAZY:LAZY", &Interpreter::sf_lazy);
}

const std::vector<Form>& Interpreter::own(std::vector<Form> forms) {
  return programs_.emplace_back(std::move(forms));
}

void Interpreter::eval_each(std::string_view text, std::string_view source_name,
                            const std::function<void(const Value&)>& on_value) {
  try {
    const auto& forms = own(read_program(text));
    detail::run_with_stack(stack_bytes(), [&] {
      for (const Form& form : forms) {
        steps_ = 0;
        Value v = evaluate(form, nullptr);
        if (on_value) on_value(v);
      }
    });
  } catch (Error& e) {
    e.set_source_if_unknown(source_name);
    throw;
  }
}

Value Interpreter::eval_string(std::string_view text, std::string_view source_name) {
  Value last;
  eval_each(text, source_name, [&last](const Value& v) { last = v; });
  return last;
}

Value Interpreter::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return eval_string(buffer.str(), path.string());
}

std::size_t Interpreter::stack_bytes() const noexcept {
  constexpr std::size_t kBase = 16u << 20;
  constexpr std::size_t kPerLevel = 4096;
  constexpr std::size_t kMax = 1u << 30;
  const std::size_t wanted = kBase + std::size_t{config_.recursion_limit} * kPerLevel;
  return wanted < kMax ? wanted : kMax;
}

void Interpreter::count_step() {
  ++steps_;
  if (config_.step_limit && steps_ > *config_.step_limit) {
    throw StepLimitExceeded(*config_.step_limit);
  }
}

Value Interpreter::evaluate(const Form& form, const EnvPtr& env) {
  count_step();
  if (form.is_atom()) {
    auto sym = form.symbol();
    if (!sym) return form.datum();
    try {
      return lookup_variable(*sym, env);
    } catch (Error& e) {
      e.set_position_if_unknown(form.position());
      throw;
    }
  }
  DepthGuard guard(*this);
  try {
    return evaluate_compound(form, env);
  } catch (Error& e) {
    e.set_position_if_unknown(form.position());
    throw;
  }
}

Value Interpreter::lookup_variable(Symbol name, const EnvPtr& env) {
  if (const Binding* b = Environment::lookup(env.get(), name)) {
    return b->kind == SlotKind::Lazy ? force(b->cell) : b->cell;
  }
  if (const Value* v = find_global(name)) return *v;
  throw EvalError(ErrorKind::UnboundSymbol, "unbound variable " + std::string(name.name()));
}

Value Interpreter::evaluate_compound(const Form& form, const EnvPtr& env) {
  const auto items = form.items();
  const Form& head = items.front();
  FunctionPtr fn;
  if (auto sym = head.symbol()) {
    if (auto it = special_forms_.find(*sym); it != special_forms_.end()) {
      return (this->*(it->second))(form, env);
    }
    fn = find_function(*sym);
    if (!fn) {
      throw EvalError(ErrorKind::UnboundSymbol, "undefined function " + std::string(sym->name()));
    }
  } else if (head.starts_with(sym_lambda())) {
    fn = make_closure(head, env, CallMode::Strict, std::nullopt);
  } else {
    throw EvalError(ErrorKind::NotAFunction,
                    print_value(head.to_value()) + " is not a function name");
  }
  std::vector<Value> args;
  args.reserve(items.size() - 1);
  for (const Form& arg : items.subspan(1)) args.push_back(evaluate(arg, env));
  return apply_strict(*fn, args);
}

Value Interpreter::eval_body(std::span<const Form> body, const EnvPtr& env) {
  if (body.empty()) return Value::nil();
  for (const Form& form : body.first(body.size() - 1)) evaluate(form, env);
  return evaluate(body.back(), env);
}

Value Interpreter::apply_strict(const Function& fn, std::span<const Value> args) {
  if (fn.mode == CallMode::Lazy) {
    throw EvalError(ErrorKind::LazyThroughStrict,
                    "lazy function " +
                        std::string(fn.name ? fn.name->name() : std::string_view("(lambda)")) +
                        " must be called with lazy-call");
  }
  if (fn.is_builtin()) return fn.builtin(*this, args);
  EnvPtr env = bind_lambda_list(*fn.params, args, CallMode::Strict, fn.closure);
  return eval_body(fn.body, env);
}

Value Interpreter::funcall(const Value& designator, std::span<const Value> args) {
  if (auto fn = designator.function()) return apply_strict(**fn, args);
  if (auto sym = designator.symbol()) {
    FunctionPtr fn = find_function(*sym);
    if (!fn) {
      throw EvalError(ErrorKind::UnboundSymbol, "undefined function " + std::string(sym->name()));
    }
    return apply_strict(*fn, args);
  }
  throw EvalError(ErrorKind::NotAFunction, print_value(designator) + " is not a function");
}

Value Interpreter::bind_default(const Form* default_form, const EnvPtr& visible, CallMode mode) {
  if (default_form == nullptr) return Value::nil();
  if (mode == CallMode::Lazy && !constant_p(*default_form)) return delay(*default_form, visible);
  return evaluate(*default_form, visible);
}

EnvPtr Interpreter::bind_lambda_list(const LambdaList& ll, std::span<const Value> args,
                                     CallMode mode, const EnvPtr& defaults_env) {
  const SlotKind slot = mode == CallMode::Lazy ? SlotKind::Lazy : SlotKind::Plain;
  if (args.size() < ll.required.size()) {
    throw EvalError(ErrorKind::ArityMismatch,
                    "too few arguments: expected at least " + std::to_string(ll.required.size()) +
                        ", got " + std::to_string(args.size()));
  }

  auto frame = std::make_shared<Environment>(defaults_env);
  // A default is evaluated (or delayed) over the parameters bound so far.
  // The frame it sees is then sealed and later parameters go into a fresh
  // child frame, so no closure or thunk can observe a later parameter or
  // end up inside the frame that captured it.
  auto with_default = [&](const Form* default_form) {
    EnvPtr visible = frame->size() > 0 ? EnvPtr(frame) : frame->parent();
    Value v = bind_default(default_form, visible, mode);
    if (default_form != nullptr) frame = std::make_shared<Environment>(visible);
    return v;
  };

  std::size_t i = 0;
  for (Symbol name : ll.required) frame->bind(name, slot, args[i++]);

  for (const OptionalParam& p : ll.optional) {
    if (i < args.size()) {
      frame->bind(p.name, slot, args[i++]);
      if (p.supplied_p) frame->bind(*p.supplied_p, SlotKind::Plain, Value::t());
    } else {
      Value v = with_default(p.default_form);
      frame->bind(p.name, slot, std::move(v));
      if (p.supplied_p) frame->bind(*p.supplied_p, SlotKind::Plain, Value::nil());
    }
  }

  const auto remaining = args.subspan(i);
  if (ll.rest) {
    Value list;
    for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) list = make_cons(*it, list);
    frame->bind(*ll.rest, SlotKind::Plain, std::move(list));
  }

  if (ll.has_key_section) {
    if (remaining.size() % 2 != 0) {
      throw EvalError(ErrorKind::OddKeywordArguments,
                      "odd number of arguments in keyword section");
    }
    std::vector<const Value*> supplied(ll.keys.size(), nullptr);
    for (std::size_t k = 0; k < remaining.size(); k += 2) {
      const Value marker = mode == CallMode::Lazy ? force(remaining[k]) : remaining[k];
      const Keyword* key = marker.keyword();
      if (key == nullptr) {
        throw EvalError(ErrorKind::UnknownKeywordArgument,
                        print_value(marker) + " is not a keyword");
      }
      std::size_t idx = 0;
      while (idx < ll.keys.size() && !(ll.keys[idx].key == *key)) ++idx;
      if (idx == ll.keys.size()) {
        throw EvalError(ErrorKind::UnknownKeywordArgument,
                        "unknown keyword argument :" + std::string(key->name()));
      }
      if (supplied[idx] == nullptr) supplied[idx] = &remaining[k + 1];
    }
    for (std::size_t idx = 0; idx < ll.keys.size(); ++idx) {
      const KeywordParam& p = ll.keys[idx];
      if (supplied[idx] != nullptr) {
        frame->bind(p.name, slot, *supplied[idx]);
        if (p.supplied_p) frame->bind(*p.supplied_p, SlotKind::Plain, Value::t());
      } else {
        Value v = with_default(p.default_form);
        frame->bind(p.name, slot, std::move(v));
        if (p.supplied_p) frame->bind(*p.supplied_p, SlotKind::Plain, Value::nil());
      }
    }
  } else if (!ll.rest && !remaining.empty()) {
    throw EvalError(ErrorKind::ArityMismatch,
                    "too many arguments: expected at most " +
                        std::to_string(ll.required.size() + ll.optional.size()) + ", got " +
                        std::to_string(args.size()));
  }
  return frame;
}

FunctionPtr Interpreter::make_closure(const Form& lambda_form, const EnvPtr& env, CallMode mode,
                                      std::optional<Symbol> name) {
  const auto items = lambda_form.items();
  if (items.size() < 2) malformed(lambda_form, "lambda without a lambda list");
  auto fn = std::make_shared<Function>();
  fn->name = name;
  fn->mode = mode;
  fn->params = std::make_shared<const LambdaList>(LambdaList::parse(items[1]));
  fn->body = items.subspan(2);
  fn->closure = env;
  return fn;
}

void Interpreter::define_function(Symbol name, FunctionPtr fn) { functions_[name] = std::move(fn); }

void Interpreter::define_builtin(std::string_view name, Builtin builtin) {
  const Symbol symbol = Symbol::intern(name);
  auto fn = std::make_shared<Function>();
  fn->name = symbol;
  fn->builtin = builtin;
  define_function(symbol, std::move(fn));
}

FunctionPtr Interpreter::find_function(Symbol name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : it->second;
}

void Interpreter::define_global(Symbol name, Value v) { globals_[name] = std::move(v); }

const Value* Interpreter::find_global(Symbol name) const {
  auto it = globals_.find(name);
  return it == globals_.end() ? nullptr : &it->second;
}

// --- special forms -------------------------------------------------------

Value Interpreter::sf_quote(const Form& form, const EnvPtr&) {
  expect_size(form, 2, 2, "quote");
  return form.items()[1].to_value();
}

Value Interpreter::sf_if(const Form& form, const EnvPtr& env) {
  expect_size(form, 3, 4, "if");
  const auto items = form.items();
  if (evaluate(items[1], env).truthy()) return evaluate(items[2], env);
  return items.size() == 4 ? evaluate(items[3], env) : Value::nil();
}

Value Interpreter::sf_progn(const Form& form, const EnvPtr& env) {
  return eval_body(form.items().subspan(1), env);
}

Value Interpreter::sf_let(const Form& form, const EnvPtr& env) {
  expect_size(form, 2, SIZE_MAX, "let");
  const Form& bindings = form.items()[1];
  if (bindings.is_atom() && !bindings.datum().is_nil()) malformed(form, "let bindings must be a list");
  auto frame = std::make_shared<Environment>(env);
  // Parallel binding: every init form sees the outer environment.
  std::vector<std::pair<Symbol, Value>> values;
  for (const Form& b : bindings.items()) {
    if (b.is_atom()) {
      values.emplace_back(expect_symbol(b, form), Value::nil());
      continue;
    }
    if (b.items().size() > 2) malformed(form, "let binding takes a name and one init form");
    Symbol name = expect_symbol(b.items()[0], form);
    values.emplace_back(name, b.items().size() == 2 ? evaluate(b.items()[1], env) : Value::nil());
  }
  for (auto& [name, v] : values) frame->bind(name, SlotKind::Plain, std::move(v));
  return eval_body(form.items().subspan(2), frame);
}

Value Interpreter::sf_lambda(const Form& form, const EnvPtr& env) {
  return Value(make_closure(form, env, CallMode::Strict, std::nullopt));
}

Value Interpreter::sf_function(const Form& form, const EnvPtr& env) {
  expect_size(form, 2, 2, "function");
  const Form& target = form.items()[1];
  if (target.starts_with(sym_lambda())) {
    return Value(make_closure(target, env, CallMode::Strict, std::nullopt));
  }
  Symbol name = expect_symbol(target, form);
  FunctionPtr fn = find_function(name);
  if (!fn) throw EvalError(ErrorKind::UnboundSymbol, "undefined function " + std::string(name.name()));
  return Value(fn);
}

Value Interpreter::sf_defun(const Form& form, const EnvPtr& env) {
  expect_size(form, 3, SIZE_MAX, "defun");
  const auto items = form.items();
  Symbol name = expect_symbol(items[1], form);
  auto fn = std::make_shared<Function>();
  fn->name = name;
  fn->params = std::make_shared<const LambdaList>(LambdaList::parse(items[2]));
  fn->body = items.subspan(3);
  fn->closure = env;
  define_function(name, std::move(fn));
  // A plain redefinition leaves the name without a lazy half.
  registry_.erase(name);
  return Value::symbol(name);
}

Value Interpreter::sf_defparameter(const Form& form, const EnvPtr& env) {
  expect_size(form, 3, 4, "defparameter");
  Symbol name = expect_symbol(form.items()[1], form);
  define_global(name, evaluate(form.items()[2], env));
  return Value::symbol(name);
}

Value Interpreter::sf_ecase(const Form& form, const EnvPtr& env) {
  expect_size(form, 2, SIZE_MAX, "ecase");
  const auto items = form.items();
  const Value key = evaluate(items[1], env);
  std::string expected;
  for (const Form& clause : items.subspan(2)) {
    if (clause.is_atom()) malformed(form, "ecase clause must be a list");
    const Form& keys = clause.items()[0];
    auto matches = [&](const Form& k) {
      if (!expected.empty()) expected += ", ";
      expected += print_value(k.to_value());
      return eql(key, k.to_value());
    };
    bool hit = false;
    if (keys.is_list()) {
      for (const Form& k : keys.items()) hit = hit || matches(k);
    } else if (!keys.datum().is_nil()) {
      hit = matches(keys);
    }
    if (hit) return eval_body(clause.items().subspan(1), env);
  }
  throw EvalError(ErrorKind::EcaseNoMatch,
                  print_value(key) + " fell through ecase; expected one of " + expected);
}

Value Interpreter::sf_loop(const Form& form, const EnvPtr&) {
  if (form.items().size() != 1) malformed(form, "only the clause-free (loop) is supported");
  for (;;) count_step();
}

}  // namespace clazy
