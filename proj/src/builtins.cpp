#include <limits>
#include <string>

#include "clazy/interpreter.hpp"
#include "clazy/printer.hpp"

namespace clazy {
namespace {

using Args = std::span<const Value>;

void check_arity(Args args, std::size_t min, std::size_t max, const char* name) {
  if (args.size() < min || args.size() > max) {
    std::string expected = min == max ? std::to_string(min)
                           : max == SIZE_MAX ? "at least " + std::to_string(min)
                                             : std::to_string(min) + " to " + std::to_string(max);
    throw EvalError(ErrorKind::ArityMismatch, std::string(name) + " expects " + expected +
                                                  " argument(s), got " +
                                                  std::to_string(args.size()));
  }
}

std::int64_t integer_arg(const Value& v, const char* name) {
  if (auto n = v.integer()) return *n;
  throw EvalError(ErrorKind::TypeError, std::string(name) + ": " + print_value(v) + " (a " +
                                            std::string(v.type_name()) + ") is not an integer");
}

[[noreturn]] void overflow(const char* name) {
  throw EvalError(ErrorKind::Overflow, std::string(name) + ": 64-bit integer overflow");
}

Value add(Interpreter&, Args args) {
  std::int64_t acc = 0;
  for (const Value& v : args) {
    if (__builtin_add_overflow(acc, integer_arg(v, "+"), &acc)) overflow("+");
  }
  return Value::integer(acc);
}

Value multiply(Interpreter&, Args args) {
  std::int64_t acc = 1;
  for (const Value& v : args) {
    if (__builtin_mul_overflow(acc, integer_arg(v, "*"), &acc)) overflow("*");
  }
  return Value::integer(acc);
}

Value subtract(Interpreter&, Args args) {
  check_arity(args, 1, SIZE_MAX, "-");
  std::int64_t acc = integer_arg(args[0], "-");
  if (args.size() == 1) {
    if (acc == std::numeric_limits<std::int64_t>::min()) overflow("-");
    return Value::integer(-acc);
  }
  for (const Value& v : args.subspan(1)) {
    if (__builtin_sub_overflow(acc, integer_arg(v, "-"), &acc)) overflow("-");
  }
  return Value::integer(acc);
}

Value one_plus(Interpreter&, Args args) {
  check_arity(args, 1, 1, "1+");
  std::int64_t out = 0;
  if (__builtin_add_overflow(integer_arg(args[0], "1+"), 1, &out)) overflow("1+");
  return Value::integer(out);
}

template <typename Compare>
Value compare_chain(Args args, const char* name, Compare cmp) {
  check_arity(args, 1, SIZE_MAX, name);
  for (std::size_t i = 0; i < args.size(); ++i) integer_arg(args[i], name);
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (!cmp(*args[i - 1].integer(), *args[i].integer())) return Value::nil();
  }
  return Value::t();
}

Value num_equal(Interpreter&, Args args) {
  return compare_chain(args, "=", [](auto a, auto b) { return a == b; });
}

Value num_less(Interpreter&, Args args) {
  return compare_chain(args, "<", [](auto a, auto b) { return a < b; });
}

Value cons(Interpreter&, Args args) {
  check_arity(args, 2, 2, "cons");
  return make_cons(args[0], args[1]);
}

const Cons* list_arg(const Value& v, const char* name) {
  if (v.is_nil()) return nullptr;
  if (auto c = v.cons()) return c;
  throw EvalError(ErrorKind::TypeError, std::string(name) + ": " + print_value(v) + " (a " +
                                            std::string(v.type_name()) + ") is not a list");
}

Value car(Interpreter&, Args args) {
  check_arity(args, 1, 1, "car");
  auto c = list_arg(args[0], "car");
  return c ? c->car : Value::nil();
}

Value cdr(Interpreter&, Args args) {
  check_arity(args, 1, 1, "cdr");
  auto c = list_arg(args[0], "cdr");
  return c ? c->cdr : Value::nil();
}

Value list(Interpreter&, Args args) {
  Value out;
  for (auto it = args.rbegin(); it != args.rend(); ++it) out = make_cons(*it, std::move(out));
  return out;
}

Value funcall(Interpreter& interp, Args args) {
  check_arity(args, 1, SIZE_MAX, "funcall");
  return interp.funcall(args[0], args.subspan(1));
}

Value not_(Interpreter&, Args args) {
  check_arity(args, 1, 1, "not");
  return Value::boolean(args[0].is_nil());
}

Value force(Interpreter& interp, Args args) {
  check_arity(args, 1, 1, "force");
  return interp.force(args[0]);
}

Value diverge(Interpreter&, Args args) {
  check_arity(args, 0, 0, "diverge");
  throw DivergenceError();
}

Value tick(Interpreter& interp, Args args) {
  check_arity(args, 0, 0, "tick!");
  return Value::integer(static_cast<std::int64_t>(interp.tick()));
}

Value ticks(Interpreter& interp, Args args) {
  check_arity(args, 0, 0, "ticks");
  return Value::integer(static_cast<std::int64_t>(interp.ticks()));
}

Value print(Interpreter& interp, Args args) {
  check_arity(args, 1, 1, "print");
  interp.write_output(print_value(args[0]) + "\n");
  return args[0];
}

}  // namespace

void install_builtins(Interpreter& interp) {
  interp.define_builtin("+", add);
  interp.define_builtin("-", subtract);
  interp.define_builtin("*", multiply);
  interp.define_builtin("1+", one_plus);
  interp.define_builtin("=", num_equal);
  interp.define_builtin("<", num_less);
  interp.define_builtin("CONS", cons);
  interp.define_builtin("CAR", car);
  interp.define_builtin("CDR", cdr);
  interp.define_builtin("LIST", list);
  interp.define_builtin("FUNCALL", funcall);
  interp.define_builtin("NOT", not_);
  interp.define_builtin("NULL", not_);
  interp.define_builtin("FORCE", force);
  interp.define_builtin("DIVERGE", diverge);
  interp.define_builtin("TICK!", tick);
  interp.define_builtin("TICKS", ticks);
  interp.define_builtin("PRINT", print);
}

}  // namespace clazy
