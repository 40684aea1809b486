// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "clazy/interpreter.hpp"
#include "clazy/printer.hpp"
#include "process.hpp"
#include "program_gen.hpp"

namespace {

using clazy::Config;
using clazy::ErrorKind;
using clazy::Interpreter;
using Clock = std::chrono::steady_clock;

constexpr const char* kStrictSi = "(defun si (c e a) (if c e a))";
constexpr const char* kLazySi = "(deflazy si (condicio ergo alternatio) (if condicio ergo alternatio))";

struct Outcome {
  bool ok;
  std::string detail;
};

std::string run(Interpreter& interp, const std::string& src) {
  return clazy::print_value(interp.eval_string(src));
}

bool raises(Interpreter& interp, const std::string& src, ErrorKind kind) {
  try {
    interp.eval_string(src);
  } catch (const clazy::Error& e) {
    return e.kind() == kind;
  }
  return false;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome expect_eq(const std::string& got, const std::string& want) {
  if (got == want) return {true, want};
  return {false, "got " + got + ", want " + want};
}

Outcome strict_divergence() {
  Interpreter interp;
  run(interp, kStrictSi);
  const auto start = Clock::now();
  const bool ok = raises(interp, "(si t 42 (diverge))", ErrorKind::Divergence);
  const double s = seconds_since(start);
  return {ok && s < 1.0, "divergence raised=" + std::to_string(ok) + " in " + std::to_string(s) + "s"};
}

Outcome lazy_si_cli() {
  clazy::testing::TempDir dir;
  auto file = dir.write("si.lisp", std::string(kLazySi) + "\n(print (lazy-call #'si t 42 (diverge)))\n");
  auto r = clazy::testing::run_process(CLAZY_CLI_PATH, {file.string()});
  std::string shown;
  for (char ch : r.out) shown += ch == '\n' ? std::string("\\n") : std::string(1, ch);
  return {r.exit_code == 0 && r.out == "42\n",
          "exit " + std::to_string(r.exit_code) + ", stdout \"" + shown + "\""};
}

Outcome lazy_lambda() {
  Interpreter interp;
  return expect_eq(run(interp,
                       "(lazy-call (lazy #'(lambda (condicio ergo alternatio)"
                       " (if condicio ergo alternatio))) t (+ 20 20 2) (diverge))"),
                   "42");
}

Outcome keyword_calls() {
  Interpreter interp;
  const std::string a = run(interp,
                            "(lazy-call (lazy (lambda (x &key (y (diverge) y-supplied-p))"
                            " (if y-supplied-p y (+ x 21)))) 21)");
  const std::string b = run(interp,
                            "(lazy-call (lazy (lambda (x &key ((:y yy) (diverge)))"
                            " (if x (+ x 21) yy))) 21)");
  const std::string c = run(interp,
                            "(lazy-call (lazy (lambda (x &key ((:y yy) (diverge)))"
                            " (if x (+ x 21) yy))) nil :y 42)");
  return {a == "42" && b == "42" && c == "42", a + " " + b + " " + c};
}

Outcome lazy_conses() {
  Interpreter interp;
  run(interp,
      "(defparameter ll (lazy-call 'conc 1 (lazy-call 'conc (diverge)"
      " (lazy-call 'conc 3 (diverge)))))");
  const std::string third = run(interp, "(head (tail (tail ll)))");
  const bool hole = raises(interp, "(head (tail ll))", ErrorKind::Divergence);
  return {third == "3" && hole, "third=" + third + ", hole raises=" + std::to_string(hole)};
}

Outcome streams() {
  Interpreter interp;
  const auto start = Clock::now();
  for (int n = 0; n <= 64; ++n) {
    std::string oracle;
    for (int i = 0; i < n; ++i) oracle += (i ? " " : "(") + std::to_string(i);
    oracle = n == 0 ? "NIL" : oracle + ")";
    const std::string got = run(interp, "(stream-take (integers-from 0) " + std::to_string(n) + ")");
    if (got != oracle) return {false, "n=" + std::to_string(n) + ": got " + got};
  }
  const double s = seconds_since(start);
  return {s < 1.0, "n=0..64 match in " + std::to_string(s) + "s"};
}

Outcome rest_thunks() {
  Interpreter interp;
  run(interp, "(deflazy collect (&rest r) r)");
  run(interp, "(defparameter r (lazy-call #'collect (tick!) (tick!)))");
  const auto before = interp.ticks();
  const bool raw = run(interp, "r") == "(#<thunk> #<thunk>)";
  run(interp, "(force (car r))");
  const auto after = interp.ticks();
  return {raw && before == 0 && after == 1,
          "unforced ticks=" + std::to_string(before) + ", after one force=" + std::to_string(after)};
}

Outcome thunk_economy() {
  Interpreter interp;
  run(interp, kLazySi);
  interp.reset_thunk_allocations();
  run(interp, "(lazy-call #'si t 1 2)");
  const auto constants = interp.thunk_allocations();
  interp.reset_thunk_allocations();
  run(interp, "(lazy-call #'si t 1 (+ 1 1))");
  const auto compound = interp.thunk_allocations();
  return {constants == 0 && compound == 1,
          "constants=" + std::to_string(constants) + ", one compound=" + std::to_string(compound)};
}

Outcome name_vs_need() {
  auto measure = [](bool memoize, std::string& value) {
    Config c;
    c.memoize = memoize;
    Interpreter interp(c);
    run(interp, "(deflazy twice (x) (+ x x))");
    value = run(interp, "(lazy-call #'twice (tick!))");
    return interp.ticks();
  };
  std::string by_name;
  std::string by_need;
  const auto name_ticks = measure(false, by_name);
  const auto need_ticks = measure(true, by_need);
  return {name_ticks == 2 && need_ticks == 1 && by_name == "3" && by_need == "2",
          "by name +" + std::to_string(name_ticks) + " (value " + by_name + "), by need +" +
              std::to_string(need_ticks) + " (value " + by_need + ")"};
}

Outcome equivalence() {
  Interpreter interp;
  clazy::testing::ProgramGenerator gen(1);
  const auto start = Clock::now();
  constexpr int kPrograms = 1000;
  for (int i = 0; i < kPrograms; ++i) {
    auto body = gen.expr(4);
    const std::string name = "p" + std::to_string(i);
    run(interp, "(deflazy " + name + " (a b c) " + clazy::testing::render(*body) + ")");
    std::string args;
    std::int64_t values[3];
    for (auto& v : values) {
      auto [text, value] = gen.argument();
      args += " " + text;
      v = value;
    }
    const auto oracle = clazy::testing::host_eval(*body, values);
    const std::string strict = run(interp, "(" + name + args + ")");
    const std::string lazy = run(interp, "(lazy-call #'" + name + args + ")");
    if (!oracle || strict != lazy || strict != std::to_string(*oracle)) {
      return {false, "program " + std::to_string(i) + ": strict " + strict + ", lazy " + lazy};
    }
  }
  const double s = seconds_since(start);
  return {s < 30.0, std::to_string(kPrograms) + " programs agree in " + std::to_string(s) + "s"};
}

Outcome step_limit_cli() {
  clazy::testing::TempDir dir;
  auto file = dir.write("loop.lisp", "(loop)\n");
  const auto start = Clock::now();
  auto r = clazy::testing::run_process(CLAZY_CLI_PATH, {"--step-limit", "1000", file.string()});
  const double s = seconds_since(start);
  return {r.exit_code == 3 && s < 1.0,
          "exit " + std::to_string(r.exit_code) + " in " + std::to_string(s) + "s"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"strict si diverges", strict_divergence},
      {"lazy si via cli prints 42", lazy_si_cli},
      {"lazy lambda returns 42", lazy_lambda},
      {"keyword call forms return 42", keyword_calls},
      {"lazy conses with holes", lazy_conses},
      {"stream-take matches unfold", streams},
      {"rest holds unforced thunks", rest_thunks},
      {"thunk allocation counts", thunk_economy},
      {"call-by-name vs call-by-need", name_vs_need},
      {"strict/lazy equivalence", equivalence},
      {"step limit exits 3", step_limit_cli},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o{false, ""};
    try {
      o = c.check();
    } catch (const clazy::Error& e) {
      o = {false, e.diagnostic()};
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
