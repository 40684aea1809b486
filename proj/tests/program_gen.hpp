#pragma once

// Random small pure integer programs over three parameters, with an
// independent host-side evaluator used as the oracle.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace clazy::testing {

struct Expr {
  enum class Op { Const, Param, Add, Sub, Mul, IfLess, IfEqual } op;
  std::int64_t value = 0;  // Const
  int param = 0;           // Param
  std::vector<std::unique_ptr<Expr>> kids;
};

inline const char* param_name(int i) {
  static const char* names[] = {"a", "b", "c"};
  return names[i];
}

class ProgramGenerator {
 public:
  explicit ProgramGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Expression of nesting depth at most `depth`.
  std::unique_ptr<Expr> expr(int depth) {
    auto e = std::make_unique<Expr>();
    const int choice = depth == 0 ? pick(2) : pick(7);
    switch (choice) {
      case 0:
        e->op = Expr::Op::Const;
        e->value = pick(19) - 9;
        return e;
      case 1:
        e->op = Expr::Op::Param;
        e->param = pick(3);
        return e;
      case 2: e->op = Expr::Op::Add; break;
      case 3: e->op = Expr::Op::Sub; break;
      case 4: e->op = Expr::Op::Mul; break;
      case 5: e->op = Expr::Op::IfLess; break;
      default: e->op = Expr::Op::IfEqual; break;
    }
    const int arity = (e->op == Expr::Op::IfLess || e->op == Expr::Op::IfEqual) ? 4 : 2;
    for (int i = 0; i < arity; ++i) e->kids.push_back(expr(depth - 1));
    return e;
  }

  /// A pure argument form and the value it denotes: either a literal or a
  /// small arithmetic expression that a lazy call has to thunk.
  std::pair<std::string, std::int64_t> argument() {
    const std::int64_t x = pick(21) - 10;
    switch (pick(3)) {
      case 0: return {std::to_string(x), x};
      case 1: {
        const std::int64_t y = pick(9);
        return {"(+ " + std::to_string(x - y) + " " + std::to_string(y) + ")", x};
      }
      default: return {"(- " + std::to_string(x + 3) + " 3)", x};
    }
  }

  int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 rng_;
};

inline std::string render(const Expr& e) {
  auto bin = [&](const char* op) {
    return std::string("(") + op + " " + render(*e.kids[0]) + " " + render(*e.kids[1]) + ")";
  };
  switch (e.op) {
    case Expr::Op::Const: return std::to_string(e.value);
    case Expr::Op::Param: return param_name(e.param);
    case Expr::Op::Add: return bin("+");
    case Expr::Op::Sub: return bin("-");
    case Expr::Op::Mul: return bin("*");
    case Expr::Op::IfLess:
    case Expr::Op::IfEqual:
      return std::string("(if (") + (e.op == Expr::Op::IfLess ? "<" : "=") + " " +
             render(*e.kids[0]) + " " + render(*e.kids[1]) + ") " + render(*e.kids[2]) + " " +
             render(*e.kids[3]) + ")";
  }
  return "";
}

/// Host evaluation; nullopt on 64-bit overflow.
inline std::optional<std::int64_t> host_eval(const Expr& e, const std::int64_t (&args)[3]) {
  auto kid = [&](int i) { return host_eval(*e.kids[static_cast<std::size_t>(i)], args); };
  std::int64_t out = 0;
  switch (e.op) {
    case Expr::Op::Const: return e.value;
    case Expr::Op::Param: return args[e.param];
    case Expr::Op::Add:
    case Expr::Op::Sub:
    case Expr::Op::Mul: {
      auto l = kid(0);
      auto r = kid(1);
      if (!l || !r) return std::nullopt;
      bool over = e.op == Expr::Op::Add   ? __builtin_add_overflow(*l, *r, &out)
                  : e.op == Expr::Op::Sub ? __builtin_sub_overflow(*l, *r, &out)
                                          : __builtin_mul_overflow(*l, *r, &out);
      if (over) return std::nullopt;
      return out;
    }
    case Expr::Op::IfLess:
    case Expr::Op::IfEqual: {
      auto l = kid(0);
      auto r = kid(1);
      if (!l || !r) return std::nullopt;
      const bool taken = e.op == Expr::Op::IfLess ? *l < *r : *l == *r;
      return kid(taken ? 2 : 3);
    }
  }
  return std::nullopt;
}

}  // namespace clazy::testing
