#include <gtest/gtest.h>

#include "clazy/interpreter.hpp"
#include "test_support.hpp"

namespace clazy {
namespace {

using testing::run;
using testing::ticks;

constexpr const char* kLl =
    "(defparameter ll (lazy-call 'conc 1 (lazy-call 'conc (diverge)"
    " (lazy-call 'conc 3 (diverge)))))";

class Stdlib : public ::testing::Test {
 protected:
  Interpreter interp;
};

// Strict finite unfold: the first n integers starting at k.
std::string unfold(std::int64_t k, std::int64_t n) {
  if (n == 0) return "NIL";
  std::string out = "(";
  for (std::int64_t i = 0; i < n; ++i) {
    if (i) out += " ";
    out += std::to_string(k + i);
  }
  return out + ")";
}

TEST_F(Stdlib, Arithmetic) {
  EXPECT_EQ(run(interp, "(1+ 41)"), "42");
  EXPECT_EQ(run(interp, "(+)"), "0");
  EXPECT_EQ(run(interp, "(*)"), "1");
  EXPECT_EQ(run(interp, "(- 5)"), "-5");
  EXPECT_EQ(run(interp, "(- 10 3 2)"), "5");
  EXPECT_EQ(run(interp, "(* 6 7)"), "42");
  EXPECT_EQ(run(interp, "(= 1 1 1)"), "T");
  EXPECT_EQ(run(interp, "(< 1 2 3)"), "T");
  EXPECT_EQ(run(interp, "(< 1 3 2)"), "NIL");
  EXPECT_LISP_ERROR(interp, "(+ 1 'a)", ErrorKind::TypeError);
  EXPECT_LISP_ERROR(interp, "(1+ 9223372036854775807)", ErrorKind::Overflow);
  EXPECT_LISP_ERROR(interp, "(* 4611686018427387904 2)", ErrorKind::Overflow);
  EXPECT_LISP_ERROR(interp, "(- -9223372036854775807 2)", ErrorKind::Overflow);
}

TEST_F(Stdlib, Lists) {
  EXPECT_EQ(run(interp, "(funcall #'cons 1 2)"), "(1 . 2)");
  EXPECT_EQ(run(interp, "(list 1 2 3)"), "(1 2 3)");
  EXPECT_EQ(run(interp, "(list)"), "NIL");
  EXPECT_EQ(run(interp, "(car '(1 2))"), "1");
  EXPECT_EQ(run(interp, "(cdr '(1 2))"), "(2)");
  EXPECT_EQ(run(interp, "(car nil)"), "NIL");
  EXPECT_EQ(run(interp, "(cdr nil)"), "NIL");
  EXPECT_EQ(run(interp, "(not nil)"), "T");
  EXPECT_EQ(run(interp, "(null 0)"), "NIL");
  EXPECT_LISP_ERROR(interp, "(car 5)", ErrorKind::TypeError);
}

TEST_F(Stdlib, FuncallRefusesLazyFunctions) {
  EXPECT_LISP_ERROR(interp, "(funcall (lazy (lambda (x) x)) 1)", ErrorKind::LazyThroughStrict);
  EXPECT_LISP_ERROR(interp, "(funcall 5)", ErrorKind::NotAFunction);
  EXPECT_EQ(run(interp, "(funcall (lambda (x) (* x x)) 7)"), "49");
}

TEST_F(Stdlib, Diverge) {
  EXPECT_LISP_ERROR(interp, "(diverge)", ErrorKind::Divergence);
  EXPECT_EQ(run(interp, "(delay (diverge))"), "#<thunk>");
}

TEST_F(Stdlib, Ticks) {
  EXPECT_EQ(run(interp, "(ticks)"), "0");
  EXPECT_EQ(run(interp, "(progn (tick!) (tick!) (ticks))"), "2");
  EXPECT_EQ(run(interp, "(ticks)"), "2");
}

TEST_F(Stdlib, Print) {
  std::string out;
  interp.set_output([&](std::string_view s) { out += s; });
  EXPECT_EQ(run(interp, "(print '(1 \"a\"))"), "(1 \"a\")");
  EXPECT_EQ(out, "(1 \"a\")\n");
}

TEST_F(Stdlib, PreludeIsInstalled) {
  for (const char* name : {"CONC", "HEAD", "TAIL", "CONC-PAIR"}) {
    EXPECT_NE(interp.lazy_registry().find(Symbol::intern(name)), nullptr) << name;
  }
  EXPECT_NE(interp.find_function(Symbol::intern("INTEGERS-FROM")), nullptr);
  EXPECT_NE(interp.find_function(Symbol::intern("STREAM-TAKE")), nullptr);
}

TEST(StdlibBare, NoPreludeMeansNoStreams) {
  Config c;
  c.load_prelude = false;
  Interpreter interp(c);
  EXPECT_LISP_ERROR(interp, "(integers-from 0)", ErrorKind::UnboundSymbol);
}

TEST_F(Stdlib, LazyConsTranscript) {
  run(interp, kLl);
  EXPECT_EQ(run(interp, "(head ll)"), "1");
  EXPECT_EQ(run(interp, "(head (tail (tail ll)))"), "3");
  EXPECT_LISP_ERROR(interp, "(head (tail ll))", ErrorKind::Divergence);
  EXPECT_LISP_ERROR(interp, "(tail (tail (tail ll)))", ErrorKind::Divergence);
}

TEST_F(Stdlib, LazyConsWithGenuineLoopHole) {
  EXPECT_EQ(run(interp, "(head (lazy-call 'conc 1 (loop)))"), "1");
}

TEST_F(Stdlib, HoleIsolation) {
  // Building never forces a hole; every forced position is independent.
  EXPECT_EQ(testing::error_of(interp, kLl), std::nullopt);
  EXPECT_EQ(run(interp, "(head (tail (tail ll)))"), "3");
  EXPECT_LISP_ERROR(interp, "(head (tail ll))", ErrorKind::Divergence);
  EXPECT_EQ(run(interp, "(head ll)"), "1");
}

TEST_F(Stdlib, SelectorOutsideCarCdr) {
  EXPECT_LISP_ERROR(interp, "(funcall (lazy-call 'conc 1 2) 'other)", ErrorKind::EcaseNoMatch);
}

TEST_F(Stdlib, ConcIsLazyByName) {
  run(interp, "(defparameter p (lazy-call 'conc (tick!) (tick!)))");
  EXPECT_EQ(ticks(interp), 0);
  run(interp, "(head p)");
  EXPECT_EQ(ticks(interp), 1);
  run(interp, "(head p)");
  EXPECT_EQ(ticks(interp), 2);
}

TEST(StdlibMemo, ConcIsLazyByNeed) {
  Interpreter interp(testing::config_with(true));
  run(interp, "(defparameter p (lazy-call 'conc (tick!) (tick!)))");
  EXPECT_EQ(ticks(interp), 0);
  EXPECT_EQ(run(interp, "(list (head p) (head p) (tail p))"), "(1 1 2)");
  EXPECT_EQ(ticks(interp), 2);
}

TEST_F(Stdlib, ConcPairPrintsThunkTail) {
  EXPECT_EQ(run(interp, "(lazy-call 'conc-pair 1 (diverge))"), "(1 . #<thunk>)");
  EXPECT_EQ(run(interp, "(force (cdr (lazy-call 'conc-pair 1 (+ 1 1))))"), "2");
}

TEST_F(Stdlib, StreamTakeExample) {
  EXPECT_EQ(run(interp, "(stream-take (integers-from 0) 5)"), "(0 1 2 3 4)");
  EXPECT_EQ(run(interp, "(stream-take (integers-from 0) 0)"), "NIL");
}

TEST_F(Stdlib, StreamPrefixLaw) {
  for (std::int64_t k : {0, 1, -5, 17, 1000000}) {
    for (std::int64_t n = 0; n <= 64; ++n) {
      const std::string form = "(stream-take (integers-from " + std::to_string(k) + ") " +
                               std::to_string(n) + ")";
      ASSERT_EQ(run(interp, form), unfold(k, n)) << form;
    }
  }
}

TEST(StdlibMemo, StreamPrefixLawUnderMemoization) {
  Interpreter interp(testing::config_with(true));
  for (std::int64_t n = 0; n <= 64; n += 7) {
    EXPECT_EQ(run(interp, "(stream-take (integers-from 3) " + std::to_string(n) + ")"),
              unfold(3, n));
  }
}

}  // namespace
}  // namespace clazy
