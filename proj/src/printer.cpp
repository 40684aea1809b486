#include "clazy/printer.hpp"

#include <sstream>

#include "clazy/interpreter.hpp"

namespace clazy {
namespace {

void print_string(std::ostream& out, const std::string& s) {
  out << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out << '\\';
    out << c;
  }
  out << '"';
}

void print_function(std::ostream& out, const Function& fn) {
  if (fn.name) {
    out << "#<function " << fn.name->name() << '>';
  } else {
    out << "#<lambda>";
  }
}

}  // namespace

void print_value(std::ostream& out, const Value& v) {
  if (v.is_nil()) {
    out << "NIL";
  } else if (v.is_true()) {
    out << 'T';
  } else if (auto n = v.integer()) {
    out << *n;
  } else if (auto s = v.symbol()) {
    out << s->name();
  } else if (auto k = v.keyword()) {
    out << ':' << k->name();
  } else if (auto str = v.string()) {
    print_string(out, *str);
  } else if (auto f = v.function()) {
    print_function(out, **f);
  } else if (v.thunk()) {
    out << "#<thunk>";
  } else if (v.cons()) {
    out << '(';
    const Value* cur = &v;
    bool first = true;
    while (auto cell = cur->cons()) {
      if (!first) out << ' ';
      first = false;
      print_value(out, cell->car);
      cur = &cell->cdr;
    }
    if (!cur->is_nil()) {
      out << " . ";
      print_value(out, *cur);
    }
    out << ')';
  }
}

std::string print_value(const Value& v) {
  std::ostringstream out;
  print_value(out, v);
  return out.str();
}

}  // namespace clazy
