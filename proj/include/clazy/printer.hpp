#pragma once

#include <ostream>
#include <string>

#include "clazy/value.hpp"

namespace clazy {

/// Renders a value in read syntax. Never forces thunks: they print as
/// `#<thunk>`.
std::string print_value(const Value& v);
void print_value(std::ostream& out, const Value& v);

}  // namespace clazy
