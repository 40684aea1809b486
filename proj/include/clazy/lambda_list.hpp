#pragma once

#include <optional>
#include <vector>

#include "clazy/reader.hpp"
#include "clazy/value.hpp"

namespace clazy {

struct OptionalParam {
  Symbol name;
  const Form* default_form = nullptr;  // null: defaults to nil
  std::optional<Symbol> supplied_p;
};

struct KeywordParam {
  Keyword key;
  Symbol name;
  const Form* default_form = nullptr;
  std::optional<Symbol> supplied_p;
};

/// Parsed `(req... &optional opt... &rest r &key key...)`.
///
/// Default forms point into the source form the list was parsed from, which
/// must outlive it.
struct LambdaList {
  std::vector<Symbol> required;
  std::vector<OptionalParam> optional;
  std::optional<Symbol> rest;
  std::vector<KeywordParam> keys;
  bool has_key_section = false;

  /// Throws EvalError(MalformedLambdaList) on bad section order, a
  /// non-symbol parameter, or a duplicate name.
  static LambdaList parse(const Form& form);
};

}  // namespace clazy
