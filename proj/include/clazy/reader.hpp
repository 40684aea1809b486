#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clazy/error.hpp"
#include "clazy/value.hpp"

namespace clazy {

enum class TokenKind {
  OpenParen,
  CloseParen,
  QuoteMark,
  SharpQuote,
  Symbol,
  Keyword,
  Integer,
  String,
  Eof,
};

struct Token {
  TokenKind kind;
  std::string text;  // source lexeme, verbatim
  SourcePos pos;
};

/// Splits UTF-8 source into tokens, always ending with one Eof token.
///
/// Throws ReadError on an unterminated string, an illegal character, invalid
/// UTF-8, or an integer literal outside the signed 64-bit range.
std::vector<Token> tokenize(std::string_view text);

/// A parsed s-expression: either an atom (symbol, keyword, integer, string,
/// t, nil) or a proper list of forms. `()` reads as the atom nil.
class Form {
 public:
  static Form atom(Value datum, SourcePos pos);
  static Form list(std::vector<Form> items, SourcePos pos);

  bool is_list() const noexcept { return is_list_; }
  bool is_atom() const noexcept { return !is_list_; }
  SourcePos position() const noexcept { return pos_; }

  /// Atom payload; nil for lists.
  const Value& datum() const noexcept { return datum_; }
  /// List elements; empty for atoms.
  std::span<const Form> items() const noexcept { return items_; }

  /// Non-null when this form is a symbol atom.
  const Symbol* symbol() const noexcept { return is_list_ ? nullptr : datum_.symbol(); }
  bool is_symbol(Symbol s) const noexcept {
    auto sym = symbol();
    return sym && *sym == s;
  }
  /// True for a non-empty list whose first element is the symbol `s`.
  bool starts_with(Symbol s) const noexcept {
    return is_list_ && !items_.empty() && items_.front().is_symbol(s);
  }

  /// The datum this form denotes under `quote`.
  Value to_value() const;

 private:
  Form() = default;

  bool is_list_ = false;
  Value datum_;
  std::vector<Form> items_;
  SourcePos pos_;
};

/// Groups tokens into top-level forms. `'e` becomes `(quote e)` and `#'e`
/// becomes `(function e)`.
///
/// Throws ReadError on unbalanced parentheses or a dangling quote mark.
std::vector<Form> parse(std::span<const Token> tokens);

/// tokenize + parse.
std::vector<Form> read_program(std::string_view text);

}  // namespace clazy
