#include "clazy/reader.hpp"

#include <cctype>
#include <charconv>

namespace clazy {
namespace {

constexpr std::size_t kMaxNesting = 10000;

bool is_whitespace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_delimiter(char c) {
  return is_whitespace(c) || c == '(' || c == ')' || c == '"' || c == ';' || c == '\'';
}

bool is_illegal(unsigned char c) {
  return c == '`' || c == ',' || c == '\\' || c == '|' || (c < 0x20 && !is_whitespace(c)) ||
         c == 0x7f;
}

// Length of the UTF-8 sequence starting at text[i], or 0 if malformed.
std::size_t utf8_sequence_length(std::string_view text, std::size_t i) {
  const auto lead = static_cast<unsigned char>(text[i]);
  std::size_t len = 0;
  std::uint32_t cp = 0;
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) { len = 2; cp = lead & 0x1F; }
  else if ((lead & 0xF0) == 0xE0) { len = 3; cp = lead & 0x0F; }
  else if ((lead & 0xF8) == 0xF0) { len = 4; cp = lead & 0x07; }
  else return 0;
  if (i + len > text.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(text[i + k]);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  return len;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_blank();
      if (at_end()) {
        tokens.push_back({TokenKind::Eof, "", pos_});
        return tokens;
      }
      tokens.push_back(next());
    }
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }

  // Consumes one code point, keeping line/column in step.
  void advance() {
    const std::size_t len = utf8_sequence_length(text_, i_);
    if (len == 0) throw ReadError("invalid UTF-8 byte sequence", pos_);
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    i_ += len;
  }

  void skip_blank() {
    while (!at_end()) {
      if (is_whitespace(peek())) {
        advance();
      } else if (peek() == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    const SourcePos start = pos_;
    const std::size_t begin = i_;
    const char c = peek();
    auto single = [&](TokenKind kind) {
      advance();
      return Token{kind, std::string(text_.substr(begin, i_ - begin)), start};
    };
    switch (c) {
      case '(': return single(TokenKind::OpenParen);
      case ')': return single(TokenKind::CloseParen);
      case '\'': return single(TokenKind::QuoteMark);
      case '"': return string_token(start);
      case '#':
        if (peek(1) == '\'') {
          advance();
          return single(TokenKind::SharpQuote);
        }
        throw ReadError("illegal character '#'", start);
      default: break;
    }
    if (is_illegal(static_cast<unsigned char>(c))) {
      throw ReadError(std::string("illegal character '") + c + "'", start);
    }
    while (!at_end() && !is_delimiter(peek())) {
      const auto b = static_cast<unsigned char>(peek());
      if (is_illegal(b) || b == '#') {
        throw ReadError(std::string("illegal character '") + peek() + "'", pos_);
      }
      advance();
    }
    return classify(std::string(text_.substr(begin, i_ - begin)), start);
  }

  Token string_token(SourcePos start) {
    const std::size_t begin = i_;
    advance();  // opening quote
    while (true) {
      if (at_end()) throw ReadError("unterminated string", start);
      const char c = peek();
      if (c == '"') break;
      if (c == '\\') {
        const SourcePos escape = pos_;
        advance();
        if (at_end()) throw ReadError("unterminated string", start);
        if (peek() != '"' && peek() != '\\') {
          throw ReadError("unknown escape sequence in string", escape);
        }
      }
      advance();
    }
    advance();  // closing quote
    return Token{TokenKind::String, std::string(text_.substr(begin, i_ - begin)), start};
  }

  static Token classify(std::string lexeme, SourcePos start) {
    if (lexeme.front() == ':') {
      if (lexeme.size() == 1) throw ReadError("keyword without a name", start);
      return Token{TokenKind::Keyword, std::move(lexeme), start};
    }
    std::size_t digits_from = (lexeme.front() == '+' || lexeme.front() == '-') ? 1 : 0;
    bool integer = lexeme.size() > digits_from;
    for (std::size_t k = digits_from; k < lexeme.size() && integer; ++k) {
      integer = std::isdigit(static_cast<unsigned char>(lexeme[k])) != 0;
    }
    if (integer) {
      std::int64_t ignored = 0;
      const char* first = lexeme.data() + (lexeme.front() == '+' ? 1 : 0);
      const char* last = lexeme.data() + lexeme.size();
      auto [ptr, ec] = std::from_chars(first, last, ignored);
      if (ec != std::errc() || ptr != last) {
        throw ReadError("integer literal out of 64-bit range: " + lexeme, start);
      }
      return Token{TokenKind::Integer, std::move(lexeme), start};
    }
    return Token{TokenKind::Symbol, std::move(lexeme), start};
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_{1, 1};
};

std::string upcase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string decode_string(std::string_view lexeme) {
  std::string out;
  for (std::size_t k = 1; k + 1 < lexeme.size(); ++k) {
    if (lexeme[k] == '\\') ++k;
    out += lexeme[k];
  }
  return out;
}

Value atom_value(const Token& token) {
  switch (token.kind) {
    case TokenKind::Integer: {
      std::int64_t n = 0;
      const char* first = token.text.data() + (token.text.front() == '+' ? 1 : 0);
      std::from_chars(first, token.text.data() + token.text.size(), n);
      return Value::integer(n);
    }
    case TokenKind::String: return Value::string(decode_string(token.text));
    case TokenKind::Keyword:
      return Value::keyword(Keyword::intern(upcase(std::string_view(token.text).substr(1))));
    case TokenKind::Symbol: {
      std::string name = upcase(token.text);
      if (name == "NIL") return Value::nil();
      if (name == "T") return Value::t();
      return Value::symbol(Symbol::intern(name));
    }
    default: break;
  }
  return Value::nil();
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  std::vector<Form> run() {
    std::vector<Form> forms;
    while (peek().kind != TokenKind::Eof) {
      if (peek().kind == TokenKind::CloseParen) {
        throw ReadError("unbalanced ')'", peek().pos);
      }
      forms.push_back(form(0));
    }
    return forms;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  const Token& take() { return tokens_[i_++]; }

  Form form(std::size_t depth) {
    if (depth > kMaxNesting) throw ReadError("forms nested too deeply", peek().pos);
    const Token& token = take();
    switch (token.kind) {
      case TokenKind::OpenParen: {
        std::vector<Form> items;
        while (peek().kind != TokenKind::CloseParen) {
          if (peek().kind == TokenKind::Eof) throw ReadError("unterminated list", token.pos);
          items.push_back(form(depth + 1));
        }
        take();
        if (items.empty()) return Form::atom(Value::nil(), token.pos);
        return Form::list(std::move(items), token.pos);
      }
      case TokenKind::QuoteMark:
      case TokenKind::SharpQuote: {
        if (peek().kind == TokenKind::Eof || peek().kind == TokenKind::CloseParen) {
          throw ReadError("quote mark without a following form", token.pos);
        }
        const char* op = token.kind == TokenKind::QuoteMark ? "QUOTE" : "FUNCTION";
        std::vector<Form> items;
        items.push_back(Form::atom(Value::symbol(Symbol::intern(op)), token.pos));
        items.push_back(form(depth + 1));
        return Form::list(std::move(items), token.pos);
      }
      case TokenKind::CloseParen: throw ReadError("unbalanced ')'", token.pos);
      case TokenKind::Eof: throw ReadError("unexpected end of input", token.pos);
      default: return Form::atom(atom_value(token), token.pos);
    }
  }

  std::span<const Token> tokens_;
  std::size_t i_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

Form Form::atom(Value datum, SourcePos pos) {
  Form f;
  f.datum_ = std::move(datum);
  f.pos_ = pos;
  return f;
}

Form Form::list(std::vector<Form> items, SourcePos pos) {
  Form f;
  f.is_list_ = true;
  f.items_ = std::move(items);
  f.pos_ = pos;
  return f;
}

Value Form::to_value() const {
  if (!is_list_) return datum_;
  Value out;
  for (auto it = items_.rbegin(); it != items_.rend(); ++it) {
    out = make_cons(it->to_value(), std::move(out));
  }
  return out;
}

std::vector<Form> parse(std::span<const Token> tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::Eof) {
    throw ReadError("token stream does not end with eof", SourcePos{1, 1});
  }
  return Parser(tokens).run();
}

std::vector<Form> read_program(std::string_view text) {
  const auto tokens = tokenize(text);
  return parse(tokens);
}

}  // namespace clazy
