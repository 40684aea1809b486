#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clazy {

/// 1-based line and column of a lexeme. Columns count code points.
struct SourcePos {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class ErrorKind {
  Read,
  Io,
  UnboundSymbol,
  NotAFunction,
  ArityMismatch,
  UnknownKeywordArgument,
  OddKeywordArguments,
  Overflow,
  TypeError,
  EcaseNoMatch,
  LazyThroughStrict,
  NoLazyVersion,
  MalformedLambdaList,
  MalformedForm,
  RecursionLimit,
  Divergence,
  StepLimit,
};

/// Stable, lower-case name of an error kind as shown in diagnostics.
std::string_view kind_name(ErrorKind kind) noexcept;

/// Base of every error raised by the reader and the evaluator.
///
/// Errors are raised without a position and pick one up while unwinding
/// through the innermost form that has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourcePos> pos = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }
  const std::string& source() const noexcept { return source_; }

  void set_position_if_unknown(SourcePos pos) noexcept;
  void set_source_if_unknown(std::string_view source);

  /// `source:line:column: kind: message`, omitting what is unknown.
  std::string diagnostic() const;

 private:
  ErrorKind kind_;
  std::optional<SourcePos> pos_;
  std::string source_;
};

class ReadError : public Error {
 public:
  ReadError(const std::string& message, SourcePos pos)
      : Error(ErrorKind::Read, message, pos) {}
};

class EvalError : public Error {
 public:
  EvalError(ErrorKind kind, const std::string& message) : Error(kind, message) {}
};

/// Raised by `(diverge)`: the testable stand-in for a computation that never
/// returns.
class DivergenceError : public Error {
 public:
  DivergenceError() : Error(ErrorKind::Divergence, "diverging computation was evaluated") {}
};

class StepLimitExceeded : public Error {
 public:
  explicit StepLimitExceeded(std::uint64_t limit)
      : Error(ErrorKind::StepLimit,
              "step limit of " + std::to_string(limit) + " exceeded") {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorKind::Io, message) {}
};

}  // namespace clazy
