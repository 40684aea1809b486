#include "clazy/error.hpp"

namespace clazy {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Read: return "read-error";
    case ErrorKind::Io: return "io-error";
    case ErrorKind::UnboundSymbol: return "unbound-symbol";
    case ErrorKind::NotAFunction: return "not-a-function";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::UnknownKeywordArgument: return "unknown-keyword-argument";
    case ErrorKind::OddKeywordArguments: return "odd-keyword-arguments";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::TypeError: return "type-error";
    case ErrorKind::EcaseNoMatch: return "ecase-no-match";
    case ErrorKind::LazyThroughStrict: return "lazy-through-strict";
    case ErrorKind::NoLazyVersion: return "no-lazy-version";
    case ErrorKind::MalformedLambdaList: return "malformed-lambda-list";
    case ErrorKind::MalformedForm: return "malformed-form";
    case ErrorKind::RecursionLimit: return "recursion-limit";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::StepLimit: return "step-limit-exceeded";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<SourcePos> pos)
    : std::runtime_error(message), kind_(kind), pos_(pos) {}

void Error::set_position_if_unknown(SourcePos pos) noexcept {
  if (!pos_ && pos.line > 0) pos_ = pos;
}

void Error::set_source_if_unknown(std::string_view source) {
  if (source_.empty()) source_ = source;
}

std::string Error::diagnostic() const {
  std::string out;
  if (!source_.empty()) out += source_ + ":";
  if (pos_) out += std::to_string(pos_->line) + ":" + std::to_string(pos_->column) + ":";
  if (!out.empty()) out += " ";
  out += kind_name(kind_);
  out += ": ";
  out += what();
  return out;
}

}  // namespace clazy
