// Command-line front end: REPL, script runner, and one-shot evaluator.
// Talks to the interpreter only through the C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "clazy/clazy.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitIo = 2;
constexpr int kExitStepLimit = 3;

constexpr const char* kPrompt = "clz> ";

int exit_code(clazy_status status) {
  switch (status) {
    case CLAZY_OK: return kExitOk;
    case CLAZY_ERROR_STEP_LIMIT: return kExitStepLimit;
    case CLAZY_ERROR_IO: return kExitIo;
    default: return kExitError;
  }
}

struct Handle {
  clazy_interp* ptr = nullptr;
  ~Handle() { clazy_destroy(ptr); }
};

int run_file(clazy_interp* interp, const std::string& path) {
  clazy_status status = clazy_load_file(interp, path.c_str(), nullptr);
  if (status != CLAZY_OK) std::cerr << clazy_last_error_diagnostic(interp) << '\n';
  return exit_code(status);
}

int run_eval(clazy_interp* interp, const std::string& source) {
  char* result = nullptr;
  clazy_status status = clazy_eval_string(interp, source.c_str(), "<eval>", &result);
  if (status != CLAZY_OK) {
    std::cerr << clazy_last_error_diagnostic(interp) << '\n';
    return exit_code(status);
  }
  std::cout << result << '\n';
  clazy_free_string(result);
  return kExitOk;
}

int run_repl(clazy_interp* interp) {
  auto echo = [](const char* printed, void*) { std::cout << printed << '\n' << std::flush; };
  std::string line;
  while (true) {
    std::cout << kPrompt << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (clazy_eval_each(interp, line.c_str(), "<repl>", echo, nullptr) != CLAZY_OK) {
      std::cerr << clazy_last_error_diagnostic(interp) << '\n' << std::flush;
    }
  }
  std::cout << '\n';
  if (std::cin.bad()) {
    std::cerr << "io-error: failed reading standard input\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clazy: a small Lisp with lazy calling"};
  bool memoize = false;
  std::optional<std::uint64_t> step_limit;
  std::optional<std::uint32_t> recursion_limit;
  std::string prelude;
  std::string eval_source;
  std::string file;

  app.add_flag("--memoize", memoize, "Memoize thunks (call-by-need instead of call-by-name)");
  app.add_option("--step-limit", step_limit, "Evaluation steps allowed per top-level form")
      ->check(CLI::PositiveNumber);
  app.add_option("--recursion-limit", recursion_limit, "Maximum evaluation nesting depth")
      ->check(CLI::PositiveNumber);
  app.add_option("--prelude", prelude, "Load this prelude instead of the built-in one")
      ->check(CLI::ExistingFile);
  auto* eval_opt = app.add_option("--eval", eval_source, "Evaluate FORM and print its value");
  auto* file_opt = app.add_option("file", file, "Script to run");
  eval_opt->excludes(file_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIo;
  }

  clazy_config config;
  clazy_config_default(&config);
  config.memoize = memoize ? 1 : 0;
  if (step_limit) config.step_limit = *step_limit;
  if (recursion_limit) config.recursion_limit = *recursion_limit;
  if (!prelude.empty()) config.prelude_path = prelude.c_str();

  Handle handle;
  if (clazy_status status = clazy_create(&config, &handle.ptr); status != CLAZY_OK) {
    std::cerr << clazy_create_error_message() << '\n';
    return exit_code(status);
  }

  if (*eval_opt) return run_eval(handle.ptr, eval_source);
  if (*file_opt) return run_file(handle.ptr, file);
  return run_repl(handle.ptr);
}
