#include "clazy/clazy.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "clazy/interpreter.hpp"
#include "clazy/printer.hpp"

struct clazy_interp {
  std::unique_ptr<clazy::Interpreter> interp;
  std::string error_kind;
  std::string error_message;
  std::string error_source;
  std::string error_diagnostic;
  int error_line = 0;
  int error_column = 0;
};

namespace {

thread_local std::string create_error;

clazy_status status_of(clazy::ErrorKind kind) {
  switch (kind) {
    case clazy::ErrorKind::Read: return CLAZY_ERROR_READ;
    case clazy::ErrorKind::Io: return CLAZY_ERROR_IO;
    case clazy::ErrorKind::Divergence: return CLAZY_ERROR_DIVERGENCE;
    case clazy::ErrorKind::StepLimit: return CLAZY_ERROR_STEP_LIMIT;
    default: return CLAZY_ERROR_EVAL;
  }
}

void clear_error(clazy_interp* h) {
  h->error_kind.clear();
  h->error_message.clear();
  h->error_source.clear();
  h->error_diagnostic.clear();
  h->error_line = 0;
  h->error_column = 0;
}

clazy_status record(clazy_interp* h, const clazy::Error& e) {
  h->error_kind = clazy::kind_name(e.kind());
  h->error_message = e.what();
  h->error_source = e.source();
  h->error_diagnostic = e.diagnostic();
  h->error_line = e.position() ? e.position()->line : 0;
  h->error_column = e.position() ? e.position()->column : 0;
  return status_of(e.kind());
}

clazy_status record_internal(clazy_interp* h, const char* what) {
  clear_error(h);
  h->error_kind = "internal-error";
  h->error_message = what;
  h->error_diagnostic = std::string("internal-error: ") + what;
  return CLAZY_ERROR_INTERNAL;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Body>
clazy_status guarded(clazy_interp* h, Body&& body) {
  if (h == nullptr) return CLAZY_ERROR_INVALID_ARGUMENT;
  clear_error(h);
  try {
    body();
    return CLAZY_OK;
  } catch (const clazy::Error& e) {
    return record(h, e);
  } catch (const std::bad_alloc&) {
    return record_internal(h, "out of memory");
  } catch (const std::exception& e) {
    return record_internal(h, e.what());
  }
}

}  // namespace

extern "C" {

const char* clazy_version(void) { return "1.0.0"; }

const char* clazy_status_name(clazy_status status) {
  switch (status) {
    case CLAZY_OK: return "ok";
    case CLAZY_ERROR_READ: return "read-error";
    case CLAZY_ERROR_EVAL: return "eval-error";
    case CLAZY_ERROR_DIVERGENCE: return "divergence";
    case CLAZY_ERROR_STEP_LIMIT: return "step-limit-exceeded";
    case CLAZY_ERROR_IO: return "io-error";
    case CLAZY_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case CLAZY_ERROR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

void clazy_config_default(clazy_config* config) {
  if (config == nullptr) return;
  const clazy::Config defaults;
  config->memoize = defaults.memoize ? 1 : 0;
  config->step_limit = defaults.step_limit.value_or(0);
  config->recursion_limit = defaults.recursion_limit;
  config->load_prelude = defaults.load_prelude ? 1 : 0;
  config->prelude_path = nullptr;
}

clazy_status clazy_create(const clazy_config* config, clazy_interp** out) {
  create_error.clear();
  if (out == nullptr) return CLAZY_ERROR_INVALID_ARGUMENT;
  *out = nullptr;
  clazy_config c;
  clazy_config_default(&c);
  if (config != nullptr) c = *config;
  if (c.recursion_limit == 0) {
    create_error = "recursion_limit must be positive";
    return CLAZY_ERROR_INVALID_ARGUMENT;
  }
  clazy::Config cfg;
  cfg.memoize = c.memoize != 0;
  cfg.step_limit = c.step_limit == 0 ? std::nullopt : std::optional<std::uint64_t>(c.step_limit);
  cfg.recursion_limit = c.recursion_limit;
  cfg.load_prelude = c.load_prelude != 0;
  if (c.prelude_path != nullptr) cfg.prelude_path = c.prelude_path;
  try {
    auto handle = std::make_unique<clazy_interp>();
    handle->interp = std::make_unique<clazy::Interpreter>(std::move(cfg));
    *out = handle.release();
    return CLAZY_OK;
  } catch (const clazy::Error& e) {
    create_error = e.diagnostic();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    create_error = e.what();
    return CLAZY_ERROR_INTERNAL;
  }
}

const char* clazy_create_error_message(void) { return create_error.c_str(); }

void clazy_destroy(clazy_interp* interp) { delete interp; }

void clazy_set_output(clazy_interp* interp, clazy_output_fn fn, void* user_data) {
  if (interp == nullptr) return;
  if (fn == nullptr) {
    interp->interp->set_output([](std::string_view text) {
      std::fwrite(text.data(), 1, text.size(), stdout);
      std::fflush(stdout);
    });
    return;
  }
  interp->interp->set_output(
      [fn, user_data](std::string_view text) { fn(text.data(), text.size(), user_data); });
}

clazy_status clazy_eval_string(clazy_interp* interp, const char* source, const char* source_name,
                               char** result) {
  if (result != nullptr) *result = nullptr;
  if (source == nullptr) return CLAZY_ERROR_INVALID_ARGUMENT;
  std::string printed;
  clazy_status status = guarded(interp, [&] {
    printed = clazy::print_value(
        interp->interp->eval_string(source, source_name ? source_name : "<string>"));
  });
  if (status == CLAZY_OK && result != nullptr) *result = duplicate(printed);
  return status;
}

clazy_status clazy_eval_each(clazy_interp* interp, const char* source, const char* source_name,
                             clazy_value_fn on_value, void* user_data) {
  if (source == nullptr) return CLAZY_ERROR_INVALID_ARGUMENT;
  return guarded(interp, [&] {
    interp->interp->eval_each(source, source_name ? source_name : "<string>",
                              [&](const clazy::Value& v) {
                                if (on_value != nullptr) {
                                  on_value(clazy::print_value(v).c_str(), user_data);
                                }
                              });
  });
}

clazy_status clazy_load_file(clazy_interp* interp, const char* path, char** result) {
  if (result != nullptr) *result = nullptr;
  if (path == nullptr) return CLAZY_ERROR_INVALID_ARGUMENT;
  std::string printed;
  clazy_status status =
      guarded(interp, [&] { printed = clazy::print_value(interp->interp->load_file(path)); });
  if (status == CLAZY_OK && result != nullptr) *result = duplicate(printed);
  return status;
}

void clazy_free_string(char* s) { std::free(s); }

const char* clazy_last_error_kind(const clazy_interp* interp) {
  return interp ? interp->error_kind.c_str() : "";
}

const char* clazy_last_error_message(const clazy_interp* interp) {
  return interp ? interp->error_message.c_str() : "";
}

const char* clazy_last_error_source(const clazy_interp* interp) {
  return interp ? interp->error_source.c_str() : "";
}

int clazy_last_error_line(const clazy_interp* interp) { return interp ? interp->error_line : 0; }

int clazy_last_error_column(const clazy_interp* interp) {
  return interp ? interp->error_column : 0;
}

const char* clazy_last_error_diagnostic(const clazy_interp* interp) {
  return interp ? interp->error_diagnostic.c_str() : "";
}

uint64_t clazy_ticks(const clazy_interp* interp) { return interp ? interp->interp->ticks() : 0; }

uint64_t clazy_thunk_allocations(const clazy_interp* interp) {
  return interp ? interp->interp->thunk_allocations() : 0;
}

void clazy_reset_thunk_allocations(clazy_interp* interp) {
  if (interp != nullptr) interp->interp->reset_thunk_allocations();
}

}  // extern "C"
