/* C interface to the clazy interpreter.
 *
 * Every function taking a clazy_interp* expects a handle from clazy_create.
 * Strings returned through char** are heap-allocated and released with
 * clazy_free_string. Strings returned as const char* are owned by the
 * handle and stay valid until the next call on it.
 */
#ifndef CLAZY_CLAZY_H
#define CLAZY_CLAZY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CLAZY_BUILDING)
#    define CLAZY_API __declspec(dllexport)
#  else
#    define CLAZY_API __declspec(dllimport)
#  endif
#else
#  define CLAZY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct clazy_interp clazy_interp;

typedef enum clazy_status {
  CLAZY_OK = 0,
  CLAZY_ERROR_READ = 1,
  CLAZY_ERROR_EVAL = 2,
  CLAZY_ERROR_DIVERGENCE = 3,
  CLAZY_ERROR_STEP_LIMIT = 4,
  CLAZY_ERROR_IO = 5,
  CLAZY_ERROR_INVALID_ARGUMENT = 6,
  CLAZY_ERROR_INTERNAL = 7
} clazy_status;

typedef struct clazy_config {
  int memoize;               /* nonzero: thunks memoize (call-by-need) */
  uint64_t step_limit;       /* per top-level form; 0 disables */
  uint32_t recursion_limit;  /* must be positive */
  int load_prelude;          /* nonzero: load the stream library */
  const char* prelude_path;  /* NULL: use the embedded prelude */
} clazy_config;

/* Called for every `print`. `text` is not NUL-terminated. */
typedef void (*clazy_output_fn)(const char* text, size_t length, void* user_data);

/* Called with the printed form of each top-level value. */
typedef void (*clazy_value_fn)(const char* printed, void* user_data);

CLAZY_API const char* clazy_version(void);
CLAZY_API const char* clazy_status_name(clazy_status status);

CLAZY_API void clazy_config_default(clazy_config* config);

/* On failure *out is NULL; the message is available from
 * clazy_create_error_message (thread-local). */
CLAZY_API clazy_status clazy_create(const clazy_config* config, clazy_interp** out);
CLAZY_API const char* clazy_create_error_message(void);
CLAZY_API void clazy_destroy(clazy_interp* interp);

/* NULL restores the default (stdout). */
CLAZY_API void clazy_set_output(clazy_interp* interp, clazy_output_fn fn, void* user_data);

/* Evaluates every top-level form in `source`. When `result` is non-NULL it
 * receives the printed last value ("NIL" when there are no forms) on
 * success and NULL otherwise. */
CLAZY_API clazy_status clazy_eval_string(clazy_interp* interp, const char* source,
                                         const char* source_name, char** result);

/* As clazy_eval_string, reporting every top-level value to `on_value`. */
CLAZY_API clazy_status clazy_eval_each(clazy_interp* interp, const char* source,
                                       const char* source_name, clazy_value_fn on_value,
                                       void* user_data);

CLAZY_API clazy_status clazy_load_file(clazy_interp* interp, const char* path, char** result);

CLAZY_API void clazy_free_string(char* s);

/* Details of the last failed call on `interp`; empty / 0 after success. */
CLAZY_API const char* clazy_last_error_kind(const clazy_interp* interp);
CLAZY_API const char* clazy_last_error_message(const clazy_interp* interp);
CLAZY_API const char* clazy_last_error_source(const clazy_interp* interp);
CLAZY_API int clazy_last_error_line(const clazy_interp* interp);
CLAZY_API int clazy_last_error_column(const clazy_interp* interp);
/* "source:line:column: kind: message" */
CLAZY_API const char* clazy_last_error_diagnostic(const clazy_interp* interp);

CLAZY_API uint64_t clazy_ticks(const clazy_interp* interp);
CLAZY_API uint64_t clazy_thunk_allocations(const clazy_interp* interp);
CLAZY_API void clazy_reset_thunk_allocations(clazy_interp* interp);

#ifdef __cplusplus
}
#endif

#endif /* CLAZY_CLAZY_H */
