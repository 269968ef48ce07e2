#ifndef MONOSITE_MONOSITE_H
#define MONOSITE_MONOSITE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MONOSITE_API __declspec(dllexport)
#else
#define MONOSITE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum monosite_status {
  MONOSITE_OK = 0,
  MONOSITE_ERR_INVALID_ARGUMENT = 1,
  MONOSITE_ERR_PARSE = 2,
  MONOSITE_ERR_FIELD = 3,
  MONOSITE_ERR_PRECONDITION = 4,
  MONOSITE_ERR_LIMIT = 5,
  MONOSITE_ERR_INTERNAL = 6
} monosite_status;

typedef struct monosite_context monosite_context;
typedef struct monosite_poly monosite_poly;

typedef struct monosite_run_config {
  const char* field;       /* "q", "p" or "p^m" */
  const char* ring;        /* "x,y", "x1,x2,x3", ... */
  unsigned max_total_degree;
  unsigned max_variables;
  uint64_t max_field_size;
  unsigned extension_sweep_cap; /* 0: automatic */
  unsigned jobs;
  uint64_t seed;
  const char* out;         /* NULL: no file */
  const char* sweep_field; /* NULL: same as field */
  int timing;
} monosite_run_config;

MONOSITE_API const char* monosite_version(void);

/* Details of the last failure on the calling thread. */
MONOSITE_API const char* monosite_last_error_kind(void);
MONOSITE_API const char* monosite_last_error_message(void);
/* Byte offset into the parsed text, or -1. */
MONOSITE_API int64_t monosite_last_error_location(void);

MONOSITE_API monosite_status monosite_context_create(const char* field, const char* ring, monosite_context** out);
MONOSITE_API void monosite_context_destroy(monosite_context* ctx);
MONOSITE_API monosite_status monosite_context_set_limits(monosite_context* ctx, unsigned max_total_degree,
                                                         unsigned max_variables, uint64_t max_field_size,
                                                         unsigned extension_sweep_cap);
MONOSITE_API monosite_status monosite_context_set_jobs(monosite_context* ctx, unsigned jobs);

MONOSITE_API monosite_status monosite_poly_parse(const monosite_context* ctx, const char* src, monosite_poly** out);
MONOSITE_API void monosite_poly_destroy(monosite_poly* p);
/* The string must be released with monosite_string_free. */
MONOSITE_API monosite_status monosite_poly_format(const monosite_poly* p, char** out);
/* -1 for the zero polynomial. */
MONOSITE_API monosite_status monosite_poly_degree(const monosite_poly* p, int* out);
MONOSITE_API monosite_status monosite_abs_irreducible(const monosite_context* ctx, const monosite_poly* p, int* out);

MONOSITE_API void monosite_run_config_init(monosite_run_config* cfg);
/* Runs a CLI command; *json_out holds the output document even when *exit_code != 0. */
MONOSITE_API monosite_status monosite_run(const monosite_run_config* cfg, const char* command, int argc,
                                          const char* const* argv, char** json_out, int* exit_code);

MONOSITE_API void monosite_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
