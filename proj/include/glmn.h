#ifndef GLMN_H
#define GLMN_H

#include <stddef.h>
#include <stdint.h>

#if defined(GLMN_BUILDING)
#define GLMN_API __attribute__((visibility("default")))
#else
#define GLMN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct glmn_session glmn_session;
typedef struct glmn_report glmn_report;

typedef enum glmn_status {
  GLMN_OK = 0,
  GLMN_CHECK_FAILED = 1,  /* command ran, at least one check failed */
  GLMN_CONFIG_ERROR = 2,  /* bad command, malformed or inconsistent input */
  GLMN_INTERNAL_ERROR = 3
} glmn_status;

GLMN_API const char* glmn_version(void);

/* Number of subcommands and their names, index 0..count-1. */
GLMN_API size_t glmn_command_count(void);
GLMN_API const char* glmn_command_name(size_t index);

GLMN_API glmn_session* glmn_session_create(void);
GLMN_API void glmn_session_destroy(glmn_session* session);

/* Worker threads for partition sums; n >= 1. */
GLMN_API glmn_status glmn_session_set_threads(glmn_session* session, int n);
/* Seed for randomized runs; overrides "seed" in the config. */
GLMN_API glmn_status glmn_session_set_seed(glmn_session* session, uint64_t seed);

/* Runs `command` on a JSON config. On GLMN_OK or GLMN_CHECK_FAILED *out receives a report owned by
   the caller; otherwise *out is NULL and glmn_session_last_error describes the problem. */
GLMN_API glmn_status glmn_run(glmn_session* session, const char* command, const char* config_json,
                              glmn_report** out);

/* Message of the last failed call on this session, "" if none. Valid until the next call. */
GLMN_API const char* glmn_session_last_error(const glmn_session* session);

GLMN_API glmn_status glmn_session_memo_stats(const glmn_session* session, uint64_t* hits, uint64_t* misses,
                                             uint64_t* entries);
GLMN_API void glmn_session_clear_memo(glmn_session* session);

GLMN_API const char* glmn_report_json(const glmn_report* report);
GLMN_API const char* glmn_report_text(const glmn_report* report);
GLMN_API int glmn_report_passed(const glmn_report* report);
GLMN_API void glmn_report_destroy(glmn_report* report);

#ifdef __cplusplus
}
#endif

#endif
