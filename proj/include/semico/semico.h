#ifndef SEMICO_SEMICO_H
#define SEMICO_SEMICO_H

#include <stddef.h>
#include <stdint.h>

#if defined(SEMICO_BUILDING_LIBRARY)
#define SEMICO_API __attribute__((visibility("default")))
#else
#define SEMICO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum semico_status {
  SEMICO_OK = 0,
  SEMICO_ERR_PARSE = 1,
  SEMICO_ERR_INVALID = 2,
  SEMICO_ERR_BUDGET = 3,
  SEMICO_ERR_MISMATCH = 4,
  SEMICO_ERR_UNSUPPORTED = 5,
  SEMICO_ERR_ARGUMENT = 6,
  SEMICO_ERR_INTERNAL = 7
} semico_status;

typedef struct semico_input semico_input;
typedef struct semico_report semico_report;

SEMICO_API const char* semico_version(void);
SEMICO_API const char* semico_status_name(semico_status status);

/* Message of the last failing call on this thread; never NULL. */
SEMICO_API const char* semico_last_error(void);

/* 0 restores the default (SEMICO_THREADS, then hardware concurrency). */
SEMICO_API semico_status semico_set_threads(unsigned threads);

/* Inputs are JSON documents: a monoid, a carrier, a semimodule, an
   extension, or cyclic data. */
SEMICO_API semico_status semico_input_parse(const char* text, semico_input** out);
SEMICO_API semico_status semico_input_load(const char* path, semico_input** out);
/* "monoid", "carrier", "semimodule", "extension" or "cyclic". */
SEMICO_API const char* semico_input_kind(const semico_input* input);
SEMICO_API void semico_input_free(semico_input* input);

/* Axiom checks; a failing check is a report with "valid": false, not an
   error. */
SEMICO_API semico_status semico_validate(const semico_input* input, semico_report** out);

/* H^n and script H^n for n_lo <= n <= n_hi. */
SEMICO_API semico_status semico_cohomology(const semico_input* input, unsigned n_lo, unsigned n_hi,
                                           uint64_t budget, semico_report** out);

/* script H^n -> H^n -> H^n(M, K(A)). */
SEMICO_API semico_status semico_diagram(const semico_input* input, unsigned n, uint64_t budget,
                                        semico_report** out);

/* Extensions up to congruence and up to similarity. */
SEMICO_API semico_status semico_classify(const semico_input* input, int with_oracle, uint64_t budget,
                                         semico_report** out);

/* K(A), U(A) and cancellativity of a carrier or of a semimodule's carrier. */
SEMICO_API semico_status semico_completion(const semico_input* input, semico_report** out);

/* Closed-form cohomology of cyclic data or of a semimodule over C_m. */
SEMICO_API semico_status semico_cyclic(const semico_input* input, unsigned n_lo, unsigned n_hi,
                                       uint64_t budget, semico_report** out);

/* The D(m) + N + Z/m family: A, U(A) and K(A) side by side. */
SEMICO_API semico_status semico_cyclic_separation(int64_t m, unsigned n_lo, unsigned n_hi,
                                                  semico_report** out);

/* Strings are owned by the report and live until semico_report_free. */
SEMICO_API const char* semico_report_json(const semico_report* report);
SEMICO_API const char* semico_report_text(const semico_report* report);
/* 1 when every check in the report held. */
SEMICO_API int semico_report_ok(const semico_report* report);
SEMICO_API void semico_report_free(semico_report* report);

#ifdef __cplusplus
}
#endif

#endif
