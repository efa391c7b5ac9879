/*
 * cbcongr -- C API for the central binomial congruence verifier.
 *
 * The library evaluates both sides of a catalog of congruences for central
 * binomial coefficient sums (Lucas sequences, Fermat quotients, Bernoulli
 * numbers, truncated p-adic sums) over prime-power moduli and reports
 * pass/fail per instance.
 *
 * All functions returning cbc_status set a thread-local message retrievable
 * via cbc_last_error() on failure. Handles are opaque; free them with the
 * matching *_free function. Strings returned through out-parameters are
 * heap-allocated and must be released with cbc_string_free.
 */
#ifndef CBCONGR_H
#define CBCONGR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cbc_status {
  CBC_OK = 0,
  CBC_ERROR_INVALID_ARGUMENT = 1,
  CBC_ERROR_UNKNOWN_ID = 2,
  CBC_ERROR_DOMAIN = 3,
  CBC_ERROR_MATH = 4,
  CBC_ERROR_INTERNAL = 5
} cbc_status;

typedef struct cbc_config cbc_config;
typedef struct cbc_report cbc_report;

const char *cbc_version(void);
const char *cbc_last_error(void);

/* ---- registry ---------------------------------------------------------- */

size_t cbc_registry_count(void);
/* Pointers remain valid for the lifetime of the process. */
cbc_status cbc_registry_id(size_t index, const char **out_id);
cbc_status cbc_registry_description(size_t index, const char **out_text);
cbc_status cbc_registry_modulus(size_t index, const char **out_rule);
cbc_status cbc_registry_domain(size_t index, const char **out_text);
cbc_status cbc_registry_is_conjecture(size_t index, int *out_flag);

/* ---- verification runs ------------------------------------------------- */

cbc_config *cbc_config_new(void);
void cbc_config_free(cbc_config *config);
/* Repeatable; no calls means the whole registry. Bare ids expand to their
 * lettered sub-entries ("1.17" -> "1.17a", "1.17b"). */
cbc_status cbc_config_add_id(cbc_config *config, const char *id);
cbc_status cbc_config_set_prime_range(cbc_config *config, uint64_t pmin, uint64_t pmax);
cbc_status cbc_config_set_amax(cbc_config *config, uint32_t amax);
/* mode: "all" or "sample" */
cbc_status cbc_config_set_dmode(cbc_config *config, const char *mode);
/* Repeatable; no calls means the default sweep -6..-1, 1..12. */
cbc_status cbc_config_add_m(cbc_config *config, int64_t m);
cbc_status cbc_config_set_seed(cbc_config *config, uint64_t seed);
/* 0 means hardware concurrency. Never changes results, only scheduling. */
cbc_status cbc_config_set_jobs(cbc_config *config, uint32_t jobs);

cbc_status cbc_run_verify(const cbc_config *config, cbc_report **out_report);
cbc_status cbc_run_identities(uint32_t nmax, uint32_t dmax, uint32_t cor_nmax,
                              uint32_t cor_dmax, uint32_t lemma_nmax,
                              uint32_t staver_nmax, uint32_t jobs,
                              cbc_report **out_report);
cbc_status cbc_run_conjecture(uint64_t pmax, uint32_t amax, uint32_t jobs,
                              cbc_report **out_report);
cbc_status cbc_run_wss_scan(uint64_t pmax, cbc_report **out_report);

/* ---- reports ------------------------------------------------------------ */

void cbc_report_free(cbc_report *report);
/* format: "json", "csv" or "text". */
cbc_status cbc_report_render(const cbc_report *report, const char *format,
                             char **out_text);
void cbc_string_free(char *text);

uint64_t cbc_report_instances(const cbc_report *report);
uint64_t cbc_report_passes(const cbc_report *report);
uint64_t cbc_report_failures(const cbc_report *report);
uint64_t cbc_report_errors(const cbc_report *report);
uint64_t cbc_report_conjecture_fails(const cbc_report *report);
/* Milliseconds of wall time for the run (diagnostic; not serialized). */
uint64_t cbc_report_elapsed_ms(const cbc_report *report);
/* 0 = clean, 1 = non-conjecture failures or errors present. */
int cbc_report_exit_code(const cbc_report *report);

#ifdef __cplusplus
}
#endif

#endif /* CBCONGR_H */
