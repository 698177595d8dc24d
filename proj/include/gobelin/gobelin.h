/* C interface to the gobelin library. All strings are UTF-8. Functions that
 * fail return a status and leave a message in gob_last_error() (per thread).
 * Strings returned through char** are owned by the caller and released with
 * gob_string_free. */
#ifndef GOBELIN_GOBELIN_H
#define GOBELIN_GOBELIN_H

#include <stddef.h>

#if defined(_WIN32)
#define GOB_API __declspec(dllexport)
#else
#define GOB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gob_status {
  GOB_OK = 0,
  GOB_ERR_INPUT,
  GOB_ERR_NOT_ZERO_DIMENSIONAL,
  GOB_ERR_NOT_GORENSTEIN,
  GOB_ERR_UNIT_ELEMENT,
  GOB_ERR_SYZYGY_VIOLATION,
  GOB_ERR_COMPLEX_BROKEN,
  GOB_ERR_NOT_CHAIN_COMPATIBLE,
  GOB_ERR_NOT_A_CYCLE,
  GOB_ERR_NOT_STABILIZED,
  GOB_ERR_INTERNAL
} gob_status;

typedef enum gob_complex { GOB_G1 = 1, GOB_G2 = 2 } gob_complex;

typedef struct gob_scenario gob_scenario;

typedef struct gob_diagnostics {
  size_t mu, nu, nu1, nu2, tau1_dim, tau2_dim;
} gob_diagnostics;

GOB_API const char* gob_version(void);
GOB_API const char* gob_status_name(gob_status status);

/* Message of the last failure on this thread; "" after a success. Line and
 * column are 1-based and 0 when the failure has no position. */
GOB_API const char* gob_last_error(void);
GOB_API size_t gob_last_error_line(void);
GOB_API size_t gob_last_error_column(void);

GOB_API gob_status gob_scenario_parse(const char* text, const char* name, gob_scenario** out);
GOB_API gob_status gob_scenario_load(const char* path, gob_scenario** out);
GOB_API void gob_scenario_free(gob_scenario* sc);
/* Scenario in file syntax, including annotations. */
GOB_API gob_status gob_scenario_text(const gob_scenario* sc, char** out);
GOB_API gob_status gob_scenario_name(const gob_scenario* sc, char** out);
GOB_API gob_status gob_scenario_set_max_degree(gob_scenario* sc, size_t max_degree);

/* Builds the algebra and checks every hypothesis. */
GOB_API gob_status gob_check(gob_scenario* sc, gob_diagnostics* out);

/* dim H_j (or H^j when dual != 0) for 0 <= j <= max_degree. Writes at most
 * capacity values; *count receives max_degree + 1. */
GOB_API gob_status gob_hyper_dims(gob_scenario* sc, gob_complex which, int dual, size_t* dims, size_t capacity,
                                  size_t* count);

/* {"L":[..],"F":[..],"Lp":[..],"Fp":[..],"stab":{..},"basis":{..}} */
GOB_API gob_status gob_flags_json(gob_scenario* sc, char** out);

/* Runs one suite by name, or every suite when suite is NULL or "all", and
 * writes the full report. *all_pass is 1 iff every check passed. */
GOB_API gob_status gob_verify_json(gob_scenario* sc, const char* suite, int* all_pass, char** out);

/* Generates a family from a base scenario. params_json may hold "tau2"
 * (array of two polynomials), "g" and "homologous" (count). The result is a
 * JSON array of {"name", "text"}. */
GOB_API gob_status gob_family_json(const char* family, const gob_scenario* base, const char* params_json, char** out);

GOB_API void gob_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
