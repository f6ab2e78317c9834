#ifndef LEIBNIZ_LEIBNIZ_H
#define LEIBNIZ_LEIBNIZ_H

/* C interface to the leibniz library. Every function returns an lb_status;
 * on failure lb_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * lb_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LB_API __declspec(dllexport)
#else
#define LB_API __attribute__((visibility("default")))
#endif

typedef enum lb_status {
  LB_OK = 0,
  LB_ERR_NULL_ARGUMENT = 1,
  LB_ERR_PARSE = 2,
  LB_ERR_INVALID_ARGUMENT = 3,
  LB_ERR_UNKNOWN_NAME = 4,
  LB_ERR_DIMENSION_MISMATCH = 5,
  LB_ERR_DIVISION_BY_ZERO = 6,
  LB_ERR_POLE_AT_ZERO = 7,
  LB_ERR_NOT_NILPOTENT = 8,
  LB_ERR_PRECONDITION = 9,
  LB_ERR_SINGULAR = 10,
  LB_ERR_SEARCH_EXHAUSTED = 11,
  LB_ERR_NOT_REPRESENTABLE = 12,
  LB_ERR_INTERNAL = 13,
  LB_ERR_OUT_OF_MEMORY = 14
} lb_status;

typedef struct lb_law lb_law;
typedef struct lb_family lb_family;

#define LB_DEFAULT_SEED UINT64_C(20070617)

LB_API const char* lb_version(void);
LB_API const char* lb_status_name(lb_status status);
/* Message for the last failure on this thread; empty after a success. */
LB_API const char* lb_last_error(void);
/* 1-based position of the last parse error, 0 when not a parse error. */
LB_API size_t lb_last_error_line(void);
LB_API size_t lb_last_error_column(void);

LB_API void lb_string_free(char* s);

/* Laws. `names`/`values` bind parameters declared in the text; at most one
 * parameter may stay unbound and the law is then over Q(i)(parameter). */
LB_API lb_status lb_law_parse(const char* text, const char* const* names, const char* const* values, size_t count,
                              lb_law** out);
/* Catalog law; `param` is the field parameter (mu2) or NULL, `dim` is used by
 * null_filiform only (pass 0 otherwise). */
LB_API lb_status lb_law_from_catalog(const char* name, const char* param, size_t dim, lb_law** out);
/* Perturbation direction by name (phi2, phi3, phi4, phi5, phi5_corrected). */
LB_API lb_status lb_direction_from_catalog(const char* name, lb_law** out);
LB_API void lb_law_free(lb_law* law);

LB_API size_t lb_law_dim(const lb_law* law);
/* 1 when the law has a free parameter. */
LB_API int lb_law_is_formal(const lb_law* law);
/* a_{ij}^k with 1-based indices, as text. */
LB_API lb_status lb_law_constant(const lb_law* law, size_t i, size_t j, size_t k, char** out);
LB_API lb_status lb_law_print(const lb_law* law, char** out);
LB_API lb_status lb_law_check_leibniz(const lb_law* law, int* holds);

/* Families of basis changes in the parameter t. */
LB_API lb_status lb_family_parse(const char* text, lb_family** out);
LB_API lb_status lb_family_from_catalog(const char* name, lb_family** out);
LB_API void lb_family_free(lb_family* family);
LB_API lb_status lb_family_print(const lb_family* family, char** out);

/* Reports. `ok` receives 0 when the report records a failed check. */
LB_API lb_status lb_report_check(const lb_law* law, int* ok, char** out);
LB_API lb_status lb_report_invariants(const lb_law* law, uint64_t seed, char** out);
LB_API lb_status lb_report_classify(const lb_law* law, uint64_t seed, char** out);
LB_API lb_status lb_report_contract(const lb_law* law, const lb_family* family, uint64_t seed, int* ok, char** out);
LB_API lb_status lb_report_perturb(const lb_law* law, const lb_law* direction, uint64_t seed, int* ok, char** out);
LB_API lb_status lb_report_catalog(char** out);

/* Degeneration graph over the named catalog ("leibn3") as DOT. `b` picks the
 * nonzero mu2 sample (NULL for 1). */
LB_API lb_status lb_graph_dot(const char* catalog, const char* b, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif
