#ifndef EQRES_EQRES_H
#define EQRES_EQRES_H

/* C interface to the eqres library.
 *
 * Every function returning eqres_status leaves a human-readable message for
 * the calling thread in eqres_last_error() when it fails. Strings returned
 * through char** out-parameters are owned by the caller and must be released
 * with eqres_string_free. */

#include <stdint.h>

#if defined(_WIN32)
#define EQRES_API __declspec(dllexport)
#else
#define EQRES_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eqres_status {
  EQRES_OK = 0,
  EQRES_ERR_PARSE = 1,
  EQRES_ERR_INVALID_ARGUMENT = 2,
  EQRES_ERR_NOT_EQUIVARIANT = 3,
  EQRES_ERR_NOT_DIVISIBLE = 4,
  EQRES_ERR_MISMATCH = 5,
  EQRES_ERR_INTERNAL = 6
} eqres_status;

typedef enum eqres_format { EQRES_FORMAT_TEXT = 0, EQRES_FORMAT_JSON = 1 } eqres_format;

typedef enum eqres_verify_mode {
  EQRES_VERIFY_AUTO = 0,
  EQRES_VERIFY_SYMBOLIC = 1,
  EQRES_VERIFY_SAMPLED = 2
} eqres_verify_mode;

typedef struct eqres_verify_options {
  eqres_verify_mode mode;
  int samples;   /* parameter points in sampled mode */
  uint64_t seed; /* seed for the sampled points */
  int jobs;      /* worker threads for the per-partition resultants */
} eqres_verify_options;

/* A parsed polynomial system (header line plus n polynomials). */
typedef struct eqres_system eqres_system;
/* A symmetric form sum c_lambda e_lambda. */
typedef struct eqres_symmetric eqres_symmetric;

EQRES_API const char* eqres_last_error(void);
EQRES_API const char* eqres_status_name(eqres_status status);
EQRES_API void eqres_string_free(char* s);

EQRES_API eqres_status eqres_system_parse(const char* text, eqres_system** out);
EQRES_API void eqres_system_free(eqres_system* system);
EQRES_API int eqres_system_n(const eqres_system* system);
EQRES_API int eqres_system_d(const eqres_system* system);
EQRES_API eqres_status eqres_system_print(const eqres_system* system, char** out);
/* *equivariant is 1 or 0; *detail describes the first failing transposition
 * (may be NULL). */
EQRES_API eqres_status eqres_system_check_equivariance(const eqres_system* system, int* equivariant, char** detail);

/* Direct Macaulay resultant of the system. */
EQRES_API eqres_status eqres_resultant(const eqres_system* system, eqres_format format, char** out);
/* Factored resultant of an equivariant system. */
EQRES_API eqres_status eqres_decompose(const eqres_system* system, eqres_format format, int jobs, char** out);

EQRES_API eqres_verify_options eqres_verify_options_default(void);
/* Compares the expanded decomposition with the direct resultant. A mismatch
 * is reported through *equal = 0 with status EQRES_OK. */
EQRES_API eqres_status eqres_verify(const eqres_system* system, const eqres_verify_options* options,
                                    eqres_format format, int* equal, char** out);

/* coeffs: "generic", an inline list such as "c3=1,c21=-1,c111=0" or
 * "c[2,1]=2", or a path to a file holding such a list. Omitted basis
 * elements get coefficient 0. Values may use the generic symbols c3, c21, ... */
EQRES_API eqres_status eqres_symmetric_create(int n, int d, const char* coeffs, eqres_symmetric** out);
EQRES_API void eqres_symmetric_free(eqres_symmetric* f);
EQRES_API eqres_status eqres_symmetric_print(const eqres_symmetric* f, char** out);

/* Factored d^a Disc, plus the exact value of Disc when every coefficient is
 * an integer. */
EQRES_API eqres_status eqres_discriminant(const eqres_symmetric* f, eqres_format format, int jobs, char** out);
/* Disc computed directly from the resultant of the partials. */
EQRES_API eqres_status eqres_discriminant_direct(const eqres_symmetric* f, char** out);

/* Built-in identity checks; *passed is 1 when all of them hold. */
EQRES_API eqres_status eqres_selfcheck(eqres_format format, int* passed, char** out);

#ifdef __cplusplus
}
#endif

#endif
