/*
 * SPDX-FileCopyrightText: 2026 The povmkit Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the povmkit shared library. All functions return a status
 * code; outputs are opaque handles or heap strings released with the
 * matching free function. On failure, povmkit_last_error() describes
 * the most recent failing call on the current thread.
 */

#ifndef POVMKIT_H
#define POVMKIT_H

#include <stddef.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#define POVMKIT_API __declspec(dllexport)
#elif defined(__GNUC__) || defined(__clang__)
#define POVMKIT_API __attribute__((visibility("default")))
#else
#define POVMKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the CLI maps them one-to-one onto exit codes. */
typedef enum povmkit_status {
    POVMKIT_OK = 0,
    POVMKIT_ERROR_INTERNAL = 1,      /* unexpected failure */
    POVMKIT_ERROR_INVALID_INPUT = 2, /* parse error or violated invariant */
    POVMKIT_ERROR_SEMANTIC = 3       /* operation ran; result is inconsistent */
} povmkit_status;

/* Static version string. */
POVMKIT_API const char* povmkit_version(void);

/* Message for the most recent failing call on this thread; static
 * storage, valid until the next failing call. */
POVMKIT_API const char* povmkit_last_error(void);

/* Frees any string returned through a char** out parameter. */
POVMKIT_API void povmkit_string_free(char* s);

/* ---- fiducial vector sets (opaque) ---------------------------------- */

typedef struct povmkit_vector_set povmkit_vector_set;

/* Parses a {"kind":"vector_set",...} document. */
POVMKIT_API povmkit_status povmkit_vector_set_from_json(const char* json_text,
                                                        povmkit_vector_set** out);

/* Builds a catalog entry by name; param is the polygon vertex count and
 * must be negative for entries that take no parameter. */
POVMKIT_API povmkit_status povmkit_vector_set_builtin(const char* name, int param,
                                                      povmkit_vector_set** out);

POVMKIT_API void povmkit_vector_set_free(povmkit_vector_set* set);

POVMKIT_API size_t povmkit_vector_set_size(const povmkit_vector_set* set);

POVMKIT_API povmkit_status povmkit_vector_set_to_json(const povmkit_vector_set* set,
                                                      char** out_json);

/* ---- analyses -------------------------------------------------------- */

/* Admissible-harmonic report for a vector set. tol <= 0 selects the
 * default threshold for the set size. as_json selects the JSON encoding
 * over the plain-text table. */
POVMKIT_API povmkit_status povmkit_analyze(const povmkit_vector_set* set, int l_max, double tol,
                                           int as_json, char** out_report);

/* Five-row admissibility table for the platonic vertex sets. */
POVMKIT_API povmkit_status povmkit_platonic_table(int l_max, int as_json, char** out_report);

/* ---- operator files --------------------------------------------------- */

/* Expands an effect (matrix JSON) over projector extreme points. */
POVMKIT_API povmkit_status povmkit_decompose(const char* effect_json, int as_json,
                                             char** out_report);

/* Validates a {"kind":"povm",...} document. */
POVMKIT_API povmkit_status povmkit_validate_povm(const char* povm_json, int as_json,
                                                 char** out_report);

/* Reconstructs a density operator from a {"kind":"frame_samples",...}
 * document. On success writes the matrix JSON of the operator and a
 * short text diagnostic (trace and eigenvalue summary). Returns
 * POVMKIT_ERROR_SEMANTIC when the samples are inconsistent with every
 * density operator; the diagnostics are then in povmkit_last_error(). */
POVMKIT_API povmkit_status povmkit_reconstruct(const char* samples_json, char** out_density_json,
                                               char** out_diagnostics);

#ifdef __cplusplus
}
#endif

#endif /* POVMKIT_H */
