#ifndef CRYSTARR_H
#define CRYSTARR_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum CrystarrStatus {
  CrystarrStatus_Ok = 0,
  CrystarrStatus_NullPointer = 1,
  CrystarrStatus_InvalidUtf8 = 2,
  CrystarrStatus_InvalidInput = 3,
  CrystarrStatus_NotSimplicial = 4,
  CrystarrStatus_NotCrystallographic = 5,
  CrystarrStatus_UnknownCatalogEntry = 6,
  CrystarrStatus_OutOfRange = 7,
  CrystarrStatus_InternalError = 8,
} CrystarrStatus;

/**
 * Opaque handle to a validated root set.
 */
typedef struct CrystarrArrangement CrystarrArrangement;

/**
 * Opaque handle to a built Cartan scheme.
 */
typedef struct CrystarrScheme CrystarrScheme;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. Borrowed; do not
 * free. Valid until the next failing call.
 */
const char *crystarr_last_error_message(void);

/**
 * Parse a root set from the JSON schema
 * `{"rank": r, "positive_roots": [[...], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum CrystarrStatus crystarr_arrangement_from_json(const char *json,
                                                   struct CrystarrArrangement **out);

/**
 * Load a built-in catalog entry by name (e.g. "A2", "B3", "bad_2_1").
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum CrystarrStatus crystarr_arrangement_from_catalog(const char *name,
                                                      struct CrystarrArrangement **out);

/**
 * # Safety
 * `handle` must come from an arrangement constructor and not yet be freed.
 */
void crystarr_arrangement_free(struct CrystarrArrangement *handle);

/**
 * Number of chambers of the arrangement. Fails with `NotSimplicial`
 * when some chamber is not an open simplicial cone.
 *
 * # Safety
 * `handle` must be a live arrangement handle; `out` must be valid.
 */
enum CrystarrStatus crystarr_chamber_count(const struct CrystarrArrangement *handle,
                                           uintptr_t *out);

/**
 * Does the arrangement satisfy the crystallographic axiom?
 *
 * # Safety
 * `handle` must be a live arrangement handle; `out` must be valid.
 */
enum CrystarrStatus crystarr_is_crystallographic(const struct CrystarrArrangement *handle,
                                                 bool *out);

/**
 * Does the arrangement satisfy the additive axiom?
 *
 * # Safety
 * `handle` must be a live arrangement handle; `out` must be valid.
 */
enum CrystarrStatus crystarr_is_additive(const struct CrystarrArrangement *handle, bool *out);

/**
 * Chamber graph as a JSON document; free with `crystarr_string_free`.
 *
 * # Safety
 * `handle` must be a live arrangement handle; `out` must be valid.
 */
enum CrystarrStatus crystarr_chambers_json(const struct CrystarrArrangement *handle, char **out);

/**
 * Axiom reports (I) and (A) as a JSON document.
 *
 * # Safety
 * `handle` must be a live arrangement handle; `out` must be valid.
 */
enum CrystarrStatus crystarr_verify_json(const struct CrystarrArrangement *handle, char **out);

/**
 * Build the Cartan scheme anchored at `base_chamber`.
 *
 * # Safety
 * `handle` must be a live arrangement handle; `out` must be valid.
 */
enum CrystarrStatus crystarr_scheme_build(const struct CrystarrArrangement *handle,
                                          uintptr_t base_chamber,
                                          struct CrystarrScheme **out);

/**
 * # Safety
 * `handle` must come from `crystarr_scheme_build` and not yet be freed.
 */
void crystarr_scheme_free(struct CrystarrScheme *handle);

/**
 * Number of objects of the Weyl groupoid.
 *
 * # Safety
 * `handle` must be a live scheme handle; `out` must be valid.
 */
enum CrystarrStatus crystarr_scheme_object_count(const struct CrystarrScheme *handle,
                                                 uintptr_t *out);

/**
 * Scheme dump with verification flags as a JSON document.
 *
 * # Safety
 * `handle` must be a live scheme handle; `out` must be valid.
 */
enum CrystarrStatus crystarr_scheme_json(const struct CrystarrScheme *handle, char **out);

/**
 * Are the two arrangements equivalent under a linear automorphism?
 *
 * # Safety
 * Both handles must be live arrangement handles; `out` must be valid.
 */
enum CrystarrStatus crystarr_arrangements_equivalent(const struct CrystarrArrangement *a,
                                                     const struct CrystarrArrangement *b,
                                                     bool *out);

/**
 * Are the two Cartan schemes equivalent?
 *
 * # Safety
 * Both handles must be live scheme handles; `out` must be valid.
 */
enum CrystarrStatus crystarr_schemes_equivalent(const struct CrystarrScheme *a,
                                                const struct CrystarrScheme *b,
                                                bool *out);

/**
 * Release a string allocated by this library.
 *
 * # Safety
 * `s` must have been returned through a `char**` out-parameter of this
 * library and not yet freed.
 */
void crystarr_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CRYSTARR_H */
