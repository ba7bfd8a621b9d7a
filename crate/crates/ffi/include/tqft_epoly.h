#ifndef TQFT_EPOLY_H
#define TQFT_EPOLY_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes shared by all entry points.
 */
typedef enum TqftStatus {
  TQFT_STATUS_OK = 0,
  TQFT_STATUS_NULL_POINTER = 1,
  TQFT_STATUS_INVALID_UTF8 = 2,
  TQFT_STATUS_PARSE = 3,
  TQFT_STATUS_INVALID_INPUT = 4,
  TQFT_STATUS_INVALID_GROUP = 5,
  TQFT_STATUS_INVALID_DATUM = 6,
  TQFT_STATUS_NON_EXACT_DIVISION = 7,
  TQFT_STATUS_BUDGET_EXCEEDED = 8,
  TQFT_STATUS_PANIC = 9,
} TqftStatus;

/**
 * Opaque tube datum.
 */
typedef struct TqftDatum TqftDatum;

/**
 * Opaque finite group.
 */
typedef struct TqftGroup TqftGroup;

/**
 * Opaque Laurent polynomial.
 */
typedef struct TqftPoly TqftPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty if none.
 */
const char *tqft_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void tqft_string_free(char *s);

/**
 * Parses text such as `"q^3 - q^2"` or `"u^2*v - 3"`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum TqftStatus tqft_poly_parse(const char *text, struct TqftPoly **out);

/**
 * Renders a polynomial, in q when possible unless `force_uv` is set.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum TqftStatus tqft_poly_to_string(const struct TqftPoly *p, bool force_uv, char **out);

/**
 * Exact quotient `a / b`; fails with `NonExactDivision` when `b` does not divide `a`.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TqftStatus tqft_poly_exact_div(const struct TqftPoly *a,
                                    const struct TqftPoly *b,
                                    struct TqftPoly **out);

/**
 * # Safety
 * `a`, `b` must be live handles.
 */
bool tqft_poly_equal(const struct TqftPoly *a, const struct TqftPoly *b);

/**
 * # Safety
 * `p` must come from this library or be null.
 */
void tqft_poly_free(struct TqftPoly *p);

/**
 * Builds a group from a row-major `n × n` Cayley table.
 *
 * # Safety
 * `table` must point to `n * n` values; `out` must be writable.
 */
enum TqftStatus tqft_group_from_table(const uint32_t *table, size_t n, struct TqftGroup **out);

/**
 * Builds a group from the JSON group format (a table or permutation generators).
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum TqftStatus tqft_group_from_json(const char *json, struct TqftGroup **out);

/**
 * # Safety
 * `g` must be a live handle or null (which yields 0).
 */
size_t tqft_group_order(const struct TqftGroup *g);

/**
 * # Safety
 * `g` must be a live handle or null (which yields 0).
 */
size_t tqft_group_class_count(const struct TqftGroup *g);

/**
 * # Safety
 * `g` must come from this library or be null.
 */
void tqft_group_free(struct TqftGroup *g);

/**
 * The Aff(C) datum.
 *
 * # Safety
 * `out` must be writable.
 */
enum TqftStatus tqft_datum_affc(struct TqftDatum **out);

/**
 * Finite-group datum with one puncture tube per listed representative.
 *
 * Representatives use the group's input numbering; each tube is labelled
 * `rep=K`. With `reduce` the datum works on class functions.
 *
 * # Safety
 * `g` must be a live handle; `reps` must point to `n_reps` values; `out` must be writable.
 */
enum TqftStatus tqft_datum_finite(const struct TqftGroup *g,
                                  const size_t *reps,
                                  size_t n_reps,
                                  bool reduce,
                                  struct TqftDatum **out);

/**
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum TqftStatus tqft_datum_from_json(const char *json, struct TqftDatum **out);

/**
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum TqftStatus tqft_datum_to_json(const struct TqftDatum *d, char **out);

/**
 * # Safety
 * `d` must come from this library or be null.
 */
void tqft_datum_free(struct TqftDatum *d);

/**
 * E-polynomial of the genus-`genus` surface with the given puncture labels, in order.
 *
 * # Safety
 * `d` must be a live handle; `labels` must point to `n_labels` nul-terminated
 * strings; `out` must be writable.
 */
enum TqftStatus tqft_epoly(const struct TqftDatum *d,
                           uint32_t genus,
                           const char *const *labels,
                           size_t n_labels,
                           struct TqftPoly **out);

/**
 * Counts representations by enumeration; punctures are given by representatives.
 *
 * # Safety
 * `g` must be a live handle; `reps` must point to `n_reps` values; `out` must be writable.
 */
enum TqftStatus tqft_brute_force_count(const struct TqftGroup *g,
                                       uint32_t genus,
                                       const size_t *reps,
                                       size_t n_reps,
                                       uint64_t budget,
                                       uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TQFT_EPOLY_H */
