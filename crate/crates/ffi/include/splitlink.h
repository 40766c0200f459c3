#ifndef SPLITLINK_H
#define SPLITLINK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum {
  SL_STATUS_OK = 0,
  SL_STATUS_NULL_POINTER = 1,
  SL_STATUS_INVALID_UTF8 = 2,
  SL_STATUS_PARSE = 3,
  /**
   * Bad vertex, bad query or other domain error.
   */
  SL_STATUS_DOMAIN = 4,
  /**
   * Premises of a certified linkage are not met.
   */
  SL_STATUS_HYPOTHESIS = 5,
  /**
   * No linkage exists.
   */
  SL_STATUS_NOT_LINKED = 6,
  SL_STATUS_BUDGET_EXCEEDED = 7,
  /**
   * A certified linkage was refuted by exhaustive search.
   */
  SL_STATUS_REFUTED = 8,
  SL_STATUS_PANIC = 9,
} SlStatus;

/**
 * Opaque digraph handle.
 */
typedef struct SlDigraph SlDigraph;

/**
 * Opaque linkage witness handle.
 */
typedef struct SlWitness SlWitness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or an empty string.
 * Valid until the next call into this library on the same thread.
 */
const char *sl_last_error(void);

/**
 * Parses a digraph in the text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
SlStatus sl_digraph_parse(const char *text, SlDigraph **out);

/**
 * Releases a digraph. Null is ignored.
 *
 * # Safety
 * `d` must come from [`sl_digraph_parse`] and not be used afterwards.
 */
void sl_digraph_free(SlDigraph *d);

/**
 * Number of vertices, or 0 for null.
 *
 * # Safety
 * `d` must be null or a live handle.
 */
size_t sl_digraph_order(const SlDigraph *d);

/**
 * Number of arcs, or 0 for null.
 *
 * # Safety
 * `d` must be null or a live handle.
 */
size_t sl_digraph_arc_count(const SlDigraph *d);

/**
 * Canonical text form. Release the string with [`sl_string_free`].
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
SlStatus sl_digraph_serialize(const SlDigraph *d, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sl_string_free(char *s);

/**
 * Maximum number of internally disjoint `(x, y)`-paths avoiding the
 * `deleted_len` vertices at `deleted` (which may be null when empty).
 *
 * # Safety
 * `d` must be a live handle, `deleted` must point to `deleted_len` values
 * and `out` must be valid.
 */
SlStatus sl_local_connectivity(const SlDigraph *d,
                               uint32_t x,
                               uint32_t y,
                               const uint32_t *deleted,
                               size_t deleted_len,
                               size_t *out);

/**
 * Whether the digraph is `k`-strong.
 *
 * # Safety
 * `d` must be a live handle and `out` valid.
 */
SlStatus sl_is_k_strong(const SlDigraph *d, size_t k, bool *out);

/**
 * Largest `k` for which the digraph is `k`-strong.
 *
 * # Safety
 * `d` must be a live handle and `out` valid.
 */
SlStatus sl_strong_connectivity(const SlDigraph *d, size_t *out);

/**
 * Exact search for disjoint `(s1, t1)`- and `(s2, t2)`-paths. Returns
 * `Ok` with a witness, `NotLinked`, or `BudgetExceeded` after `budget`
 * search nodes.
 *
 * # Safety
 * `d` must be a live handle and `out` valid.
 */
SlStatus sl_link2(const SlDigraph *d,
                  uint32_t s1,
                  uint32_t t1,
                  uint32_t s2,
                  uint32_t t2,
                  uint64_t budget,
                  SlWitness **out);

/**
 * Constructive linkage under the premises of the class `mode` (an
 * [`SlMode`] value), falling back to exact search when no template applies.
 *
 * # Safety
 * `d` must be a live handle and `out` valid.
 */
SlStatus sl_link2_certified(const SlDigraph *d,
                            uint32_t s1,
                            uint32_t t1,
                            uint32_t s2,
                            uint32_t t2,
                            uint32_t mode,
                            uint64_t budget,
                            SlWitness **out);

/**
 * Releases a witness. Null is ignored.
 *
 * # Safety
 * `w` must come from this library and not be used afterwards.
 */
void sl_witness_free(SlWitness *w);

/**
 * Number of vertices on path `which` (0 or 1), or 0 for bad input.
 *
 * # Safety
 * `w` must be null or a live handle.
 */
size_t sl_witness_path_len(const SlWitness *w, uint32_t which);

/**
 * Copies path `which` (0 or 1) into `buf`, which must hold at least
 * [`sl_witness_path_len`] entries.
 *
 * # Safety
 * `w` must be a live handle and `buf` valid for `cap` writes.
 */
SlStatus sl_witness_path(const SlWitness *w, uint32_t which, uint32_t *buf, size_t cap);

/**
 * How the witness was found: `exact-search`, `shortcut` or `template:ID`.
 * Owned by the witness.
 *
 * # Safety
 * `w` must be null or a live handle.
 */
const char *sl_witness_provenance(const SlWitness *w);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPLITLINK_H */
