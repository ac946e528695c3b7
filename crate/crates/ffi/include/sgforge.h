#ifndef SGFORGE_H
#define SGFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum SgfStatus {
  SGF_STATUS_OK = 0,
  SGF_STATUS_NULL_POINTER = 1,
  /**
   * Bad generators, non-UTF-8 text or a parse failure.
   */
  SGF_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The caller's buffer is too short; the required length was written.
   */
  SGF_STATUS_BUFFER_TOO_SMALL = 3,
  SGF_STATUS_UNKNOWN_THEOREM = 4,
  SGF_STATUS_PRECONDITION_FAILED = 5,
  SGF_STATUS_INTERNAL = 6,
  SGF_STATUS_PANIC = 7,
} SgfStatus;

/**
 * Opaque semigroup handle.
 */
typedef struct SgfSemigroup SgfSemigroup;

typedef struct SgfInvariants {
  int32_t multiplicity;
  uint32_t embedding_dim;
  uint32_t semigroup_type;
  uint32_t genus;
  int32_t frobenius;
  int32_t conductor;
  uint32_t n_of_h;
} SgfInvariants;

typedef struct SgfPredicates {
  bool symmetric;
  bool uesy;
  bool self_dual_max;
  bool almost_symmetric;
  bool nearly_gorenstein;
  bool min_mult;
} SgfPredicates;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the semigroup generated by `gens[0..len]`.
 *
 * # Safety
 * `gens` must point to `len` readable integers and `out` must be writable.
 */
enum SgfStatus sgf_semigroup_new(const int32_t *gens, size_t len, struct SgfSemigroup **out);

/**
 * Parses `"4,5,7"` or `"<4,5,7>"`.
 *
 * # Safety
 * `gens` must be a nul-terminated string and `out` must be writable.
 */
enum SgfStatus sgf_semigroup_parse(const char *gens, struct SgfSemigroup **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must come from this library and not be used afterwards.
 */
void sgf_semigroup_free(struct SgfSemigroup *h);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum SgfStatus sgf_semigroup_invariants(const struct SgfSemigroup *h, struct SgfInvariants *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum SgfStatus sgf_semigroup_contains(const struct SgfSemigroup *h, int32_t x, bool *out);

/**
 * Copies the minimal generators into `buf`. `*len` receives the count
 * even when the buffer is too small.
 *
 * # Safety
 * `buf` must hold `cap` integers; `len` must be writable.
 */
enum SgfStatus sgf_semigroup_generators(const struct SgfSemigroup *h,
                                        int32_t *buf,
                                        size_t cap,
                                        size_t *len);

/**
 * Copies the pseudo-Frobenius numbers into `buf`, as for
 * [`sgf_semigroup_generators`].
 *
 * # Safety
 * `buf` must hold `cap` integers; `len` must be writable.
 */
enum SgfStatus sgf_semigroup_pseudo_frobenius(const struct SgfSemigroup *h,
                                              int32_t *buf,
                                              size_t cap,
                                              size_t *len);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum SgfStatus sgf_semigroup_predicates(const struct SgfSemigroup *h, struct SgfPredicates *out);

/**
 * Full classification report as a JSON object. Free with
 * [`sgf_string_free`].
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum SgfStatus sgf_semigroup_classify_json(const struct SgfSemigroup *h, char **out);

/**
 * Certified bounds on the Gorenstein colength. `bound = 0` selects the
 * default search limits.
 *
 * # Safety
 * `h` must be a live handle; `lower` and `upper` writable.
 */
enum SgfStatus sgf_semigroup_bg_bounds(const struct SgfSemigroup *h,
                                       uint32_t bound,
                                       uint32_t *lower,
                                       uint32_t *upper);

/**
 * Runs one theorem check up to `genus`. `*pass` receives the verdict and,
 * if `report` is not null, the JSON outcome is stored there.
 *
 * # Safety
 * `theorem` must be a nul-terminated string; `pass` writable; `report`
 * null or writable.
 */
enum SgfStatus sgf_verify(const char *theorem, uint32_t genus, bool *pass, char **report);

/**
 * Number of semigroups of each genus `0..=g_max`, written to
 * `buf[0..=g_max]`.
 *
 * # Safety
 * `buf` must hold `cap` integers; `len` must be writable.
 */
enum SgfStatus sgf_counts_by_genus(uint32_t g_max, uint64_t *buf, size_t cap, size_t *len);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sgf_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next library call on the same thread.
 */
const char *sgf_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SGFORGE_H */
