#ifndef SLICEBURN_H
#define SLICEBURN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SbRing {
  SB_RING_SLICE = 0,
  SB_RING_SECTION = 1,
  SB_RING_BURNSIDE = 2,
} SbRing;

typedef enum SbStatus {
  SB_STATUS_OK = 0,
  SB_STATUS_NULL_ARGUMENT = 1,
  SB_STATUS_INVALID_ARGUMENT = 2,
  SB_STATUS_PARSE_ERROR = 3,
  SB_STATUS_CAP_EXCEEDED = 4,
  SB_STATUS_BUFFER_TOO_SMALL = 5,
  SB_STATUS_COMPUTATION_FAILED = 6,
  SB_STATUS_VERIFICATION_FAILED = 7,
  SB_STATUS_PANIC = 8,
} SbStatus;

/**
 * Opaque handle to a group together with its subgroup lattice and rings.
 */
typedef struct SbContext SbContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread; empty if none. Valid until
 * the next failing call on the same thread.
 */
const char *sb_last_error(void);

/**
 * Builds a context from a group description (e.g. "family symmetric 4").
 *
 * # Safety
 * `description` must be a NUL-terminated string and `out` writable.
 */
enum SbStatus sb_context_new(const char *description, size_t cap, struct SbContext **out);

/**
 * Frees a context; null is ignored.
 *
 * # Safety
 * `ctx` must come from `sb_context_new` and not be used afterwards.
 */
void sb_context_free(struct SbContext *ctx);

/**
 * Frees a string returned by the library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sb_string_free(char *s);

/**
 * # Safety
 * `ctx` must be a live handle and `out` writable.
 */
enum SbStatus sb_group_order(const struct SbContext *ctx, size_t *out);

/**
 * # Safety
 * `ctx` must be a live handle and `out` writable.
 */
enum SbStatus sb_subgroup_count(const struct SbContext *ctx, size_t *out);

/**
 * Number of basis classes of the ring.
 *
 * # Safety
 * `ctx` must be a live handle and `out` writable.
 */
enum SbStatus sb_class_count(const struct SbContext *ctx, enum SbRing ring, size_t *out);

/**
 * GF(2) dimension of the unit group of the ring.
 *
 * # Safety
 * `ctx` must be a live handle and `out` writable.
 */
enum SbStatus sb_unit_dimension(const struct SbContext *ctx, enum SbRing ring, size_t *out);

/**
 * Connected components of Spec of the slice or section ring over Z
 * (`prime` = 0) or over Z localized at `prime`.
 *
 * # Safety
 * `ctx` must be a live handle and `out` writable.
 */
enum SbStatus sb_component_count(const struct SbContext *ctx,
                                 enum SbRing ring,
                                 uint32_t prime,
                                 size_t *out);

/**
 * Row-major table of marks. `out_len` always receives k²; if `buf` is null
 * or `capacity` is below k², nothing is written and BufferTooSmall is returned.
 *
 * # Safety
 * `ctx` must be a live handle, `out_len` writable, and `buf` valid for
 * `capacity` values when non-null.
 */
enum SbStatus sb_mark_matrix(const struct SbContext *ctx,
                             enum SbRing ring,
                             int64_t *buf,
                             size_t capacity,
                             size_t *out_len);

/**
 * JSON report for `command` in {"info", "marks", "idempotents", "units",
 * "spectrum"}; free the result with `sb_string_free`.
 *
 * # Safety
 * `ctx` must be a live handle, `command` NUL-terminated and `out` writable.
 */
enum SbStatus sb_report_json(const struct SbContext *ctx,
                             const char *command,
                             enum SbRing ring,
                             char **out);

/**
 * Runs a verification suite ("all", "ring", "galois", "biset", "spectrum",
 * "units"). Writes the number of failed checks to `failed`, and returns
 * VerificationFailed when it is nonzero.
 *
 * # Safety
 * `ctx` must be a live handle, `suite` NUL-terminated and `failed` writable.
 */
enum SbStatus sb_verify(const struct SbContext *ctx,
                        const char *suite,
                        uint64_t seed,
                        size_t *failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SLICEBURN_H */
