#ifndef KNCRYSTAL_H
#define KNCRYSTAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum KnStatus {
  KN_STATUS_OK = 0,
  KN_STATUS_NULL_POINTER = 1,
  KN_STATUS_INVALID_UTF8 = 2,
  KN_STATUS_INVALID_JSON = 3,
  KN_STATUS_INVALID_INPUT = 4,
  /**
   * A column or tableau map is undefined on the input.
   */
  KN_STATUS_UNDEFINED = 5,
  KN_STATUS_INTERNAL = 6,
} KnStatus;

/**
 * The elements of one LR crystal in canonical order.
 */
typedef struct KnLrCrystal KnLrCrystal;

/**
 * A tableau together with its alphabet.
 */
typedef struct KnTableau KnTableau;

/**
 * Message for the last failed call on this thread; empty after a success. The pointer
 * stays valid until the next call into the library on this thread.
 */
const char *kn_last_error(void);

/**
 * Release a string returned by the library.
 *
 * # Safety
 * `s` must come from this library or be null.
 */
void kn_string_free(char *s);

/**
 * Parse a tableau document `{"type","n","shape","inner","rows"}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum KnStatus kn_tableau_from_json(const char *json, struct KnTableau **out);

/**
 * Serialize a tableau; release the result with `kn_string_free`.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum KnStatus kn_tableau_to_json(const struct KnTableau *t, char **out);

/**
 * # Safety
 * `t` must come from this library or be null; it is invalid afterwards.
 */
void kn_tableau_free(struct KnTableau *t);

/**
 * KN-admissibility in the tableau's own type.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum KnStatus kn_tableau_is_admissible(const struct KnTableau *t, bool *out);

/**
 * `Φ` of a type C tableau.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum KnStatus kn_tableau_phi(const struct KnTableau *t, struct KnTableau **out);

/**
 * `Ψ` of a type C tableau; `KN_STATUS_UNDEFINED` when a stage is undefined.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum KnStatus kn_tableau_psi(const struct KnTableau *t, struct KnTableau **out);

/**
 * Rectification of a skew tableau with barred letters.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum KnStatus kn_tableau_rectify(const struct KnTableau *t, struct KnTableau **out);

/**
 * The LR crystal of shape-`ν` tableaux smooth on `μ` reaching `λ`. `lie_type` is one of
 * `'A'`, `'B'`, `'C'`, `'D'`.
 *
 * # Safety
 * String arguments must be NUL-terminated and `out` a valid pointer.
 */
enum KnStatus kn_lr_enumerate(char lie_type,
                              size_t n,
                              const char *lambda,
                              const char *mu,
                              const char *nu,
                              struct KnLrCrystal **out);

/**
 * Number of elements; 0 for a null handle.
 *
 * # Safety
 * `c` must be a live handle or null.
 */
size_t kn_lr_len(const struct KnLrCrystal *c);

/**
 * A copy of element `index`, to be released with `kn_tableau_free`.
 *
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum KnStatus kn_lr_get(const struct KnLrCrystal *c, size_t index, struct KnTableau **out);

/**
 * # Safety
 * `c` must come from this library or be null; it is invalid afterwards.
 */
void kn_lr_free(struct KnLrCrystal *c);

/**
 * `Σ c^λ_{ξζ} c^μ_{ζη} c^ν_{ηξ}` over shapes with at most `n` rows.
 *
 * # Safety
 * String arguments must be NUL-terminated and `out` a valid pointer.
 */
enum KnStatus kn_branching_rhs(const char *lambda,
                               const char *mu,
                               const char *nu,
                               size_t n,
                               uint64_t *out);

/**
 * The LR coefficient `c^λ_{μν}`.
 *
 * # Safety
 * String arguments must be NUL-terminated and `out` a valid pointer.
 */
enum KnStatus kn_lr_coefficient(const char *lambda, const char *mu, const char *nu, uint64_t *out);

/**
 * `φ` of an admissible type C column of rank `n`; writes `len` letters to `out`.
 *
 * # Safety
 * `letters` and `out` must point to `len` integers each.
 */
enum KnStatus kn_phi_column(const int32_t *letters, size_t len, size_t n, int32_t *out);

/**
 * `ψ` of a coadmissible type C column of rank `n`; writes `len` letters to `out`.
 *
 * # Safety
 * `letters` and `out` must point to `len` integers each.
 */
enum KnStatus kn_psi_column(const int32_t *letters, size_t len, size_t n, int32_t *out);

#endif  /* KNCRYSTAL_H */
