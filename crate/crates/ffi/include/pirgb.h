#ifndef PIRGB_H
#define PIRGB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
enum PirgbStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  PIRGB_STATUS_OK = 0,
  PIRGB_STATUS_NULL_POINTER = 1,
  PIRGB_STATUS_INVALID_UTF8 = 2,
  PIRGB_STATUS_PARSE = 3,
  PIRGB_STATUS_DOMAIN = 4,
  PIRGB_STATUS_INVALID_ENGINE = 5,
  PIRGB_STATUS_INDEX_OUT_OF_RANGE = 6,
  /**
   * `pirgb_verify` found a counterexample.
   */
  PIRGB_STATUS_NOT_STRONG = 7,
  PIRGB_STATUS_INTERNAL = 8,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum PirgbStatus PirgbStatus;
#else
typedef int32_t PirgbStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * Engine selector for [`pirgb_compute`].
 */
enum PirgbEngine
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : uint32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  PIRGB_ENGINE_SPLIT = 0,
  PIRGB_ENGINE_NAIVE = 1,
  PIRGB_ENGINE_CLASSIC = 2,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum PirgbEngine PirgbEngine;
#else
typedef uint32_t PirgbEngine;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * A computed basis, printable with the variable names of its ideal.
 */
typedef struct PirgbBasis PirgbBasis;

/**
 * A parsed ideal file.
 */
typedef struct PirgbIdeal PirgbIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *pirgb_last_error(void);

/**
 * Parses an ideal file (`modulus`, `vars`, `order` lines, then one
 * polynomial per line) from a NUL-terminated string.
 *
 * # Safety
 * `text` must be NULL or a valid NUL-terminated string; `out` must be NULL
 * or valid for writing one pointer.
 */
int32_t pirgb_ideal_parse(const char *text, struct PirgbIdeal **out);

/**
 * Releases an ideal. NULL is ignored.
 *
 * # Safety
 * `ideal` must be NULL or a handle from [`pirgb_ideal_parse`] not yet freed.
 */
void pirgb_ideal_free(struct PirgbIdeal *ideal);

/**
 * Modulus of the ideal's coefficient ring, or 0 for NULL.
 *
 * # Safety
 * `ideal` must be NULL or a live handle.
 */
uint64_t pirgb_ideal_modulus(const struct PirgbIdeal *ideal);

/**
 * Number of nonzero generators, or 0 for NULL.
 *
 * # Safety
 * `ideal` must be NULL or a live handle.
 */
size_t pirgb_ideal_len(const struct PirgbIdeal *ideal);

/**
 * Computes the minimal normalized strong Gröbner basis with the given
 * engine (a [`PirgbEngine`] value).
 *
 * # Safety
 * `ideal` must be NULL or a live handle; `out` must be NULL or valid for
 * writing one pointer.
 */
int32_t pirgb_compute(const struct PirgbIdeal *ideal, uint32_t engine, struct PirgbBasis **out);

/**
 * Reads a basis for `ideal` from text: bare polynomial lines, or a full
 * ideal file over the same ring and variables. The elements are taken as
 * given, without minimizing.
 *
 * # Safety
 * `ideal` must be NULL or a live handle; `text` must be NULL or a valid
 * NUL-terminated string; `out` must be NULL or valid for writing one
 * pointer.
 */
int32_t pirgb_basis_parse(const struct PirgbIdeal *ideal,
                          const char *text,
                          struct PirgbBasis **out);

/**
 * Releases a basis. NULL is ignored.
 *
 * # Safety
 * `basis` must be NULL or a handle from [`pirgb_compute`] not yet freed.
 */
void pirgb_basis_free(struct PirgbBasis *basis);

/**
 * Number of basis elements, or 0 for NULL.
 *
 * # Safety
 * `basis` must be NULL or a live handle.
 */
size_t pirgb_basis_len(const struct PirgbBasis *basis);

/**
 * The basis, one polynomial per line. Free with [`pirgb_string_free`].
 * Returns NULL for a NULL handle.
 *
 * # Safety
 * `basis` must be NULL or a live handle.
 */
char *pirgb_basis_to_string(const struct PirgbBasis *basis);

/**
 * Element `index` as text. Free with [`pirgb_string_free`].
 *
 * # Safety
 * `basis` must be NULL or a live handle; `out` must be NULL or valid for
 * writing one pointer.
 */
int32_t pirgb_basis_element(const struct PirgbBasis *basis, size_t index, char **out);

/**
 * Checks `basis` against `ideal` up to `degree` (0 picks two above the
 * largest input degree). Returns `Ok` or `NotStrong`; in the latter case a
 * counterexample is written to `counterexample` when it is not NULL (free
 * it with [`pirgb_string_free`]).
 *
 * # Safety
 * `ideal` and `basis` must be NULL or live handles; `counterexample` must
 * be NULL or valid for writing one pointer.
 */
int32_t pirgb_verify(const struct PirgbIdeal *ideal,
                     const struct PirgbBasis *basis,
                     uint32_t degree,
                     char **counterexample);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void pirgb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PIRGB_H */
