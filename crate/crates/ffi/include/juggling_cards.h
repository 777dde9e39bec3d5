#ifndef JUGGLING_CARDS_H
#define JUGGLING_CARDS_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Counting functions exposed as decimal strings, since values outgrow 64 bits.
 */
typedef enum JcCount {
  /**
   * `S(n, k)`; arguments `(n, k)`.
   */
  JC_COUNT_STIRLING2 = 0,
  /**
   * Generalized Stirling number; arguments `(n, k, m)`.
   */
  JC_COUNT_GEN_STIRLING = 1,
  /**
   * Minimal sequences; arguments `(b, n)`.
   */
  JC_COUNT_NARAYANA = 2,
  /**
   * Primitive sequences with four extra crossings; arguments `(n, b)`.
   */
  JC_COUNT_P4 = 3,
} JcCount;

/**
 * Result of every fallible call.
 */
typedef enum JcStatus {
  JC_STATUS_OK = 0,
  JC_STATUS_NULL_POINTER = 1,
  JC_STATUS_INVALID_UTF8 = 2,
  JC_STATUS_PARSE = 3,
  JC_STATUS_INVALID_INPUT = 4,
  JC_STATUS_OUT_OF_RANGE = 5,
  JC_STATUS_UNSUPPORTED = 6,
  JC_STATUS_BUFFER_TOO_SMALL = 7,
  JC_STATUS_INTERNAL = 8,
  JC_STATUS_PANIC = 9,
} JcStatus;

/**
 * A parsed card sequence.
 */
typedef struct JcSequence JcSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null if the last call
 * succeeded. The pointer stays valid until the next call on this thread.
 */
const char *jc_last_error_message(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void jc_string_free(char *s);

/**
 * Parses `C3 C3 C2` style text. `b = 0` takes the ball count from the
 * largest target.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` writable.
 */
enum JcStatus jc_sequence_parse(const char *text, size_t b, struct JcSequence **out);

/**
 * Releases a sequence handle. Null is ignored.
 *
 * # Safety
 * `seq` must come from `jc_sequence_parse` and not have been freed.
 */
void jc_sequence_free(struct JcSequence *seq);

/**
 * Ball count, or 0 for a null handle.
 *
 * # Safety
 * `seq` must be null or a live handle.
 */
size_t jc_sequence_ball_count(const struct JcSequence *seq);

/**
 * Number of cards, or 0 for a null handle.
 *
 * # Safety
 * `seq` must be null or a live handle.
 */
size_t jc_sequence_len(const struct JcSequence *seq);

/**
 * Total crossings over all cards.
 *
 * # Safety
 * `seq` must be a live handle and `out` writable.
 */
enum JcStatus jc_sequence_crossings(const struct JcSequence *seq, size_t *out);

/**
 * Canonical text form, to be released with `jc_string_free`.
 *
 * # Safety
 * `seq` must be a live handle and `out` writable.
 */
enum JcStatus jc_sequence_to_string(const struct JcSequence *seq, char **out);

/**
 * Permutation of the sequence in cycle notation.
 *
 * # Safety
 * `seq` must be a live handle and `out` writable.
 */
enum JcStatus jc_sequence_permutation(const struct JcSequence *seq, char **out);

/**
 * Final arrangement of the balls, bottom level first. Needs `cap ≥ b`.
 *
 * # Safety
 * `seq` must be a live handle, `out` must hold `cap` values, `len` writable.
 */
enum JcStatus jc_sequence_arrangement(const struct JcSequence *seq,
                                      size_t *out,
                                      size_t cap,
                                      size_t *len);

/**
 * Siteswap of a single-throw sequence. Needs `cap ≥ n`.
 *
 * # Safety
 * `seq` must be a live handle, `out` must hold `cap` values, `len` writable.
 */
enum JcStatus jc_sequence_siteswap(const struct JcSequence *seq,
                                   size_t *out,
                                   size_t cap,
                                   size_t *len);

/**
 * SVG diagram with the default layout.
 *
 * # Safety
 * `seq` must be a live handle and `out` writable.
 */
enum JcStatus jc_sequence_render_svg(const struct JcSequence *seq, char **out);

/**
 * Evaluates `kind` at `(a, b, c)` and returns the decimal value, to be
 * released with `jc_string_free`. Unused arguments are ignored.
 *
 * # Safety
 * `out` must be writable.
 */
enum JcStatus jc_count(enum JcCount kind, size_t a, size_t b, size_t c, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JUGGLING_CARDS_H */
