#ifndef LAPLACE_CYCLES_H
#define LAPLACE_CYCLES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call.
 */
typedef enum {
  LC_STATUS_OK = 0,
  /**
   * Bad arguments: null pointers, invalid UTF-8, out of range values.
   */
  LC_STATUS_USAGE = 1,
  /**
   * Malformed JSON or a document of the wrong type.
   */
  LC_STATUS_PARSE = 2,
  /**
   * The input is degenerate for the requested construction.
   */
  LC_STATUS_DEGENERATE = 3,
  /**
   * The input violates an identity the construction requires.
   */
  LC_STATUS_VIOLATION = 4,
  /**
   * The library panicked. This is a bug.
   */
  LC_STATUS_INTERNAL = 5,
} LcStatus;

/**
 * The four nets of a cycle.
 */
typedef enum {
  LC_NET_NAME_F = 0,
  LC_NET_NAME_H = 1,
  LC_NET_NAME_G = 2,
  LC_NET_NAME_K = 3,
} LcNetName;

/**
 * A line congruence on a rectangular window.
 */
typedef struct LcCongruence LcCongruence;

/**
 * A Laplace cycle of period four.
 */
typedef struct LcCycle LcCycle;

/**
 * A discrete net on a rectangular window.
 */
typedef struct LcNet LcNet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or an empty string if
 * nothing has failed yet. Successful calls leave it unchanged. The pointer
 * stays valid until the next failing call.
 */
const char *lc_last_error(void);

/**
 * Generates a cycle on the window `[i0, i1] × [j0, j1]` from a seed. The
 * window needs at least three vertices in each direction.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
LcStatus lc_cycle_generate(uint64_t seed,
                           int64_t i0,
                           int64_t i1,
                           int64_t j0,
                           int64_t j1,
                           uint32_t max_attempts,
                           LcCycle **out);

/**
 * Checks every identity of the cycle. `clean` is set to whether all held.
 * If `report` is not null it receives the text report, to be released
 * with [`lc_string_free`].
 *
 * # Safety
 * `cycle` must be a live handle, `clean` a valid pointer and `report`
 * null or a valid pointer.
 */
LcStatus lc_cycle_verify(const LcCycle *cycle, bool *clean, char **report);

/**
 * A copy of one of the four nets of the cycle.
 *
 * # Safety
 * `cycle` must be a live handle and `out` a valid pointer.
 */
LcStatus lc_cycle_net(const LcCycle *cycle, LcNetName name, LcNet **out);

/**
 * The two diagonal congruences `f ∨ g` and `h ∨ k`.
 *
 * # Safety
 * `cycle` must be a live handle; `fg` and `hk` valid pointers.
 */
LcStatus lc_cycle_diagonals(const LcCycle *cycle, LcCongruence **fg, LcCongruence **hk);

/**
 * Parses a cycle document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
LcStatus lc_cycle_from_json(const char *json, LcCycle **out);

/**
 * Serializes a cycle. Release the string with [`lc_string_free`].
 *
 * # Safety
 * `cycle` must be a live handle and `out` a valid pointer.
 */
LcStatus lc_cycle_to_json(const LcCycle *cycle, char **out);

/**
 * Parses a net document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
LcStatus lc_net_from_json(const char *json, LcNet **out);

/**
 * Serializes a net. Release the string with [`lc_string_free`].
 *
 * # Safety
 * `net` must be a live handle and `out` a valid pointer.
 */
LcStatus lc_net_to_json(const LcNet *net, char **out);

/**
 * Number of vertices of the net.
 *
 * # Safety
 * `net` must be a live handle or null (giving 0).
 */
size_t lc_net_len(const LcNet *net);

/**
 * Laplace transform in direction 1 or 2.
 *
 * # Safety
 * `net` must be a live handle and `out` a valid pointer.
 */
LcStatus lc_net_laplace(const LcNet *net, uint32_t dir, LcNet **out);

/**
 * Parses a congruence document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
LcStatus lc_congruence_from_json(const char *json, LcCongruence **out);

/**
 * Serializes a congruence. Release the string with [`lc_string_free`].
 *
 * # Safety
 * `cong` must be a live handle and `out` a valid pointer.
 */
LcStatus lc_congruence_to_json(const LcCongruence *cong, char **out);

/**
 * Tests whether every face of the congruence is a regulus.
 *
 * # Safety
 * `cong` must be a live handle and `result` a valid pointer.
 */
LcStatus lc_congruence_is_w(const LcCongruence *cong, bool *result);

/**
 * # Safety
 * `cycle` must be null or a handle not yet freed.
 */
void lc_cycle_free(LcCycle *cycle);

/**
 * # Safety
 * `net` must be null or a handle not yet freed.
 */
void lc_net_free(LcNet *net);

/**
 * # Safety
 * `cong` must be null or a handle not yet freed.
 */
void lc_congruence_free(LcCongruence *cong);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void lc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LAPLACE_CYCLES_H */
