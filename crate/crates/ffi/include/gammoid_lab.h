#ifndef GAMMOID_LAB_H
#define GAMMOID_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum GlStatus {
  GL_STATUS_OK = 0,
  /**
   * A null pointer or a string that is not UTF-8.
   */
  GL_STATUS_NULL_OR_UTF8 = 1,
  /**
   * Malformed document or unknown names.
   */
  GL_STATUS_INVALID_DOCUMENT = 2,
  /**
   * The input is well formed but violates a precondition.
   */
  GL_STATUS_PRECONDITION = 3,
  /**
   * A size limit was exceeded.
   */
  GL_STATUS_TOO_LARGE = 4,
  GL_STATUS_INTERNAL = 5,
} GlStatus;

/**
 * Three-valued answer of [`gl_bimaze_mpt`].
 */
typedef enum GlAnswer {
  GL_ANSWER_NO = 0,
  GL_ANSWER_YES = 1,
  GL_ANSWER_INCONCLUSIVE = 2,
} GlAnswer;

/**
 * Opaque bimaze handle.
 */
typedef struct GlBimaze GlBimaze;

/**
 * Opaque dimaze handle.
 */
typedef struct GlDimaze GlDimaze;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Free with [`gl_string_free`].
 */
char *gl_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void gl_string_free(char *s);

/**
 * Library version as a static string.
 */
const char *gl_version(void);

/**
 * Parses a dimaze document.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum GlStatus gl_dimaze_parse(const char *json, struct GlDimaze **out);

/**
 * # Safety
 * `d` must be null or a handle from this library that has not been freed.
 */
void gl_dimaze_free(struct GlDimaze *d);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `d` must be null or a live handle.
 */
size_t gl_dimaze_len(const struct GlDimaze *d);

/**
 * Serializes a dimaze as its document.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum GlStatus gl_dimaze_to_json(const struct GlDimaze *d, char **out);

/**
 * Tries to link the comma-separated vertex set onto the exits.
 *
 * `*linked` tells whether it succeeded; `*doc` receives the linkage, or the
 * maximal partial linkage with its separator.
 *
 * # Safety
 * `d` must be a live handle, `set` a nul-terminated string, `linked` and `doc` writable.
 */
enum GlStatus gl_dimaze_link(const struct GlDimaze *d, const char *set, bool *linked, char **doc);

/**
 * Independence in the strict gammoid of the dimaze.
 *
 * # Safety
 * As for [`gl_dimaze_link`].
 */
enum GlStatus gl_dimaze_is_independent(const struct GlDimaze *d,
                                       const char *set,
                                       bool *independent);

/**
 * The converted bimaze.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum GlStatus gl_dimaze_to_bimaze(const struct GlDimaze *d, struct GlBimaze **out);

/**
 * Parses a bimaze document; `m0` is required.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum GlStatus gl_bimaze_parse(const char *json, struct GlBimaze **out);

/**
 * # Safety
 * `b` must be null or a handle from this library that has not been freed.
 */
void gl_bimaze_free(struct GlBimaze *b);

/**
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum GlStatus gl_bimaze_to_json(const struct GlBimaze *b, char **out);

/**
 * `m₀`-matchability of a comma-separated set of left vertices.
 *
 * # Safety
 * `b` must be a live handle, `set` a nul-terminated string, `answer` writable.
 */
enum GlStatus gl_bimaze_mpt(const struct GlBimaze *b, const char *set, enum GlAnswer *answer);

/**
 * The converted dimaze.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum GlStatus gl_bimaze_to_dimaze(const struct GlBimaze *b, struct GlDimaze **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAMMOID_LAB_H */
