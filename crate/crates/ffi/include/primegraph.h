#ifndef PRIMEGRAPH_H
#define PRIMEGRAPH_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every exported function.
 */
typedef enum PgStatus {
  PG_STATUS_OK = 0,
  PG_STATUS_NULL_POINTER = 1,
  PG_STATUS_INVALID_UTF8 = 2,
  PG_STATUS_PARSE_ERROR = 3,
  PG_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The query has no answer (prime graph, no chain).
   */
  PG_STATUS_NOT_FOUND = 5,
  PG_STATUS_INTERNAL = 6,
} PgStatus;

/**
 * Opaque graph handle.
 */
typedef struct PgGraph PgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph6 string into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PgStatus pg_graph_from_graph6(const char *text, struct PgGraph **out);

/**
 * Builds a family member from a spec such as `half-graph:4` or `thin-spider:3!`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum PgStatus pg_family_generate(const char *spec, struct PgGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void pg_graph_free(struct PgGraph *g);

/**
 * Encodes a graph as graph6.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PgStatus pg_graph_to_graph6(const struct PgGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PgStatus pg_graph_vertex_count(const struct PgGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PgStatus pg_graph_has_edge(const struct PgGraph *g, size_t u, size_t v, bool *out);

/**
 * Graphs on fewer than 3 vertices report false.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PgStatus pg_graph_is_prime(const struct PgGraph *g, bool *out);

/**
 * Writes a homogeneous set in increasing order, or returns `NotFound`.
 *
 * # Safety
 * `g` must be a live handle; `out` and `out_len` must be writable.
 */
enum PgStatus pg_graph_find_homogeneous_set(const struct PgGraph *g, size_t **out, size_t *out_len);

/**
 * Writes a chain from the pair `{x, y}` to `target`, starting with the two
 * source vertices, or returns `NotFound`.
 *
 * # Safety
 * `g` must be a live handle; `out` and `out_len` must be writable.
 */
enum PgStatus pg_graph_find_chain(const struct PgGraph *g,
                                  size_t x,
                                  size_t y,
                                  size_t target,
                                  size_t **out,
                                  size_t *out_len);

/**
 * Runs the witness search with outcome size `n` and writes one JSON
 * object: a witness, a shortfall (`stage`, `needed`, `had`) or
 * `{"nonprime": [...]}`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PgStatus pg_graph_witness_json(const struct PgGraph *g, size_t n, char **out);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void pg_string_free(char *s);

/**
 * # Safety
 * `ptr` and `len` must come from one call of this library, or `ptr` be null.
 */
void pg_indices_free(size_t *ptr, size_t len);

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *pg_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRIMEGRAPH_H */
