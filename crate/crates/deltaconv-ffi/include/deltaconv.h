#ifndef DELTACONV_H
#define DELTACONV_H

/* Generated by cbindgen from deltaconv-ffi; edit the Rust source instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code for every fallible entry point.
 */
enum DcStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  DC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  DC_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  DC_STATUS_INVALID_UTF8 = 2,
  /**
   * The input text failed to parse as a graph.
   */
  DC_STATUS_PARSE_ERROR = 3,
  /**
   * A vertex id or generator parameter was out of range.
   */
  DC_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The operation needs a connected graph.
   */
  DC_STATUS_DISCONNECTED = 5,
  /**
   * The graph exceeds a search size cap; pass `force` to override.
   */
  DC_STATUS_CAP_EXCEEDED = 6,
  /**
   * The caller buffer cannot hold the result; the required size was
   * written to the length output.
   */
  DC_STATUS_BUFFER_TOO_SMALL = 7,
  /**
   * The operation is undefined on the empty graph.
   */
  DC_STATUS_EMPTY_GRAPH = 8,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum DcStatus DcStatus;
#else
typedef int32_t DcStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * Invariant selector for `dc_invariant`.
 */
enum DcInvariant
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  /**
   * Maximum independent set size.
   */
  DC_INVARIANT_ALPHA = 0,
  DC_INVARIANT_HELLY = 1,
  DC_INVARIANT_RADON = 2,
  DC_INVARIANT_CARATHEODORY = 3,
  DC_INVARIANT_RANK = 4,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum DcInvariant DcInvariant;
#else
typedef int32_t DcInvariant;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * Opaque graph handle.
 */
typedef struct DcGraph DcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses one graph6 line (short form, up to 62 vertices).
 */
DcStatus dc_graph_from_graph6(const char *line, struct DcGraph **out);

/**
 * Parses edge-list text: header `n m`, then `m` lines `u v`, `#` comments.
 */
DcStatus dc_graph_from_edge_list(const char *text, struct DcGraph **out);

/**
 * Builds the triangle-fan family member with invariant value `target`
 * (`target >= 3`).
 */
DcStatus dc_generate_fan(uint32_t target, struct DcGraph **out);

/**
 * Builds the triangle-chain family member: `triangles` triangles whose
 * consecutive apexes are joined by paths with the given internal lengths
 * (`path_count` must be `triangles - 1`).
 */
DcStatus dc_generate_chain(uint32_t triangles,
                           const uint32_t *path_lengths,
                           size_t path_count,
                           struct DcGraph **out);

/**
 * Releases a graph handle. Null is a no-op.
 */
void dc_graph_free(struct DcGraph *g);

/**
 * Number of vertices; 0 for a null handle.
 */
uint32_t dc_graph_vertex_count(const struct DcGraph *g);

/**
 * Number of edges; 0 for a null handle.
 */
uint32_t dc_graph_edge_count(const struct DcGraph *g);

/**
 * 1 if the edge `{u, v}` exists, else 0.
 */
int32_t dc_graph_has_edge(const struct DcGraph *g, uint32_t u, uint32_t v);

/**
 * Encodes the graph as a NUL-terminated graph6 line. `written` receives
 * the byte count including the terminator; if it exceeds `capacity` the
 * call returns `BufferTooSmall` and writes nothing else.
 */
DcStatus dc_graph_to_graph6(const struct DcGraph *g,
                            char *buffer,
                            size_t capacity,
                            size_t *written);

/**
 * One closure step: the set plus every vertex adjacent to two adjacent
 * members. Ids are written ascending; `out_len` receives the size (also
 * on `BufferTooSmall`).
 */
DcStatus dc_delta_interval(const struct DcGraph *g,
                           const uint32_t *members,
                           size_t member_count,
                           uint32_t *out,
                           size_t capacity,
                           size_t *out_len);

/**
 * Smallest convex superset of the given vertices (iterated closure).
 */
DcStatus dc_delta_hull(const struct DcGraph *g,
                       const uint32_t *members,
                       size_t member_count,
                       uint32_t *out,
                       size_t capacity,
                       size_t *out_len);

/**
 * Writes 1 to `out` if the set is convex (fixed by one closure step).
 */
DcStatus dc_is_convex(const struct DcGraph *g,
                      const uint32_t *members,
                      size_t member_count,
                      int32_t *out);

/**
 * Exact invariant value with an optional witness. Pass a null `witness`
 * to skip it; otherwise ids are written ascending and `witness_len`
 * receives the count. `force` lifts the Caratheodory size cap.
 */
DcStatus dc_invariant(const struct DcGraph *g,
                      DcInvariant which,
                      int32_t force,
                      uint32_t *value,
                      uint32_t *witness,
                      size_t witness_capacity,
                      size_t *witness_len);

/**
 * Writes 1 if the graph is chordal.
 */
DcStatus dc_is_chordal(const struct DcGraph *g, int32_t *out);

/**
 * Writes 1 if every block is complete. Needs a connected graph.
 */
DcStatus dc_is_block_graph(const struct DcGraph *g, int32_t *out);

/**
 * Number of blocks (maximal 2-connected subgraphs; bridges count).
 * Needs a connected graph.
 */
DcStatus dc_block_count(const struct DcGraph *g, uint32_t *out);

/**
 * Runs the full audit (invariants, closed forms, inequality checks) and
 * returns the JSON report. `force` lifts the size caps. The string must
 * be released with `dc_string_free`.
 */
DcStatus dc_audit_json(const struct DcGraph *g, int32_t force, char **out_json);

/**
 * Releases a string returned by this library. Null is a no-op.
 */
void dc_string_free(char *s);

/**
 * Static description of a status code.
 */
const char *dc_status_message(DcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DELTACONV_H */
