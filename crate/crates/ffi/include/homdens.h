#ifndef HOMDENS_H
#define HOMDENS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible call.
 */
typedef enum HdStatus {
  HD_STATUS_OK = 0,
  HD_STATUS_NULL_POINTER = 1,
  HD_STATUS_INVALID_GRAPH = 2,
  HD_STATUS_PARSE_ERROR = 3,
  HD_STATUS_EMPTY_CODOMAIN = 4,
  HD_STATUS_BUDGET_EXCEEDED = 5,
  HD_STATUS_INVALID_UTF8 = 6,
  HD_STATUS_INTERNAL = 7,
} HdStatus;

/*
 Dispatch branch reported by [`hd_count_homomorphisms`].
 */
typedef enum HdFastPath {
  HD_FAST_PATH_NONE = 0,
  HD_FAST_PATH_EDGELESS_DOMAIN = 1,
  HD_FAST_PATH_STRIPPED_ISOLATED = 2,
  HD_FAST_PATH_COMPLETE_DOMAIN = 3,
  HD_FAST_PATH_COMPLETE_CODOMAIN = 4,
} HdFastPath;

/*
 Opaque graph handle.
 */
typedef struct HdGraph HdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 `edges` (`edges[2k]`, `edges[2k+1]`). `edges` may be NULL when
 `edge_count` is 0.

 # Safety
 `edges` must point to `2 * edge_count` readable `uint32_t` values and
 `out` must be a valid pointer.
 */
enum HdStatus hd_graph_new(uint32_t n,
                           const uint32_t *edges,
                           size_t edge_count,
                           struct HdGraph **out);

/*
 The complete graph `K_n`. Never returns NULL.
 */
struct HdGraph *hd_graph_complete(uint32_t n);

/*
 `n` isolated vertices. Never returns NULL.
 */
struct HdGraph *hd_graph_edgeless(uint32_t n);

/*
 The path on `n >= 1` vertices.

 # Safety
 `out` must be a valid pointer.
 */
enum HdStatus hd_graph_path(uint32_t n, struct HdGraph **out);

/*
 The cycle on `n >= 3` vertices.

 # Safety
 `out` must be a valid pointer.
 */
enum HdStatus hd_graph_cycle(uint32_t n, struct HdGraph **out);

/*
 Parses one graph6 record.

 # Safety
 `text` must be NUL-terminated and `out` a valid pointer.
 */
enum HdStatus hd_graph_from_graph6(const char *text, struct HdGraph **out);

/*
 Parses the edge-list text format.

 # Safety
 `text` must be NUL-terminated and `out` a valid pointer.
 */
enum HdStatus hd_graph_from_edge_list(const char *text, struct HdGraph **out);

/*
 Encodes a graph of at most 62 vertices as graph6.

 # Safety
 `g` must be a live handle and `out` a valid pointer.
 */
enum HdStatus hd_graph_to_graph6(const struct HdGraph *g, char **out);

/*
 Releases a graph handle. NULL is ignored.

 # Safety
 `g` must be NULL or a handle not yet freed.
 */
void hd_graph_free(struct HdGraph *g);

/*
 Vertex count, or 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
uint32_t hd_graph_vertex_count(const struct HdGraph *g);

/*
 Edge count, or 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
uint64_t hd_graph_edge_count(const struct HdGraph *g);

/*
 `|M| = |V(f)|^|V(g)|` as a decimal string.

 # Safety
 `g` and `f` must be live handles and `out` a valid pointer.
 */
enum HdStatus hd_count_mappings(const struct HdGraph *g, const struct HdGraph *f, char **out);

/*
 `|I|`, the number of injective mappings, as a decimal string.

 # Safety
 `g` and `f` must be live handles and `out` a valid pointer.
 */
enum HdStatus hd_count_injective(const struct HdGraph *g, const struct HdGraph *f, char **out);

/*
 `|H|` through the dispatched engine. `fast_path` may be NULL.

 # Safety
 `g` and `f` must be live handles, `out` a valid pointer, `fast_path`
 NULL or valid.
 */
enum HdStatus hd_count_homomorphisms(const struct HdGraph *g,
                                     const struct HdGraph *f,
                                     uint32_t threads,
                                     char **out,
                                     enum HdFastPath *fast_path);

/*
 `|H|` by enumerating every mapping; fails with `BudgetExceeded` beyond
 `budget` mappings.

 # Safety
 `g` and `f` must be live handles and `out` a valid pointer.
 */
enum HdStatus hd_count_homomorphisms_naive(const struct HdGraph *g,
                                           const struct HdGraph *f,
                                           uint64_t budget,
                                           char **out);

/*
 `t(g, f)` as a reduced fraction of decimal strings.

 # Safety
 `g` and `f` must be live handles; `numerator` and `denominator` valid pointers.
 */
enum HdStatus hd_density(const struct HdGraph *g,
                         const struct HdGraph *f,
                         char **numerator,
                         char **denominator);

/*
 Releases a string returned by this library. NULL is ignored.

 # Safety
 `s` must be NULL or a string from this library not yet freed.
 */
void hd_string_free(char *s);

/*
 Message for the most recent failure on this thread, or NULL. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *hd_last_error_message(void);

/*
 Library version, a static NUL-terminated string.
 */
const char *hd_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOMDENS_H */
