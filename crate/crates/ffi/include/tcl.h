#ifndef TCL_H
#define TCL_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TclStatus {
  TCL_STATUS_OK = 0,
  TCL_STATUS_NULL_POINTER = 1,
  TCL_STATUS_INVALID_ARGUMENT = 2,
  TCL_STATUS_PARSE = 3,
  TCL_STATUS_CONSTRUCTION_FAILED = 4,
  TCL_STATUS_BUDGET_EXHAUSTED = 5,
  TCL_STATUS_PANIC = 6,
} TclStatus;

/**
 * Opaque total coloring handle.
 */
typedef struct TclColoring TclColoring;

/**
 * Opaque graph handle.
 */
typedef struct TclGraph TclGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer stays
 * valid until the next call into the library on this thread.
 */
const char *tcl_last_error(void);

/**
 * Builds `C_n^k`.
 *
 * # Safety
 * `out` must be null or point to writable storage for a handle.
 */
enum TclStatus tcl_graph_power_of_cycle(size_t n, size_t k, struct TclGraph **out);

/**
 * Parses a graph from its JSON form `{"n": .., "edges": [[u, v], ..]}`.
 *
 * # Safety
 * `json` must be null or a NUL-terminated string; `out` as above.
 */
enum TclStatus tcl_graph_from_json(const char *json, struct TclGraph **out);

/**
 * Vertex count, edge count and maximum degree.
 *
 * # Safety
 * `graph` must be a live handle or null; outputs must be writable or null.
 */
enum TclStatus tcl_graph_stats(const struct TclGraph *graph,
                               size_t *vertices,
                               size_t *edges,
                               size_t *max_degree);

/**
 * # Safety
 * `graph` must be null or a handle not yet freed.
 */
void tcl_graph_free(struct TclGraph *graph);

/**
 * Colors `C_n^k`: even `n` by the base, block or augment construction, odd
 * `n` from a neighbouring even order.
 *
 * # Safety
 * `out` must be null or point to writable storage for a handle.
 */
enum TclStatus tcl_color_power_of_cycle(size_t n, size_t k, struct TclColoring **out);

/**
 * Colors the unitary Cayley graph `X_n` with at most `φ(n) + 2` colors.
 *
 * # Safety
 * `out` must be null or point to writable storage for a handle.
 */
enum TclStatus tcl_color_unitary(size_t n, struct TclColoring **out);

/**
 * Colors the odd graph `O_m` with at most `m + 2` colors.
 *
 * # Safety
 * `out` must be null or point to writable storage for a handle.
 */
enum TclStatus tcl_color_odd_graph(size_t m, struct TclColoring **out);

/**
 * Number of distinct colors.
 *
 * # Safety
 * `coloring` must be a live handle or null; `out` writable or null.
 */
enum TclStatus tcl_coloring_colors_used(const struct TclColoring *coloring, size_t *out);

/**
 * JSON form of the coloring; release with [`tcl_string_free`].
 *
 * # Safety
 * `coloring` must be a live handle or null; `out` writable or null.
 */
enum TclStatus tcl_coloring_to_json(const struct TclColoring *coloring, char **out);

/**
 * Parses a coloring from JSON.
 *
 * # Safety
 * `json` must be null or a NUL-terminated string; `out` as above.
 */
enum TclStatus tcl_coloring_from_json(const char *json, struct TclColoring **out);

/**
 * # Safety
 * `coloring` must be null or a handle not yet freed.
 */
void tcl_coloring_free(struct TclColoring *coloring);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void tcl_string_free(char *s);

/**
 * Checks the three total-coloring conditions. `valid` receives 1 or 0 and
 * `violations` the number of violated pairs or missing elements.
 *
 * # Safety
 * Handles must be live or null; outputs writable or null.
 */
enum TclStatus tcl_verify(const struct TclGraph *graph,
                          const struct TclColoring *coloring,
                          int32_t *valid,
                          size_t *violations);

/**
 * Exact total chromatic number within `budget` search nodes. When the budget
 * runs out the bounds are still written and `BudgetExhausted` is returned.
 *
 * # Safety
 * `graph` must be a live handle or null; outputs writable or null.
 */
enum TclStatus tcl_oracle_total(const struct TclGraph *graph,
                                uint64_t budget,
                                size_t *lower,
                                size_t *upper);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TCL_H */
