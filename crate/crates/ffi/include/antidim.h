#ifndef ANTIDIM_H
#define ANTIDIM_H

/* Generated by cbindgen from antidim-ffi; run `cargo build -p antidim-ffi --features generate-header` to refresh. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Pass as `bound` to use the solver's default cardinality bound.
 */
#define ANTIDIM_UNBOUNDED UINT64_MAX

/*
 Result codes shared by every fallible call.
 */
typedef enum AntidimStatus {
  ANTIDIM_STATUS_OK = 0,
  ANTIDIM_STATUS_NULL_POINTER = 1,
  ANTIDIM_STATUS_INVALID_ARGUMENT = 2,
  ANTIDIM_STATUS_INVALID_GRAPH = 3,
  ANTIDIM_STATUS_DISCONNECTED = 4,
  ANTIDIM_STATUS_INVALID_K = 5,
  ANTIDIM_STATUS_BUFFER_TOO_SMALL = 6,
  ANTIDIM_STATUS_GENERATION_FAILED = 7,
  ANTIDIM_STATUS_INTERNAL = 8,
} AntidimStatus;

typedef enum AntidimFamily {
  ANTIDIM_FAMILY_GRID = 0,
  ANTIDIM_FAMILY_CYLINDER = 1,
  ANTIDIM_FAMILY_TORUS = 2,
  ANTIDIM_FAMILY_HAMMING2 = 3,
} AntidimFamily;

typedef enum AntidimGenClass {
  ANTIDIM_GEN_CLASS_TREE = 0,
  ANTIDIM_GEN_CLASS_SPARSE = 1,
  ANTIDIM_GEN_CLASS_DENSE = 2,
} AntidimGenClass;

typedef enum AntidimSemantics {
  ANTIDIM_SEMANTICS_EXACT = 0,
  ANTIDIM_SEMANTICS_AT_LEAST = 1,
} AntidimSemantics;

/*
 How a solve ended.
 */
typedef enum AntidimSolveState {
  ANTIDIM_SOLVE_STATE_OPTIMAL = 0,
  ANTIDIM_SOLVE_STATE_INFEASIBLE = 1,
  ANTIDIM_SOLVE_STATE_UNKNOWN = 2,
} AntidimSolveState;

typedef enum AntidimVariant {
  ANTIDIM_VARIANT_F = 0,
  ANTIDIM_VARIANT_FA = 1,
  ANTIDIM_VARIANT_FX = 2,
} AntidimVariant;

/*
 Opaque graph handle.
 */
typedef struct AntidimGraph AntidimGraph;

/*
 Solve outcome; `cardinality` and the witness buffer are meaningful only
 in the `Optimal` state.
 */
typedef struct AntidimSolveResult {
  enum AntidimSolveState state;
  uint64_t cardinality;
  uint64_t explored_bound;
  uint64_t witness_len;
} AntidimSolveResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Builds a graph from `edge_count` vertex pairs laid out `u0 v0 u1 v1 ...`
 (1-indexed). `edges` may be null when `edge_count` is zero.

 # Safety
 `edges` must point to `2 * edge_count` readable u64 values and `out` to a
 writable pointer slot.
 */
enum AntidimStatus antidim_graph_from_edges(uint64_t n,
                                            const uint64_t *edges,
                                            uint64_t edge_count,
                                            struct AntidimGraph **out);

/*
 Builds a product-family graph (`s` is ignored for `Hamming2`).

 # Safety
 `out` must point to a writable pointer slot.
 */
enum AntidimStatus antidim_graph_from_family(enum AntidimFamily kind,
                                             uint64_t r,
                                             uint64_t s,
                                             struct AntidimGraph **out);

/*
 Parses the edge-list text format (`n m` header, `u v` lines, `#`
 comments).

 # Safety
 `text` must be a valid NUL-terminated string and `out` writable.
 */
enum AntidimStatus antidim_graph_parse(const char *text, struct AntidimGraph **out);

/*
 Generates a seeded random instance and returns it as a graph handle.

 # Safety
 `out` must point to a writable pointer slot.
 */
enum AntidimStatus antidim_graph_generate(enum AntidimGenClass class_,
                                          uint64_t n,
                                          uint64_t delta,
                                          uint64_t seed,
                                          struct AntidimGraph **out);

/*
 Frees a graph handle; null is a no-op.

 # Safety
 `g` must be null or a pointer previously returned by a graph constructor
 and not yet freed.
 */
void antidim_graph_free(struct AntidimGraph *g);

/*
 # Safety
 `g` must be a live graph handle or null (returns 0).
 */
uint64_t antidim_graph_vertex_count(const struct AntidimGraph *g);

/*
 # Safety
 `g` must be a live graph handle or null (returns 0).
 */
uint64_t antidim_graph_edge_count(const struct AntidimGraph *g);

/*
 # Safety
 `g` must be a live graph handle or null (returns 0).
 */
uint64_t antidim_graph_max_degree(const struct AntidimGraph *g);

/*
 # Safety
 `g` must be a live graph handle or null (returns false).
 */
bool antidim_graph_is_connected(const struct AntidimGraph *g);

/*
 Searches for a minimum k-antiresolving set. The witness vertices (up to
 `witness_cap`) are written to `witness` when the state is `Optimal`;
 pass a buffer of `n` entries to be safe.

 # Safety
 `g` must be a live handle, `result` writable, and `witness` must point
 to `witness_cap` writable u64 values (null allowed when the cap is 0).
 */
enum AntidimStatus antidim_solve(const struct AntidimGraph *g,
                                 uint64_t k,
                                 enum AntidimSemantics semantics,
                                 uint64_t bound,
                                 uint64_t threads,
                                 uint64_t *witness,
                                 uint64_t witness_cap,
                                 struct AntidimSolveResult *result);

/*
 Metric antidimensionality. `*out_exact` tells whether the value is
 certified or only a lower bound for the explored cardinalities.

 # Safety
 `g` must be a live handle; `out_value` and `out_exact` writable.
 */
enum AntidimStatus antidim_kappa(const struct AntidimGraph *g,
                                 uint64_t bound,
                                 uint64_t *out_value,
                                 bool *out_exact);

/*
 Minimum equivalence-class size induced by a subject set (1-indexed).

 # Safety
 `g` must be a live handle, `set` must point to `set_len` readable u64
 values, `out` writable.
 */
enum AntidimStatus antidim_k_of(const struct AntidimGraph *g,
                                const uint64_t *set,
                                uint64_t set_len,
                                uint64_t *out);

/*
 Closed-form k-metric antidimension of a product family. On success
 either `*out_infinite` is set or `*out_value` holds the finite value.

 # Safety
 `out_value` and `out_infinite` must be writable.
 */
enum AntidimStatus antidim_closed_adim(enum AntidimFamily kind,
                                       uint64_t r,
                                       uint64_t s,
                                       uint64_t k,
                                       uint64_t *out_value,
                                       bool *out_infinite);

/*
 Closed-form metric antidimensionality of a product family.

 # Safety
 `out` must be writable.
 */
enum AntidimStatus antidim_closed_kappa(enum AntidimFamily kind,
                                        uint64_t r,
                                        uint64_t s,
                                        uint64_t *out);

/*
 Smallest privacy threshold k whose antidimension is at most `ell`;
 `*out_found` is false when no such k exists.

 # Safety
 `out_k` and `out_found` must be writable.
 */
enum AntidimStatus antidim_closed_anonymity(enum AntidimFamily kind,
                                            uint64_t r,
                                            uint64_t s,
                                            uint64_t ell,
                                            uint64_t *out_k,
                                            bool *out_found);

/*
 Renders the chosen model as LP text; free the string with
 [`antidim_string_free`].

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum AntidimStatus antidim_lp_emit(const struct AntidimGraph *g,
                                   uint64_t k,
                                   enum AntidimVariant variant,
                                   char **out);

/*
 Renders a seeded instance as edge-list text (with its header comment);
 free with [`antidim_string_free`].

 # Safety
 `out` must be writable.
 */
enum AntidimStatus antidim_render_instance(enum AntidimGenClass class_,
                                           uint64_t n,
                                           uint64_t delta,
                                           uint64_t seed,
                                           char **out);

/*
 Frees a string returned by this library; null is a no-op.

 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void antidim_string_free(char *s);

/*
 Static description of a status code.
 */
const char *antidim_status_message(enum AntidimStatus status);

/*
 Thread-local detail for the most recent failure on this thread; valid
 until the next failing call.
 */
const char *antidim_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ANTIDIM_H */
