#ifndef RVC_H
#define RVC_H

/* Generated by cbindgen from rvc-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes mirroring the command-line exit codes.
typedef enum RvcStatus {
  RVC_STATUS_OK = 0,
  RVC_STATUS_INVALID_INPUT = 1,
  RVC_STATUS_NOT_IN_CLASS = 2,
  RVC_STATUS_VERIFICATION_FAILED = 3,
  RVC_STATUS_INCONCLUSIVE = 4,
  RVC_STATUS_NULL_ARGUMENT = 5,
} RvcStatus;

// Opaque vertex coloring handle.
typedef struct RvcColoring RvcColoring;

// Opaque undirected graph handle.
typedef struct RvcGraph RvcGraph;

// Opaque permutation model handle.
typedef struct RvcModel RvcModel;

// Opaque tree-plus-exponent handle.
typedef struct RvcTreePower RvcTreePower;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent error on this thread. The pointer
// stays valid until the next failing call on the same thread.
const char *rvc_last_error(void);

// Parses a `graph <n> <m>` text into a graph handle.
//
// # Safety
// `text` must be a valid NUL-terminated C string; `out` must be a valid
// pointer.
enum RvcStatus rvc_graph_parse(const char *text, struct RvcGraph **out);

// # Safety
// `g` must be a pointer previously returned by this library, not yet
// freed; null is ignored.
void rvc_graph_free(struct RvcGraph *g);

// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
size_t rvc_graph_vertex_count(const struct RvcGraph *g);

// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
size_t rvc_graph_edge_count(const struct RvcGraph *g);

// Writes the diameter to `out`; fails on disconnected graphs.
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_graph_diameter(const struct RvcGraph *g, size_t *out);

// Writes the number of cut vertices to `out`.
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_graph_cut_vertex_count(const struct RvcGraph *g, size_t *out);

// Parses a `perm <n>` model text.
//
// # Safety
// As [`rvc_graph_parse`].
enum RvcStatus rvc_model_parse(const char *text, struct RvcModel **out);

// # Safety
// As [`rvc_graph_free`].
void rvc_model_free(struct RvcModel *m);

// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
size_t rvc_model_vertex_count(const struct RvcModel *m);

// The permutation graph induced by a model.
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_model_to_graph(const struct RvcModel *m, struct RvcGraph **out);

// Optimal rainbow vertex coloring of a permutation graph given its model.
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_color_permutation(const struct RvcModel *m, struct RvcColoring **out);

// Parses a `treepow <n> <k>` text.
//
// # Safety
// As [`rvc_graph_parse`].
enum RvcStatus rvc_tree_power_parse(const char *text, struct RvcTreePower **out);

// # Safety
// As [`rvc_graph_free`].
void rvc_tree_power_free(struct RvcTreePower *t);

// The graph `T^k` of a tree-power handle.
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_tree_power_graph(const struct RvcTreePower *t, struct RvcGraph **out);

// Optimal rainbow vertex coloring of `T^k` (the tree coloring for k = 1).
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_color_tree_power(const struct RvcTreePower *t, struct RvcColoring **out);

// Optimal strong rainbow vertex coloring of a split strongly chordal
// graph; rejects anything outside the class.
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_color_split_strongly_chordal(const struct RvcGraph *g, struct RvcColoring **out);

// Builds the split-graph reduction gadget of a source graph.
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_build_split_gadget(const struct RvcGraph *g, struct RvcGraph **out);

// # Safety
// As [`rvc_graph_free`].
void rvc_coloring_free(struct RvcColoring *c);

// Number of distinct colors actually used.
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
size_t rvc_coloring_color_count(const struct RvcColoring *c);

// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
size_t rvc_coloring_vertex_count(const struct RvcColoring *c);

// Color of a 0-indexed vertex (colors are 1-based); 0 on bad arguments.
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
size_t rvc_coloring_color_of(const struct RvcColoring *c, size_t vertex);

// Serializes a coloring into a newly allocated string; free it with
// [`rvc_string_free`].
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_coloring_to_text(const struct RvcColoring *c, char **out);

// # Safety
// `s` must originate from this library and not have been freed.
void rvc_string_free(char *s);

// Checks rainbow (or strong rainbow) vertex connectivity.
//
// On success `*ok` says whether the coloring verifies; when it does not,
// `*fail_u` / `*fail_v` carry the first failing pair (0-indexed).
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_verify(const struct RvcGraph *g,
                          const struct RvcColoring *c,
                          bool strong,
                          bool *ok,
                          size_t *fail_u,
                          size_t *fail_v);

// Exact minimum color count by exhaustive search (small graphs only).
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_exact(const struct RvcGraph *g, bool strong, size_t max_colors, size_t *out);

// Rainbow witness path between two 0-indexed vertices under a coloring
// produced by [`rvc_color_permutation`] on the same model. On success
// `*out_path` points to a newly allocated array of `*out_len` vertex ids;
// free it with [`rvc_path_free`].
// # Safety
// Handle arguments must be valid pointers obtained from this library
// and not yet freed; output pointers must be valid for writes.
enum RvcStatus rvc_witness_permutation(const struct RvcModel *m,
                                       const struct RvcColoring *c,
                                       size_t u,
                                       size_t v,
                                       size_t **out_path,
                                       size_t *out_len);

// # Safety
// `path`/`len` must come from [`rvc_witness_permutation`].
void rvc_path_free(size_t *path, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RVC_H */
