#ifndef ECC_SPECTRA_H
#define ECC_SPECTRA_H

/* Generated by cbindgen from ecc-spectra-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum EccStatus {
  ECC_STATUS_OK = 0,
  ECC_STATUS_NULL_POINTER = 1,
  ECC_STATUS_INVALID_UTF8 = 2,
  ECC_STATUS_PARSE_ERROR = 3,
  ECC_STATUS_INVALID_EDGE = 4,
  ECC_STATUS_VERTEX_OUT_OF_RANGE = 5,
  ECC_STATUS_DISCONNECTED = 6,
  ECC_STATUS_NOT_IN_CLASS = 7,
  ECC_STATUS_BAD_ARGUMENT = 8,
  ECC_STATUS_NO_CONVERGENCE = 9,
  ECC_STATUS_UNKNOWN_FIXTURE = 10,
  ECC_STATUS_INTERNAL_ERROR = 11,
} EccStatus;

/**
 * Opaque graph handle.
 */
typedef struct EccGraph EccGraph;

/**
 * Opaque symmetric-matrix handle.
 */
typedef struct EccMatrix EccMatrix;

/**
 * Inertia triple of a symmetric matrix.
 */
typedef struct EccInertia {
  size_t n_plus;
  size_t n_minus;
  size_t n_zero;
} EccInertia;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent error on this thread, or null.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *ecc_last_error_message(void);

/**
 * Library version string; statically allocated, do not free.
 */
const char *ecc_version(void);

/**
 * Builds a graph from `n_edges` pairs laid out as `u0 v0 u1 v1 ...`.
 *
 * # Safety
 * `edges` must point to `2 * n_edges` readable `usize` values (or be null
 * with `n_edges == 0`); `out` must be a valid pointer.
 */
enum EccStatus ecc_graph_build(size_t n,
                               const size_t *edges,
                               size_t n_edges,
                               struct EccGraph **out);

/**
 * Parses the edge-list text format.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be valid.
 */
enum EccStatus ecc_graph_parse(const char *text, struct EccGraph **out);

/**
 * Loads a built-in graph fixture by name.
 *
 * # Safety
 * `name` must be a valid NUL-terminated string; `out` must be valid.
 */
enum EccStatus ecc_fixture_graph(const char *name, struct EccGraph **out);

/**
 * Parses the matrix text format (`m <order>` header, then rows).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be valid.
 */
enum EccStatus ecc_matrix_parse(const char *text, struct EccMatrix **out);

/**
 * Loads a built-in matrix fixture by name.
 *
 * # Safety
 * `name` must be a valid NUL-terminated string; `out` must be valid.
 */
enum EccStatus ecc_fixture_matrix(const char *name, struct EccMatrix **out);

/**
 * Frees a graph handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a pointer previously returned by this library.
 */
void ecc_graph_free(struct EccGraph *g);

/**
 * Frees a matrix handle. Null is ignored.
 *
 * # Safety
 * `m` must be null or a pointer previously returned by this library.
 */
void ecc_matrix_free(struct EccMatrix *m);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string pointer previously returned by this library.
 */
void ecc_string_free(char *s);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a valid graph handle.
 */
size_t ecc_graph_order(const struct EccGraph *g);

/**
 * Number of edges; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a valid graph handle.
 */
size_t ecc_graph_size(const struct EccGraph *g);

/**
 * Writes the diameter of a connected graph.
 *
 * # Safety
 * `g` must be a valid graph handle; `out` must be valid.
 */
enum EccStatus ecc_graph_diameter(const struct EccGraph *g, uint32_t *out);

/**
 * Writes whether the graph is a clique tree whose blocks have at most two
 * cut-vertices.
 *
 * # Safety
 * `g` must be a valid graph handle; `out` must be valid.
 */
enum EccStatus ecc_graph_in_class(const struct EccGraph *g, bool *out);

/**
 * Writes the exact inertia of the graph's eccentricity matrix.
 *
 * # Safety
 * `g` must be a valid graph handle; `out` must be valid.
 */
enum EccStatus ecc_graph_inertia(const struct EccGraph *g, struct EccInertia *out);

/**
 * Writes the exact inertia of a symmetric matrix.
 *
 * # Safety
 * `m` must be a valid matrix handle; `out` must be valid.
 */
enum EccStatus ecc_matrix_inertia(const struct EccMatrix *m, struct EccInertia *out);

/**
 * Runs the full analysis on a graph and writes the JSON report. Free the
 * string with `ecc_string_free`.
 *
 * # Safety
 * `g` must be a valid graph handle; `id` a valid string or null; `out`
 * must be valid.
 */
enum EccStatus ecc_graph_analyze_json(const struct EccGraph *g, const char *id, char **out);

/**
 * Runs the matrix analysis and writes the JSON report. Free the string
 * with `ecc_string_free`.
 *
 * # Safety
 * `m` must be a valid matrix handle; `id` a valid string or null; `out`
 * must be valid.
 */
enum EccStatus ecc_matrix_analyze_json(const struct EccMatrix *m, const char *id, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ECC_SPECTRA_H */
