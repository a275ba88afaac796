/* C interface for the wchrom library. Generated; do not edit. */

#ifndef WCHROM_H
#define WCHROM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum WchromStatus {
  // Success.
  WchromStatus_Ok = 0,
  // Malformed input: family spec, edge list, polynomial, or argument.
  WchromStatus_InvalidInput = 1,
  // The graph exceeds the edge-enumeration cap.
  WchromStatus_CapExceeded = 2,
  // A direct-sum evaluation exceeds its state budget.
  WchromStatus_BudgetExceeded = 3,
  // Numeric failure: degenerate slice or uncertified root residual.
  WchromStatus_NumericFailure = 4,
  // Internal invariant violation (or a caught panic).
  WchromStatus_InternalError = 5,
  // A required pointer argument was null.
  WchromStatus_NullPointer = 6,
  // A string argument was not valid UTF-8.
  WchromStatus_InvalidUtf8 = 7,
  // The caller-provided buffer is too small; the required size was
  // written to the length out-parameter.
  WchromStatus_BufferTooSmall = 8,
} WchromStatus;

// Opaque graph handle.
typedef struct WchromGraph {
  uint8_t _opaque[0];
} WchromGraph;

// Opaque polynomial handle.
typedef struct WchromPoly {
  uint8_t _opaque[0];
} WchromPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; never freed by the caller.
const char *wchrom_version(void);

// Message for the most recent failure on this thread. The pointer stays
// valid until the next failing call on the same thread; never freed by the
// caller.
const char *wchrom_last_error(void);

// Default edge-enumeration cap (after the WCHROM_CAP environment override).
uintptr_t wchrom_default_cap(void);

// Build a graph from a family spec such as "C:5", "K:4", or "sqcyc:2x4".
enum WchromStatus wchrom_graph_from_family(const char *spec, struct WchromGraph **out);

// Parse the edge-list text format: `n m` header, then one `u v` line per
// edge; `#` comments and blank lines are ignored.
enum WchromStatus wchrom_graph_from_edge_list(const char *text, struct WchromGraph **out);

// Vertex count, or 0 for a null handle.
uintptr_t wchrom_graph_vertex_count(const struct WchromGraph *g);

// Edge count (loops and parallel edges included), or 0 for a null handle.
uintptr_t wchrom_graph_edge_count(const struct WchromGraph *g);

// Release a graph handle. Null is a no-op.
void wchrom_graph_free(struct WchromGraph *g);

// Field-weighted proper-coloring polynomial in (q, w). `cap` of 0 means the
// default edge-enumeration cap.
enum WchromStatus wchrom_ph(const struct WchromGraph *g, uintptr_t cap, struct WchromPoly **out);

// Full partition function in (q, v, w). `cap` of 0 means the default cap.
enum WchromStatus wchrom_potts_z(const struct WchromGraph *g,
                                 uintptr_t cap,
                                 struct WchromPoly **out);

// Zero-field chromatic polynomial in q.
enum WchromStatus wchrom_chromatic(const struct WchromGraph *g, struct WchromPoly **out);

// Canonical text form of a polynomial; release with wchrom_string_free.
enum WchromStatus wchrom_poly_canonical(const struct WchromPoly *p, char **out);

// Exact evaluation at rational points. `bindings` looks like
// "q=2,v=-1,w=1/3"; the result is the exact rational rendered as text.
enum WchromStatus wchrom_poly_eval(const struct WchromPoly *p, const char *bindings, char **out);

// Degree in the named variable, or -1 on error.
int32_t wchrom_poly_degree(const struct WchromPoly *p, const char *var);

// Number of monomials, or 0 for a null handle.
uintptr_t wchrom_poly_term_count(const struct WchromPoly *p);

// Release a polynomial handle. Null is a no-op.
void wchrom_poly_free(struct WchromPoly *p);

// Release a string returned through an out-parameter. Null is a no-op.
void wchrom_string_free(char *s);

// Direct coloring-sum evaluation (the independent oracle). `v` and `w` are
// rational texts such as "-1" or "1/3"; the exact result is rendered as
// text into `out`.
enum WchromStatus wchrom_oracle(const struct WchromGraph *g,
                                uint32_t q,
                                const char *v,
                                const char *w,
                                char **out);

// Certified zeros of a one-variable slice of a (q, w) polynomial. Fix
// `fix_var` ("q" or "w") at the rational `fix_value`; zeros are taken in
// the other variable and written, sorted by (re, im), into the caller's
// arrays. On BufferTooSmall the required length is in `out_count`.
enum WchromStatus wchrom_roots(const struct WchromPoly *p,
                               const char *fix_var,
                               const char *fix_value,
                               double *out_re,
                               double *out_im,
                               uint32_t *out_mult,
                               uintptr_t capacity,
                               uintptr_t *out_count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WCHROM_H */
