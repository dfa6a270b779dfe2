/* C interface to the degenlab core.
 *
 * A context holds the loaded algebra, module point, curve and settings, plus
 * the text produced by the last operation and the last error message. Inputs
 * are file contents, not paths. Strings returned by the library stay valid
 * until the next call on the same context.
 */
#ifndef DEGENLAB_H
#define DEGENLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dgl_context dgl_context;

typedef enum {
  DGL_OK = 0,
  DGL_PARSE_ERROR = 1,       /* malformed input text; message carries line and column */
  DGL_NEEDS_SPLIT_INPUT = 2, /* the working field is too small for the request */
  DGL_PRECONDITION = 3,      /* input outside the operation's domain */
  DGL_MISSING_INPUT = 4,     /* algebra, module or curve not loaded */
  DGL_INTERNAL = 5
} dgl_status;

typedef enum { DGL_MODE_FULL = 0, DGL_MODE_UNIPOTENT = 1, DGL_MODE_TORUS = 2 } dgl_mode;

dgl_context* dgl_context_new(void);
void dgl_context_free(dgl_context* ctx);

const char* dgl_version(void);
const char* dgl_status_name(dgl_status s);
/* Message of the last failed call; empty after a success. */
const char* dgl_last_error(const dgl_context* ctx);
/* Output of the last successful operation. */
const char* dgl_result(const dgl_context* ctx);

/* "rational" or "fp:P". Applies to algebras loaded afterwards. */
dgl_status dgl_set_field(dgl_context* ctx, const char* spec);
dgl_status dgl_set_seed(dgl_context* ctx, uint64_t seed);

/* Loading an algebra drops any loaded module and curve. */
dgl_status dgl_load_algebra(dgl_context* ctx, const char* text);
dgl_status dgl_load_module(dgl_context* ctx, const char* text);
dgl_status dgl_load_curve(dgl_context* ctx, const char* text);

/* Degeneration report as JSON. */
dgl_status dgl_check(dgl_context* ctx, dgl_mode mode);
/* m, orbit dimension, layering and related numbers as JSON. */
dgl_status dgl_invariants(dgl_context* ctx);
/* Flat limit of the loaded curve applied to the module, as a module file. */
dgl_status dgl_limit(dgl_context* ctx);
/* Normal form of a maximal point, as a module file. */
dgl_status dgl_normal_form(dgl_context* ctx);
/* Indecomposable summands, as module files separated by comment lines. */
dgl_status dgl_decompose(dgl_context* ctx);
/* Path bases and chart systems for the module's top. `dims` is a
 * comma-separated dimension vector, or NULL for that of the loaded module. */
dgl_status dgl_charts(dgl_context* ctx, const char* dims, int truncation_closed);
/* Algebra file for V(h_1, ..., h_s) ⊆ P^m. `polys` holds the polynomials
 * separated by ';'. m < 0 infers it from the variables; levels = 0 uses the
 * largest degree. */
dgl_status dgl_compile_variety(dgl_context* ctx, const char* polys, int m, int levels);

#ifdef __cplusplus
}
#endif

#endif /* DEGENLAB_H */
