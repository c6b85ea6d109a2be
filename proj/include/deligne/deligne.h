/* C interface to the deligne library.
 *
 * Every call returns a status code; results come back in an opaque dg_result
 * that owns its strings. Status codes double as the CLI exit codes. */
#ifndef DELIGNE_H
#define DELIGNE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DG_API __declspec(dllexport)
#else
#define DG_API __attribute__((visibility("default")))
#endif

typedef enum dg_status {
    DG_OK = 0,
    DG_ERR_PARSE = 1,    /* malformed bipartition, delta, JSON, ... */
    DG_ERR_DOMAIN = 2,   /* precondition violated (wrong ring, bad rank, ...) */
    DG_ERR_INTERNAL = 3  /* internal assertion failed */
} dg_status;

typedef struct dg_context dg_context;
typedef struct dg_result dg_result;

DG_API const char* dg_version(void);

DG_API dg_context* dg_context_new(void);
DG_API void dg_context_free(dg_context* ctx);
DG_API const char* dg_last_error(const dg_context* ctx);
DG_API int dg_set_threads(dg_context* ctx, int threads);
/* load LR records from path (a corrupt file is ignored) and remember the
 * path for dg_cache_save */
DG_API int dg_cache_open(dg_context* ctx, const char* path);
DG_API int dg_cache_save(dg_context* ctx);

/* delta arguments: "t", "p" or "p/q"; bipartitions: "(3,2|3,1)" */
DG_API int dg_lift(dg_context* ctx, const char* delta, const char* bp, dg_result** out);
DG_API int dg_unlift(dg_context* ctx, const char* delta, const char* vector_json, dg_result** out);
DG_API int dg_tensor(dg_context* ctx, const char* delta, const char* bp1, const char* bp2, dg_result** out);
DG_API int dg_char(dg_context* ctx, int m, int n, const char* bp, dg_result** out);
DG_API int dg_dim(dg_context* ctx, int m, int n, const char* bp, dg_result** out);
DG_API int dg_caps(dg_context* ctx, const char* delta, const char* bp, dg_result** out);
DG_API int dg_cross(dg_context* ctx, int m, int n, const char* bp, dg_result** out);
DG_API int dg_form(dg_context* ctx, const char* delta, const char* bp1, const char* bp2, dg_result** out);
/* suite: lr | gamma | hom | golden | all. DG_OK means the sweep ran; see
 * dg_result_passed for the verdict. dump_diagrams adds the primitive
 * idempotents of the hom sweep to the output. */
DG_API int dg_check(dg_context* ctx, const char* suite, int dump_diagrams, dg_result** out);

DG_API const char* dg_result_text(const dg_result* r);
DG_API const char* dg_result_json(const dg_result* r);
/* integer payload of dim/form/cross; returns DG_ERR_DOMAIN for other results */
DG_API int dg_result_integer(const dg_result* r, long long* value);
DG_API int dg_result_passed(const dg_result* r);
DG_API void dg_result_free(dg_result* r);

#ifdef __cplusplus
}
#endif

#endif
