/*
 * C API for the Grothendieck-inequality toolkit.
 *
 * All entry points are exported from the shared library with C linkage and
 * communicate through opaque handles and status codes.  Reports are JSON
 * (or CSV for curve tables) retrieved as NUL-terminated strings owned by
 * the result handle.  Handles are freed with the matching *_free call;
 * passing NULL to a *_free is a no-op.
 *
 * Thread safety: handles are not internally synchronised; use one handle
 * per thread or guard externally.  gk_last_error() is thread-local.
 */

#ifndef GROTHENDIECK_H
#define GROTHENDIECK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GK_API __declspec(dllexport)
#else
#define GK_API __attribute__((visibility("default")))
#endif

typedef enum gk_status {
  GK_OK = 0,
  GK_ERR_INVALID_ARGUMENT = 1, /* bad parameters, schema violations */
  GK_ERR_DOMAIN = 2,           /* numeric input outside a function's domain */
  GK_ERR_BUDGET = 3,           /* enumeration budget exceeded */
  GK_ERR_INTERNAL = 4          /* invariant failure inside the library */
} gk_status;

typedef struct gk_config gk_config;
typedef struct gk_instance gk_instance;
typedef struct gk_result gk_result;

GK_API const char* gk_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
GK_API const char* gk_last_error(void);

/* ----- run configuration (defaults: seed 42, samples 100000, starts 16,
 *       series order 256, kmax 17, threads 0 = auto, timestamp on) ----- */
GK_API gk_config* gk_config_new(void);
GK_API void gk_config_free(gk_config* cfg);
GK_API gk_status gk_config_set_seed(gk_config* cfg, uint64_t seed);
GK_API gk_status gk_config_set_samples(gk_config* cfg, int64_t samples);
GK_API gk_status gk_config_set_starts(gk_config* cfg, int32_t starts);
GK_API gk_status gk_config_set_series_order(gk_config* cfg, int32_t order);
GK_API gk_status gk_config_set_kmax(gk_config* cfg, int32_t kmax);
GK_API gk_status gk_config_set_threads(gk_config* cfg, int32_t threads);
GK_API gk_status gk_config_set_timestamp(gk_config* cfg, int32_t enabled);

/* ----- problem instances ----- */

/* Parses {"m","n","field","entries"} (entries row-major, numbers or
 * [re,im] pairs).  On success *out owns the instance. */
GK_API gk_status gk_instance_from_json(const char* json_text,
                                       gk_instance** out);
GK_API void gk_instance_free(gk_instance* inst);

/* Promote/validate against a requested field tag ("real"/"complex"). */
GK_API gk_status gk_instance_set_field(gk_instance* inst, const char* field);

GK_API int32_t gk_instance_rows(const gk_instance* inst);
GK_API int32_t gk_instance_cols(const gk_instance* inst);
GK_API int32_t gk_instance_is_complex(const gk_instance* inst);

/* ----- pipelines; each fills *out with a result handle ----- */

GK_API gk_status gk_constants(const gk_config* cfg, gk_result** out);

/* mode: "discrete" | "relaxation" | "both" */
GK_API gk_status gk_solve(const gk_instance* inst, const char* mode,
                          const gk_config* cfg, gk_result** out);

/* scheme: "krivine" | "haagerup" (must match the instance field) */
GK_API gk_status gk_round(const gk_instance* inst, const char* scheme,
                          const gk_config* cfg, gk_result** out);

/* target: "lemma21" | "phase" | "corollary" | "section5" | "coeffs" | "all" */
GK_API gk_status gk_verify(const char* target, const gk_config* cfg,
                           gk_result** out);

/* grid: "start:stop:count" (count 0 gives a header-only table) */
GK_API gk_status gk_curves(const char* grid, const gk_config* cfg,
                           gk_result** out);

/* ----- results ----- */

/* JSON (or CSV for gk_curves) payload; owned by the handle. */
GK_API const char* gk_result_text(const gk_result* res);

/* 1 when every check in the report passed, else 0 (curves: always 1). */
GK_API int32_t gk_result_ok(const gk_result* res);

GK_API void gk_result_free(gk_result* res);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GROTHENDIECK_H */
