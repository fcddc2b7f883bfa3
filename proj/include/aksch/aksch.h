/* C interface to the aksch library.
 *
 * Objects are opaque handles. Every fallible call returns an aksch_status;
 * on failure the context keeps a message readable with aksch_last_error.
 * Structured results come back as an aksch_result holding a JSON document.
 */
#ifndef AKSCH_H
#define AKSCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AKSCH_API __declspec(dllexport)
#elif defined(__GNUC__)
#define AKSCH_API __attribute__((visibility("default")))
#else
#define AKSCH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct aksch_context aksch_context;
typedef struct aksch_params aksch_params;
typedef struct aksch_modular aksch_modular;
typedef struct aksch_result aksch_result;

typedef enum aksch_status {
  AKSCH_OK = 0,
  AKSCH_INVALID_ARGUMENT = 1,
  AKSCH_REGIME = 2,     /* computation undefined in this parameter regime */
  AKSCH_DEGENERATE = 3, /* modular system does not separate a pair */
  AKSCH_IO = 4,
  AKSCH_INTERNAL = 5
} aksch_status;

typedef enum aksch_verdict_kind {
  AKSCH_SEMISIMPLE = 0,
  AKSCH_FINITE = 1,
  AKSCH_INFINITE = 2,
  AKSCH_WILD = 3,
  AKSCH_OUT_OF_SCOPE = 4
} aksch_verdict_kind;

/* e value meaning q is not a root of unity. */
#define AKSCH_E_INFINITY (-1L)
/* deformation exponent meaning "no t-term" for a component */
#define AKSCH_PURE 0

AKSCH_API const char* aksch_version(void);
AKSCH_API const char* aksch_status_string(aksch_status s);

AKSCH_API aksch_status aksch_context_new(aksch_context** out);
AKSCH_API void aksch_context_free(aksch_context* ctx);
/* Directory for the enumeration cache; NULL or "" disables caching. */
AKSCH_API aksch_status aksch_context_set_cache_dir(aksch_context* ctx, const char* dir);
/* Message of the last failed call on this context ("" if none). */
AKSCH_API const char* aksch_last_error(const aksch_context* ctx);

/* q of order e (or AKSCH_E_INFINITY), Q_k = q^{f[k-1]}, k = 1..r. */
AKSCH_API aksch_status aksch_params_new(aksch_context* ctx, long e, const long* f, size_t r, long char_p,
                                        aksch_params** out);
/* q = Q_1 = ... = Q_r = 1 */
AKSCH_API aksch_status aksch_params_new_q_one(aksch_context* ctx, size_t r, long char_p, aksch_params** out);
AKSCH_API void aksch_params_free(aksch_params* p);

/* Default modular system for r components: c_k = 2k, no q-deformation. */
AKSCH_API aksch_status aksch_modular_new(aksch_context* ctx, size_t r, aksch_modular** out);
/* k is 1-based; c = AKSCH_PURE removes the t-term. */
AKSCH_API aksch_status aksch_modular_set_deform(aksch_context* ctx, aksch_modular* m, size_t k, int c);
/* c0 = 0 disables q-deformation. */
AKSCH_API aksch_status aksch_modular_set_q_deform(aksch_context* ctx, aksch_modular* m, int c0);
/* t = 0 restores the default truncation order. */
AKSCH_API aksch_status aksch_modular_set_truncation(aksch_context* ctx, aksch_modular* m, int t);
AKSCH_API void aksch_modular_free(aksch_modular* m);

AKSCH_API const char* aksch_result_json(const aksch_result* r);
AKSCH_API void aksch_result_free(aksch_result* r);

/* JSON-producing operations. */
AKSCH_API aksch_status aksch_classify(aksch_context* ctx, int n, const aksch_params* p, aksch_result** out);
AKSCH_API aksch_status aksch_classify_orbits(aksch_context* ctx, int n, const aksch_params* const* orbits,
                                             size_t count, aksch_result** out);
AKSCH_API aksch_status aksch_blocks(aksch_context* ctx, int n, const aksch_params* p, aksch_result** out);
/* content may be NULL to cover every block. */
AKSCH_API aksch_status aksch_jantzen(aksch_context* ctx, int n, const aksch_params* p, const aksch_modular* m,
                                     const long* content, size_t content_len, aksch_result** out);
AKSCH_API aksch_status aksch_decompose(aksch_context* ctx, int n, const aksch_params* p, const aksch_modular* m,
                                       const long* content, size_t content_len, aksch_result** out);
/* m may be NULL for the default bounds (n, ..., n). */
AKSCH_API aksch_status aksch_dims(aksch_context* ctx, int n, int r, const int* m, size_t m_len,
                                  aksch_result** out);
/* levels = (r_1..r_g); eps may be NULL to report every weight vector. */
AKSCH_API aksch_status aksch_grading(aksch_context* ctx, int n, const int* m, size_t m_len, const int* levels,
                                     size_t g, const int* eps, aksch_result** out);
AKSCH_API aksch_status aksch_quiver(aksch_context* ctx, int m, aksch_result** out);
AKSCH_API aksch_status aksch_worked_examples(aksch_context* ctx, aksch_result** out);

/* Scalar helpers. Multipartitions are JSON nested arrays, e.g. "[[2,1],[]]". */
AKSCH_API aksch_status aksch_classify_kind(aksch_context* ctx, int n, const aksch_params* p,
                                           aksch_verdict_kind* out);
AKSCH_API aksch_status aksch_is_semisimple(aksch_context* ctx, int n, const aksch_params* p, int* out);
AKSCH_API aksch_status aksch_dim_hecke(aksch_context* ctx, int n, int r, uint64_t* out);
AKSCH_API aksch_status aksch_dim_schur(aksch_context* ctx, int n, int r, const int* m, size_t m_len,
                                       uint64_t* out);
AKSCH_API aksch_status aksch_jantzen_coefficient(aksch_context* ctx, const aksch_params* p,
                                                 const aksch_modular* m, const char* lambda_json,
                                                 const char* mu_json, long* out);

#ifdef __cplusplus
}
#endif

#endif /* AKSCH_H */
