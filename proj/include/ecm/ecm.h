#ifndef ECM_ECM_H
#define ECM_ECM_H

/* C interface to the edge colouring model library. Every function that can
 * fail returns an ecm_status; on failure ecm_last_error() describes it (per
 * thread, valid until the next failing call on that thread). Strings returned
 * through char** are owned by the caller and released with ecm_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ECM_BUILDING_LIBRARY)
#    define ECM_API __declspec(dllexport)
#  else
#    define ECM_API __declspec(dllimport)
#  endif
#else
#  define ECM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecm_status {
  ECM_OK = 0,
  ECM_INVALID_ARGUMENT = 1,
  ECM_PARSE_ERROR = 2,
  ECM_CAP_EXCEEDED = 3,
  ECM_MISMATCH = 4,
  ECM_INTERNAL = 5
} ecm_status;

typedef struct ecm_graph ecm_graph;
typedef struct ecm_tutte ecm_tutte;
typedef struct ecm_report ecm_report;

typedef struct ecm_complex {
  double re;
  double im;
} ecm_complex;

typedef struct ecm_model_value {
  ecm_complex value;
  double magnitude;
  double imag_residual;
  uint64_t terms;
} ecm_model_value;

/* Default enumeration cap, 1e8 terms. */
#define ECM_DEFAULT_MAX_TERMS 100000000ULL

ECM_API const char* ecm_version(void);
ECM_API const char* ecm_status_name(ecm_status status);
ECM_API const char* ecm_last_error(void);
ECM_API void ecm_string_free(char* s);

/* Graphs. */
ECM_API ecm_status ecm_graph_parse(const char* text, ecm_graph** out);
ECM_API ecm_status ecm_graph_read(const char* path, ecm_graph** out);
/* A built-in graph by name: single_edge, single_loop, digon, triangle, c4,
 * theta, k4, prism, k33, octahedron, petersen. */
ECM_API ecm_status ecm_graph_corpus(const char* name, ecm_graph** out);
ECM_API ecm_status ecm_graph_serialize(const ecm_graph* g, char** out);
ECM_API size_t ecm_graph_vertex_count(const ecm_graph* g);
ECM_API size_t ecm_graph_edge_count(const ecm_graph* g);
ECM_API int ecm_graph_has_rotation(const ecm_graph* g);
ECM_API void ecm_graph_free(ecm_graph* g);
/* Writes <name>.g for every built-in graph into dir. */
ECM_API ecm_status ecm_corpus_write(const char* dir);

/* Exact invariants. Integers come back as decimal strings. */
ECM_API ecm_status ecm_tutte_compute(const ecm_graph* g, uint64_t max_terms, ecm_tutte** out);
ECM_API ecm_status ecm_tutte_string(const ecm_tutte* t, char** out);
ECM_API ecm_status ecm_tutte_coefficient(const ecm_tutte* t, int i, int j, char** out);
ECM_API void ecm_tutte_free(ecm_tutte* t);
ECM_API ecm_status ecm_flow_polynomial(const ecm_graph* g, int q, uint64_t max_terms, char** out);
ECM_API ecm_status ecm_chromatic(const ecm_graph* g, int q, uint64_t max_terms, char** out);

/* Weight enumerators of the flows (tensions != 0: the tensions) over the
 * group given as "q", "n1xn2..." or "f4". hwe takes the weight of a zero
 * entry; cwe takes one weight per group element. */
ECM_API ecm_status ecm_hwe(const ecm_graph* g, const char* group, int tensions, ecm_complex s, uint64_t max_terms,
                           ecm_complex* out);
ECM_API ecm_status ecm_cwe(const ecm_graph* g, const char* group, int tensions, const ecm_complex* weights,
                           size_t n, uint64_t max_terms, ecm_complex* out);

/* Colouring models. The cwe models compute cwe(ker d; w w^N) from weights w;
 * the tutte edge model is the hyperbola specialization at s^2; the monochrome
 * vertex model is sum_x t^{#monochromatic edges}; the szegedy models take a
 * vertex weight f (q entries) and a real symmetric q x q edge weight, row-major. */
ECM_API ecm_status ecm_cwe_vertex_model(const ecm_graph* g, const char* group, const ecm_complex* weights, size_t n,
                                        uint64_t max_terms, ecm_model_value* out);
ECM_API ecm_status ecm_cwe_edge_model(const ecm_graph* g, const char* group, const ecm_complex* weights, size_t n,
                                      uint64_t max_terms, ecm_model_value* out);
ECM_API ecm_status ecm_tutte_edge_model(const ecm_graph* g, int q, ecm_complex s, uint64_t max_terms,
                                        ecm_model_value* out);
ECM_API ecm_status ecm_monochrome_vertex_model(const ecm_graph* g, int q, ecm_complex t, uint64_t max_terms,
                                               ecm_model_value* out);
ECM_API ecm_status ecm_szegedy_vertex_model(const ecm_graph* g, int q, const ecm_complex* f, const double* edge_weight,
                                            uint64_t max_terms, ecm_model_value* out);
ECM_API ecm_status ecm_szegedy_edge_model(const ecm_graph* g, int q, const ecm_complex* f, const double* edge_weight,
                                          uint64_t max_terms, ecm_model_value* out);

/* X_Q with vertex weights s and edge weights t (n = group order each): the
 * vertex sum and its dual flow sum. */
ECM_API ecm_status ecm_xq(const ecm_graph* g, const char* group, const ecm_complex* s, const ecm_complex* t, size_t n,
                          uint64_t max_terms, ecm_complex* primal, ecm_complex* dual);

/* Signed edge colourings. All need a rotation system on g. */
ECM_API ecm_status ecm_sine_model(const ecm_graph* g, int q, int k, uint64_t max_terms, ecm_model_value* out);
ECM_API ecm_status ecm_kplus1_sign_sum(const ecm_graph* g, int k, uint64_t max_terms, ecm_model_value* out);
ECM_API ecm_status ecm_proper_sign_sum(const ecm_graph* g, int k, uint64_t max_terms, long long* signed_sum,
                                       uint64_t* count);
ECM_API ecm_status ecm_even_minus_odd4(const ecm_graph* g, uint64_t max_terms, long long* difference);

/* The identity battery. suite is "all", "fourier", "duality" or "signed".
 * With n_graphs = 0 the built-in corpus is used (names may be NULL then);
 * with n_qs = 0 each check uses its default group orders. */
ECM_API ecm_status ecm_verify(const char* suite, const ecm_graph* const* graphs, const char* const* names,
                              size_t n_graphs, const int* qs, size_t n_qs, double tol, uint64_t max_terms,
                              uint64_t seed, ecm_report** out);
ECM_API size_t ecm_report_count(const ecm_report* r);
ECM_API size_t ecm_report_skipped(const ecm_report* r);
ECM_API size_t ecm_report_failures(const ecm_report* r);
/* One JSON object per line. */
ECM_API ecm_status ecm_report_jsonl(const ecm_report* r, char** out);
ECM_API void ecm_report_free(ecm_report* r);

#ifdef __cplusplus
}
#endif

#endif /* ECM_ECM_H */
