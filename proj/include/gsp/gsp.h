#ifndef GSP_GSP_H
#define GSP_GSP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GSP_API __declspec(dllexport)
#else
#define GSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status. On anything but GSP_OK, gsp_last_error() holds
   {"error": code, "message": text, "witness": ...} for the calling thread. Strings returned
   through char** are JSON owned by the caller and released with gsp_string_free. Vertices are
   the species labels, not positions. */

typedef enum gsp_status {
  GSP_OK = 0,
  GSP_ERR_INVALID_ARGUMENT = 1, /* null pointer, malformed JSON or schema */
  GSP_ERR_DOMAIN = 2,           /* undefined mutation, relation violation, ... */
  GSP_ERR_NOT_FOUND = 3,        /* unknown session id */
  GSP_ERR_INTERNAL = 4
} gsp_status;

typedef enum gsp_engine {
  GSP_ENGINE_FG = 0,   /* combinatorial (F, g) recursion on B(A) */
  GSP_ENGINE_REP = 1,  /* decorated representations */
  GSP_ENGINE_BOTH = 2  /* both, failing with EngineMismatch when they differ */
} gsp_engine;

/* Group species with potential. Immutable once built. */
typedef struct gsp_gsp gsp_gsp;
/* In-memory session store, safe to share between threads. */
typedef struct gsp_sessions gsp_sessions;

GSP_API const char* gsp_version(void);
GSP_API const char* gsp_last_error(void);
GSP_API void gsp_string_free(char* s);

/* {"species": ..., "potential": ...}, {"matrix": {"labels", "rows"}, "d": [...]} or a bare species. */
GSP_API gsp_status gsp_gsp_from_json(const char* json, gsp_gsp** out);
GSP_API void gsp_gsp_free(gsp_gsp* g);
GSP_API gsp_status gsp_gsp_to_json(const gsp_gsp* g, char** out);

GSP_API gsp_status gsp_b_matrix(const gsp_gsp* g, char** out);
/* d_json may be NULL for the minimal symmetrizer. */
GSP_API gsp_status gsp_species_from_matrix(const char* matrix_json, const char* d_json, char** out);
/* Report JSON in *out_report; the reduced GSP in *out_gsp when out_gsp is not NULL. */
GSP_API gsp_status gsp_mutate(const gsp_gsp* g, int k, gsp_gsp** out_gsp, char** out_report);

GSP_API gsp_status gsp_fg(const gsp_gsp* g, const int* seq, size_t seq_len, int vertex, gsp_engine engine,
                          char** out);
GSP_API gsp_status gsp_rep_mutate(const gsp_gsp* g, const char* rep_json, int k, char** out);

/* options: {"suites": [...], "max_len": n, "fault": "none"|"corrupt-f"|"corrupt-g", "max_coeff": n,
   "threads": n, "reproducer_input": "..."}. Suite failures are report content, not errors. */
GSP_API gsp_status gsp_verify(const gsp_gsp* g, const char* options_json, char** out);

GSP_API gsp_status gsp_example_c3(char** out);
GSP_API gsp_status gsp_counterexample(int max_m, char** out);
GSP_API gsp_status gsp_probe(const gsp_gsp* g, size_t max_len, size_t trials, uint64_t seed, char** out);

GSP_API gsp_sessions* gsp_sessions_new(void);
GSP_API void gsp_sessions_free(gsp_sessions* s);
GSP_API gsp_status gsp_session_create(gsp_sessions* s, const char* body_json, char** out);
GSP_API gsp_status gsp_session_mutate(gsp_sessions* s, const char* id, int k, char** out);
GSP_API gsp_status gsp_session_undo(gsp_sessions* s, const char* id, char** out);
GSP_API gsp_status gsp_session_get(gsp_sessions* s, const char* id, char** out);

/* Serves the session API over HTTP until the process ends. Fails when the port cannot be bound. */
GSP_API gsp_status gsp_serve(const char* host, int port);

#ifdef __cplusplus
}
#endif

#endif
