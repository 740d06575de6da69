#ifndef ACKKIT_ACKKIT_H
#define ACKKIT_ACKKIT_H

/* C interface to the ackkit shared library.
 *
 * Graphs are opaque handles. Every call that can fail returns an
 * ackkit_status; on failure ackkit_last_error() describes the problem (the
 * message is thread-local and valid until the next failing call on the same
 * thread). Strings returned through char** out-parameters are owned by the
 * caller and released with ackkit_string_free. Reports are JSON text in the
 * schema described in the README. */

#include <stddef.h>

#if defined(ACKKIT_BUILDING_LIBRARY)
#define ACKKIT_API __attribute__((visibility("default")))
#else
#define ACKKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ackkit_graph ackkit_graph;

typedef enum ackkit_status {
  ACKKIT_OK = 0,
  ACKKIT_ERR_INVALID_ARGUMENT = 1, /* bad parameter, malformed graph */
  ACKKIT_ERR_PARSE = 2,            /* graph6 / edge-list syntax error */
  ACKKIT_ERR_IO = 3,               /* unreadable or unwritable file */
  ACKKIT_ERR_PRECONDITION = 4,     /* construction hypothesis violated */
  ACKKIT_ERR_NO_EDGES = 5,         /* witness search on an edgeless graph */
  ACKKIT_ERR_NOT_FOUND = 6,        /* unknown catalog name or family */
  ACKKIT_ERR_INTERNAL = 7
} ackkit_status;

ACKKIT_API const char* ackkit_last_error(void);
ACKKIT_API const char* ackkit_status_name(ackkit_status status);
ACKKIT_API const char* ackkit_version(void);
ACKKIT_API void ackkit_string_free(char* s);

/* Graph handles. `pairs` holds edge_count (u, v) pairs, 1-based. */
ACKKIT_API ackkit_status ackkit_graph_from_edges(int n, const int* pairs, size_t edge_count, ackkit_graph** out);
/* format: "graph6" or "edgelist". */
ACKKIT_API ackkit_status ackkit_graph_parse(const char* text, const char* format, ackkit_graph** out);
/* spec: "catalog:NAME", "satellite:K", "cycle:N", "path:N", "complete:N" or
 * a file path (.g6/.graph6 read as graph6, anything else as an edge list). */
ACKKIT_API ackkit_status ackkit_graph_load(const char* spec, ackkit_graph** out);
ACKKIT_API void ackkit_graph_free(ackkit_graph* g);
ACKKIT_API int ackkit_graph_order(const ackkit_graph* g);
ACKKIT_API size_t ackkit_graph_edge_count(const ackkit_graph* g);
ACKKIT_API ackkit_status ackkit_graph_emit(const ackkit_graph* g, const char* format, char** out);

ACKKIT_API size_t ackkit_catalog_size(void);
/* NULL when index is out of range. */
ACKKIT_API const char* ackkit_catalog_name(size_t index);
/* JSON object {name, n, edge_count, expected_nullity, expected_kernel, notes}. */
ACKKIT_API ackkit_status ackkit_catalog_info(const char* name, char** out_json);

/* Runs a construction. family is one of "satellite", "catalog", "cycle",
 * "path", "complete", "k2_product", "add_vertex_dominating",
 * "nut_extension", "multi_attach", "duplicate_vertices"; params_json is a
 * JSON object whose keys are listed in the README. The summary JSON carries
 * the certified kernel vectors, named hypothesis checks and any witness
 * search. On ACKKIT_ERR_PRECONDITION the message names the failed checks. */
ACKKIT_API ackkit_status ackkit_construct(const char* family, const char* params_json, ackkit_graph** out_graph,
                                          char** out_summary_json);

typedef struct ackkit_verify_options {
  int limit_n;        /* search limit for the orthogonality search */
  int degree_filter;  /* nonzero: skip row comparison for non-degree sizes */
  int oracle;         /* nonzero: also run the brute-force oracle */
  int oracle_limit_n;
  int timings; /* nonzero: include per-phase milliseconds */
} ackkit_verify_options;

ACKKIT_API void ackkit_verify_options_init(ackkit_verify_options* options);

/* Full report including the witness search. The ACK status is returned
 * through out_ack_status (0 witness, 1 no witness, 2 aborted) when non-NULL.
 * `options` may be NULL for defaults. */
ACKKIT_API ackkit_status ackkit_verify(const ackkit_graph* g, const ackkit_verify_options* options,
                                       char** out_report_json, int* out_ack_status);
/* Report without the witness search; works on edgeless graphs too. */
ACKKIT_API ackkit_status ackkit_classify(const ackkit_graph* g, char** out_report_json);

/* Verifies every .g6/.graph6/.edges file in dir. json_out_dir may be NULL. */
ACKKIT_API ackkit_status ackkit_batch_run(const char* dir, int workers, int limit_n, const char* json_out_dir,
                                          char** out_summary_json);

#ifdef __cplusplus
}
#endif

#endif /* ACKKIT_ACKKIT_H */
