#ifndef TOKENTW_H
#define TOKENTW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TW_API __declspec(dllexport)
#else
#define TW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tw_status {
    TW_OK = 0,
    TW_ERR_INVALID = 1,   /* bad parameter or precondition */
    TW_ERR_PARSE = 2,     /* malformed JSON document */
    TW_ERR_RESOURCE = 3,  /* a size cap was exceeded */
    TW_ERR_INTERNAL = 4
} tw_status;

typedef struct tw_graph tw_graph;
typedef struct tw_token_graph tw_token_graph;
typedef struct tw_decomposition tw_decomposition;
typedef struct tw_bramble tw_bramble;

/* Caps; zero fields fall back to the library defaults. */
typedef struct tw_caps {
    size_t token_vertices;
    size_t tw_vertices;
    size_t mmb_vertices;
    size_t eigen_vertices;
    size_t bramble_sets;
    uint64_t hitting_nodes;
} tw_caps;

TW_API const char* tw_version(void);
TW_API void tw_default_caps(tw_caps* caps);

/* Message of the last failed call on this thread ("" if none). */
TW_API const char* tw_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
TW_API void tw_string_free(char* s);

/* Graphs. family is "path", "star" or "complete". */
TW_API tw_status tw_graph_generate(const char* family, int n, tw_graph** out);
TW_API tw_status tw_graph_from_json(const char* json, tw_graph** out);
TW_API tw_status tw_graph_to_json(const tw_graph* g, char** out);
TW_API size_t tw_graph_vertex_count(const tw_graph* g);
TW_API size_t tw_graph_edge_count(const tw_graph* g);
TW_API void tw_graph_free(tw_graph* g);

/* Token graphs. */
TW_API tw_status tw_token_graph_build(const char* family, int n, int k, const tw_caps* caps, tw_token_graph** out);
TW_API tw_status tw_token_graph_to_json(const tw_token_graph* tg, char** out);
/* Copy of the token graph as a plain graph (labels = token indices). */
TW_API tw_status tw_token_graph_graph(const tw_token_graph* tg, tw_graph** out);
TW_API size_t tw_token_graph_vertex_count(const tw_token_graph* tg);
TW_API void tw_token_graph_free(tw_token_graph* tg);

/* Decompositions. kind is "star", "f2kn" or "lex"; "auto" picks the
 * family's own construction. A lex decomposition for family "path" is the
 * complete-graph decomposition re-hosted on F_k(P_n). */
TW_API tw_status tw_decomposition_build(const char* kind, const char* family, int n, int k, const tw_caps* caps,
                                        tw_decomposition** out);
TW_API tw_status tw_decomposition_from_json(const char* json, tw_decomposition** out);
TW_API tw_status tw_decomposition_to_json(const tw_decomposition* d, char** out);
TW_API tw_status tw_decomposition_width(const tw_decomposition* d, int64_t* out);
/* Validates against host when given, otherwise against the decomposition's
 * host reference. *valid is 1 when all conditions hold. */
TW_API tw_status tw_decomposition_validate(const tw_decomposition* d, const tw_graph* host, const tw_caps* caps,
                                           int* valid, char** report_json);
TW_API void tw_decomposition_free(tw_decomposition* d);

/* Brambles. kind is "star" (host F_2(S_n)) or "complete" (host F_2(K_n)). */
TW_API tw_status tw_bramble_build(const char* kind, int n, const tw_caps* caps, tw_bramble** out);
TW_API tw_status tw_bramble_from_json(const char* json, tw_bramble** out);
TW_API tw_status tw_bramble_to_json(const tw_bramble* b, char** out);
TW_API size_t tw_bramble_set_count(const tw_bramble* b);
TW_API tw_status tw_bramble_validate(const tw_bramble* b, const tw_graph* host, const tw_caps* caps, int* valid,
                                     char** report_json);
/* {"order":..,"witness":[..],"search_nodes":..} */
TW_API tw_status tw_bramble_hitting_set(const tw_bramble* b, const tw_caps* caps, char** result_json);
TW_API void tw_bramble_free(tw_bramble* b);

/* Oracles. Vertex sets and orderings are given as labels. */
/* {"treewidth":..,"elimination_order":[labels]} */
TW_API tw_status tw_treewidth(const tw_graph* g, const tw_caps* caps, char** result_json);
/* {"mmb":..,"witness":[labels]} */
TW_API tw_status tw_mmb(const tw_graph* g, const tw_caps* caps, char** result_json);
TW_API tw_status tw_border(const tw_graph* g, const int* labels, size_t count, int* out);
TW_API tw_status tw_max_border(const tw_graph* g, const int* order, size_t count, int* out);
/* F_2(P_n) sum ordering as token indices; literal != 0 keeps increasing ties
 * on every class. */
TW_API tw_status tw_f2pn_ordering(int n, int literal, char** result_json);
/* {"lambda2":..,"disconnected":..,"max_degree":..,"vertices":..} */
TW_API tw_status tw_spectral_graph(const tw_graph* g, const tw_caps* caps, char** result_json);
/* Spectral report of F_k(family_n) with the spectral treewidth lower bound. */
TW_API tw_status tw_spectral_token(const tw_token_graph* tg, const tw_caps* caps, char** result_json);

/* Tables and verification. format is "text", "csv" or "json".
 * *consistent is 0 when some row violates lower <= exact/oracle <= upper. */
TW_API tw_status tw_bound_table(const char* family, int k, int n_lo, int n_hi, int run_oracle, const tw_caps* caps,
                                const char* format, int* consistent, char** out);
/* n_max/k_max <= 0 mean suite defaults. *passed is 1 when every item passed;
 * *capped is 1 when an item hit a resource cap. */
TW_API tw_status tw_verify(const char* suite, int n_max, int k_max, uint64_t seed, int random_graphs,
                           const tw_caps* caps, int* passed, int* capped, char** report_json);
/* Newline-separated suite names. */
TW_API tw_status tw_verify_suites(char** out);

#ifdef __cplusplus
}
#endif

#endif
