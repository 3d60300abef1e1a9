/*
 * cff - connected f-factor solver, C interface.
 *
 * The library decides existence of (and constructs) connected f-factors of
 * undirected graphs, including the minimum-weight variant, exposes an
 * exhaustive brute-force oracle for desk-scale verification, and generates
 * hamiltonian-cycle-to-connected-f-factor instance families.
 *
 * All functions returning cff_status report failure details through
 * cff_last_error() (thread-local). Objects are opaque; every *_new /
 * generated object must be released with the matching *_free.
 */
#ifndef CFF_H
#define CFF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CFF_API __declspec(dllexport)
#else
#define CFF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cff_instance cff_instance; /* graph + degree requirements */
typedef struct cff_result cff_result;     /* solve outcome, factor, trace */
typedef struct cff_family cff_family;     /* reduction output family */

typedef enum cff_status {
    CFF_OK = 0,
    CFF_ERR_INVALID_ARGUMENT = 1, /* null pointers, ids out of range */
    CFF_ERR_PARSE = 2,            /* instance text rejected; see last_error_line/column */
    CFF_ERR_VALIDATION = 3,       /* domain contract violated */
    CFF_ERR_LIMIT = 4,            /* desk-scale limit exceeded */
    CFF_ERR_IO = 5,               /* file unreadable / unwritable */
    CFF_ERR_INTERNAL = 6
} cff_status;

typedef enum cff_outcome {
    CFF_OUTCOME_FOUND = 0,         /* connected f-factor constructed */
    CFF_OUTCOME_NONE = 1,          /* f-factors exist, none connects (witness available) */
    CFF_OUTCOME_NO_F_FACTOR = 2    /* no f-factor at all */
} cff_outcome;

CFF_API const char* cff_version(void);

/* Message for the last failing call on this thread; empty string if none. */
CFF_API const char* cff_last_error(void);
/* 1-based position of the last CFF_ERR_PARSE on this thread; 0 otherwise. */
CFF_API int32_t cff_last_error_line(void);
CFF_API int32_t cff_last_error_column(void);

/* ---- instances ---- */

CFF_API cff_status cff_instance_new(int32_t n, int weighted, cff_instance** out);
CFF_API void cff_instance_free(cff_instance* ins);

CFF_API cff_status cff_instance_add_edge(cff_instance* ins, int32_t u, int32_t v);
CFF_API cff_status cff_instance_add_weighted_edge(cff_instance* ins, int32_t u, int32_t v,
                                                  int64_t w);
CFF_API cff_status cff_instance_set_degree(cff_instance* ins, int32_t v, int32_t f);

CFF_API int32_t cff_instance_vertex_count(const cff_instance* ins);
CFF_API int32_t cff_instance_edge_count(const cff_instance* ins);
CFF_API int cff_instance_weighted(const cff_instance* ins);
CFF_API cff_status cff_instance_edge(const cff_instance* ins, int32_t index, int32_t* u,
                                     int32_t* v, int64_t* w);
CFF_API cff_status cff_instance_degree(const cff_instance* ins, int32_t v, int32_t* f);
/* Odd degree sum: legal but trivially unsolvable. */
CFF_API int cff_instance_parity_warning(const cff_instance* ins);

/* Text format round trip (see README for the line-oriented format). */
CFF_API cff_status cff_instance_parse(const char* text, cff_instance** out);
CFF_API cff_status cff_instance_serialize(const cff_instance* ins, char** out);
CFF_API cff_status cff_instance_load(const char* path, cff_instance** out);
CFF_API cff_status cff_instance_save(const cff_instance* ins, const char* path);
CFF_API void cff_string_free(char* s);

/* ---- solving ---- */

/* min_weight != 0 requires a weighted instance; threads >= 1. */
CFF_API cff_status cff_solve(const cff_instance* ins, int min_weight, int threads,
                             cff_result** out);
/* Exhaustive oracle (desk scale); weighted instances are minimized. */
CFF_API cff_status cff_solve_brute_force(const cff_instance* ins, cff_result** out);

CFF_API void cff_result_free(cff_result* res);
CFF_API cff_outcome cff_result_outcome(const cff_result* res);
CFF_API int32_t cff_result_edge_count(const cff_result* res);
CFF_API cff_status cff_result_edge(const cff_result* res, int32_t index, int32_t* u, int32_t* v);
CFF_API int cff_result_has_weight(const cff_result* res);
CFF_API int64_t cff_result_weight(const cff_result* res);

/* Witness partition certifying NONE: part id per vertex, or -1 when absent. */
CFF_API int32_t cff_result_witness_part_count(const cff_result* res);
CFF_API int32_t cff_result_witness_part_of(const cff_result* res, int32_t v);

/* Recursion trace: one record per restricted-search level. */
CFF_API int32_t cff_result_trace_depth(const cff_result* res);
CFF_API cff_status cff_result_trace_level(const cff_result* res, int32_t index, int32_t* parts,
                                          int64_t* trees_examined, int* fallback_used);
CFF_API int cff_result_fallback_used(const cff_result* res);
/* Number of connected f-factors; -1 unless produced by the brute-force oracle. */
CFF_API int64_t cff_result_factor_count(const cff_result* res);

/* ---- oracle helpers ---- */

CFF_API cff_status cff_has_hamiltonian_cycle(const cff_instance* ins, int* out);

/* ---- reduction families ---- */

/* part_size = 0 selects formula mode (may fail with CFF_ERR_LIMIT and guidance);
 * part_size >= 3 is desk mode. max_output = 0 means unlimited. */
CFF_API cff_status cff_family_generate(const cff_instance* source, double epsilon,
                                       int32_t part_size, int64_t max_output, cff_family** out);
CFF_API void cff_family_free(cff_family* fam);
CFF_API int64_t cff_family_size(const cff_family* fam);
/* A fresh instance handle for member i; caller frees it. */
CFF_API cff_status cff_family_instance(const cff_family* fam, int64_t index, cff_instance** out);
/* The 4-vertex path witness (u0,u1,u2,u3) behind member i. */
CFF_API cff_status cff_family_witness(const cff_family* fam, int64_t index, int32_t path[4]);

/* Oracle round trip: hamiltonicity of the source iff some family member has a
 * connected f-factor. Desk scale. */
CFF_API cff_status cff_verify_reduction(const cff_instance* source, double epsilon,
                                        int32_t part_size, int* out);

#ifdef __cplusplus
}
#endif

#endif /* CFF_H */
