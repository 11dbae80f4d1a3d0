#ifndef CAYLEY_H
#define CAYLEY_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CAY_API __attribute__((visibility("default")))
#else
#define CAY_API
#endif

typedef enum cay_status {
    CAY_OK = 0,
    CAY_DUPLICATE_EDGE,
    CAY_SELF_LOOP,
    CAY_VERTEX_OUT_OF_RANGE,
    CAY_INVALID_CONSTRUCTION,
    CAY_EDGE_NOT_IN_GRAPH,
    CAY_NOT_WELLCONSTRAINED,
    CAY_NOT_HENNEBERG_FROM_F,
    CAY_NONPOSITIVE_LENGTH,
    CAY_STEP_OUT_OF_RANGE,
    CAY_SUBSYSTEM_UNREALIZABLE,
    CAY_COINCIDENT_CENTERS,
    CAY_DEGENERATE_STEP,
    CAY_TOO_MANY_ORIENTATIONS,
    CAY_EMPTY_FEASIBILITY,
    CAY_NOT_SIMPLE_1DOF_HENNEBERG,
    CAY_PRECONDITION_VIOLATED,
    CAY_NOT_HENNEBERG,
    CAY_PARSE_ERROR,
    CAY_SCHEMA_ERROR,
    /* qdim chain does not apply to this linkage */
    CAY_NOT_APPLICABLE,
    /* requested distance is outside the configuration space */
    CAY_UNREALIZABLE,
    CAY_INVALID_ARGUMENT,
    CAY_IO_ERROR,
    CAY_INTERNAL
} cay_status;

typedef struct cay_linkage cay_linkage;

typedef enum cay_method {
    CAY_METHOD_EXTREMES = 0,
    CAY_METHOD_QDIM = 1,
    CAY_METHOD_ORACLE = 2
} cay_method;

typedef struct cay_cspace_options {
    cay_method method;
    /* tolerance; <= 0 keeps the default */
    double tol;
    /* also run the sampling oracle and report the discrepancy */
    int verify;
} cay_cspace_options;

CAY_API void cay_cspace_options_init(cay_cspace_options* opts);

/* Output strings are allocated by the library; release with cay_string_free. */
CAY_API cay_status cay_linkage_from_json(const char* json, cay_linkage** out);
CAY_API cay_status cay_linkage_from_file(const char* path, cay_linkage** out);
CAY_API void cay_linkage_free(cay_linkage* l);

CAY_API cay_status cay_check(const cay_linkage* l, char** out_json);
CAY_API cay_status cay_cspace(const cay_linkage* l, const cay_cspace_options* opts, char** out_json);
CAY_API cay_status cay_validate_result(const char* json);
/* all_base_edges: report the base-edge table of G + f instead of one answer */
CAY_API cay_status cay_classify(const cay_linkage* l, int all_base_edges, char** out_json);
/* as_json = 0 gives a text table */
CAY_API cay_status cay_classify_exhaustive(size_t max_vertices, int as_json, int* all_agree, char** out);
CAY_API cay_status cay_render_realization(const cay_linkage* l, double dstar, char** out_svg);
CAY_API cay_status cay_render_intervals(const cay_linkage* l, char** out_svg);
/* lo >= hi selects the default range */
CAY_API cay_status cay_oracle_sweep(const cay_linkage* l, double lo, double hi, size_t n, char** out_json);

CAY_API void cay_string_free(char* s);
/* Message for the last failure on this thread; never NULL. */
CAY_API const char* cay_last_error(void);
CAY_API const char* cay_status_name(cay_status s);

#ifdef __cplusplus
}
#endif

#endif
