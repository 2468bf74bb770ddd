/* C interface to the interval edge coloring library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions that can fail return an ivc_status;
 * on failure ivc_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are released with
 * ivc_string_free.
 */
#ifndef IVC_IVC_H
#define IVC_IVC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(IVC_BUILDING_LIBRARY)
#    define IVC_API __declspec(dllexport)
#  else
#    define IVC_API __declspec(dllimport)
#  endif
#else
#  define IVC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ivc_status {
  IVC_OK = 0,
  IVC_INVALID_PARAMETER = 1,
  IVC_INVALID_VERTEX = 2,
  IVC_NO_FINITE_DIAMETER = 3,
  IVC_NOT_REGULAR = 4,
  IVC_CANNOT_STEP_DOWN = 5,
  IVC_INVALID_COLORING = 6,
  IVC_HYPOTHESIS_VIOLATED = 7,
  IVC_RANGE_ERROR = 8,
  IVC_PARSE_ERROR = 9,
  IVC_SCHEMA_ERROR = 10,
  IVC_USAGE_ERROR = 11,
  IVC_CONSTRUCTION_FAILED = 12,
  IVC_INTERNAL_ERROR = 99
} ivc_status;

typedef enum ivc_family {
  IVC_FAMILY_PATH = 0,
  IVC_FAMILY_CYCLE = 1, /* C_2n */
  IVC_FAMILY_CYLINDER = 2,
  IVC_FAMILY_TORUS = 3,
  IVC_FAMILY_PRODUCT = 4
} ivc_family;

typedef enum ivc_search_outcome {
  IVC_SEARCH_FOUND = 0,
  IVC_SEARCH_ABSENT = 1,
  IVC_SEARCH_BUDGET_EXCEEDED = 2
} ivc_search_outcome;

typedef struct ivc_budget {
  int max_edges;
  long long max_nodes;
  double time_cap_seconds;
} ivc_budget;

typedef struct ivc_graph ivc_graph;
typedef struct ivc_coloring ivc_coloring;
typedef struct ivc_coloring_list ivc_coloring_list;
typedef struct ivc_report ivc_report;

IVC_API const char* ivc_version(void);
IVC_API const char* ivc_status_name(ivc_status status);
/* Message of the last failed call on this thread; "" if none. */
IVC_API const char* ivc_last_error(void);
IVC_API void ivc_string_free(char* s);
/* "path", "cycle", "cylinder", "torus", "product". */
IVC_API ivc_status ivc_family_parse(const char* name, ivc_family* out);

/* Default search budget; IVC_SEARCH_MAX_EDGES overrides max_edges. */
IVC_API ivc_status ivc_budget_default(ivc_budget* out);

/* ---- graphs ---------------------------------------------------------- */

IVC_API ivc_status ivc_graph_path(int m, ivc_graph** out);
IVC_API ivc_status ivc_graph_even_cycle(int k, ivc_graph** out);
IVC_API ivc_status ivc_graph_cylinder(int m, int n, ivc_graph** out);
IVC_API ivc_status ivc_graph_torus(int m, int n, ivc_graph** out);
/* Path uses m, cycle uses 2n, cylinder and torus use (m, n). */
IVC_API ivc_status ivc_graph_build(ivc_family family, int m, int n, ivc_graph** out);
IVC_API ivc_status ivc_graph_product(const ivc_graph* a, const ivc_graph* b, ivc_graph** out);
IVC_API void ivc_graph_free(ivc_graph* g);

IVC_API int ivc_graph_vertex_count(const ivc_graph* g);
IVC_API int ivc_graph_edge_count(const ivc_graph* g);
IVC_API int ivc_graph_max_degree(const ivc_graph* g);
IVC_API int ivc_graph_is_bipartite(const ivc_graph* g);
IVC_API int ivc_graph_is_regular(const ivc_graph* g);
IVC_API ivc_status ivc_graph_diameter(const ivc_graph* g, int* out);
IVC_API ivc_status ivc_graph_to_json(const ivc_graph* g, char** out);

/* ---- colorings ------------------------------------------------------- */

/* Cylinder or torus construction. t == 0 selects the constructed palette;
 * otherwise t must be reachable (torus: 4..max{3m+n,3n+m}; cylinder: only
 * the constructed palette), else IVC_RANGE_ERROR. */
IVC_API ivc_status ivc_coloring_generate(ivc_family family, int m, int n, int t,
                                         ivc_coloring** out);
IVC_API ivc_status ivc_coloring_from_json(const char* text, ivc_coloring** out);
IVC_API ivc_status ivc_coloring_step_down(const ivc_coloring* c, ivc_coloring** out);
IVC_API void ivc_coloring_free(ivc_coloring* c);

IVC_API int ivc_coloring_palette(const ivc_coloring* c);
/* Copy of the colored graph. */
IVC_API ivc_status ivc_coloring_graph(const ivc_coloring* c, ivc_graph** out);
IVC_API ivc_status ivc_coloring_color(const ivc_coloring* c, int layer1, int ring1,
                                      int layer2, int ring2, int* out);
IVC_API ivc_status ivc_coloring_set_color(ivc_coloring* c, int layer1, int ring1,
                                          int layer2, int ring2, int color);
IVC_API ivc_status ivc_coloring_to_json(const ivc_coloring* c, char** out);
IVC_API ivc_status ivc_coloring_to_dot(const ivc_coloring* c, char** out);
IVC_API ivc_status ivc_coloring_to_csv(const ivc_coloring* c, char** out);

/* Torus colorings for t = max{3m+n,3n+m} down to 4. */
IVC_API ivc_status ivc_sweep(int m, int n, ivc_coloring_list** out);
IVC_API size_t ivc_coloring_list_size(const ivc_coloring_list* list);
/* Borrowed; valid until the list is freed. */
IVC_API const ivc_coloring* ivc_coloring_list_at(const ivc_coloring_list* list, size_t index);
IVC_API void ivc_coloring_list_free(ivc_coloring_list* list);

/* ---- verification ---------------------------------------------------- */

IVC_API ivc_status ivc_verify(const ivc_coloring* c, ivc_report** out);
IVC_API int ivc_report_is_proper(const ivc_report* r);
IVC_API int ivc_report_is_surjective(const ivc_report* r);
IVC_API int ivc_report_is_interval(const ivc_report* r);
IVC_API size_t ivc_report_violation_count(const ivc_report* r);
IVC_API ivc_status ivc_report_violation(const ivc_report* r, size_t index, int* layer,
                                        int* ring);
/* Writes up to `capacity` colors of S(v) and stores |S(v)| in *size. */
IVC_API ivc_status ivc_report_spectrum(const ivc_report* r, int layer, int ring, int* colors,
                                       size_t capacity, size_t* size);
IVC_API ivc_status ivc_report_to_json(const ivc_report* r, char** out);
IVC_API ivc_status ivc_report_to_text(const ivc_report* r, char** out);
IVC_API void ivc_report_free(ivc_report* r);

/* ---- bounds ---------------------------------------------------------- */

IVC_API ivc_status ivc_theorem1_upper(const ivc_graph* g, int* out);
IVC_API ivc_status ivc_lower_bound(ivc_family family, int m, int n, int* out);
/* CSV table over [m_lo, m_hi] x [n_lo, n_hi]. `oracle` may be NULL to skip
 * the exact columns. */
IVC_API ivc_status ivc_bounds_csv(ivc_family family, int m_lo, int m_hi, int n_lo, int n_hi,
                                  const ivc_budget* oracle, char** out);

/* ---- exhaustive search ----------------------------------------------- */

/* `found` may be NULL; it is set only for IVC_SEARCH_FOUND. */
IVC_API ivc_status ivc_search(const ivc_graph* g, int t, const ivc_budget* budget,
                              ivc_search_outcome* outcome, ivc_coloring** found);
IVC_API ivc_status ivc_exact_w(const ivc_graph* g, const ivc_budget* budget,
                               ivc_search_outcome* outcome, int* value);
IVC_API ivc_status ivc_exact_W(const ivc_graph* g, const ivc_budget* budget,
                               ivc_search_outcome* outcome, int* value);

#ifdef __cplusplus
}
#endif

#endif /* IVC_IVC_H */
