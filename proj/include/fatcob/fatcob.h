#ifndef FATCOB_H
#define FATCOB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FATCOB_BUILDING)
#define FC_API __attribute__((visibility("default")))
#else
#define FC_API
#endif

typedef struct fc_graph fc_graph;

typedef enum {
  FC_OK = 0,
  FC_ERR_DOMAIN = 1,   /* invalid, inadmissible, not gluable, ... */
  FC_ERR_PARSE = 2,
  FC_ERR_USAGE = 3,    /* bad arguments, unreadable files */
  FC_ERR_INTERNAL = 4
} fc_status;

/* Message and error-code name of the last failure on this thread. */
FC_API const char* fc_last_error(void);
FC_API const char* fc_last_error_code(void);

FC_API fc_status fc_graph_parse(const char* text, fc_graph** out);
FC_API fc_status fc_graph_load(const char* path, fc_graph** out);
FC_API void fc_graph_free(fc_graph* g);
FC_API void fc_string_free(char* s);

FC_API fc_status fc_graph_serialize(const fc_graph* g, char** out);

typedef struct {
  size_t components;
  int64_t euler_characteristic;
  int genus;
  int boundary_count;
} fc_invariants;

FC_API fc_status fc_graph_invariants(const fc_graph* g, fc_invariants* out);

/* JSON array of cycles, each an array of half-edge names. */
FC_API fc_status fc_graph_boundary_cycles(const fc_graph* g, char** json);

/* witness is NULL when admissible; free it with fc_string_free. */
FC_API fc_status fc_graph_admissible(const fc_graph* g, int* admissible, char** witness);

/* JSON object {source, target, components:[{genus, boundary, chi, in, out}]}. */
FC_API fc_status fc_graph_signature(const fc_graph* g, char** json);

FC_API fc_status fc_graph_glue(const fc_graph* a, const fc_graph* b, int subdivide, fc_graph** out, int* admissible,
                               size_t* interval_pairs);

typedef struct {
  size_t rank_h1;
  size_t rank_h0;
  int64_t relative_euler;
} fc_homology;

FC_API fc_status fc_graph_homology(const fc_graph* g, fc_homology* out);
FC_API fc_status fc_graph_degree(const fc_graph* g, int dim, int64_t* out);

/* Gluing iso on d-th determinant powers; scalar is an exact rational. */
FC_API fc_status fc_gluing_det(const fc_graph* a, const fc_graph* b, int subdivide, int dim, int64_t* degree,
                               int* sign, char** scalar);

FC_API fc_status fc_assoc_sign(int dim, int* sign);

typedef struct {
  size_t edges;
  int one_vertex;
  int has_genus;
  int genus;
  size_t min_valence;
  unsigned jobs;
} fc_enum_options;

/* JSON array of classes {edges, vertices, genus, boundary, chi, automorphisms, rootings, canonical}. */
FC_API fc_status fc_enumerate(const fc_enum_options* options, char** json);

FC_API fc_status fc_graph_canonical(const fc_graph* g, char** out);
FC_API fc_status fc_graph_isomorphic(const fc_graph* a, const fc_graph* b, int* out);

#ifdef __cplusplus
}
#endif

#endif
