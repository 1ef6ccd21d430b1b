/* Copyright 2026 The colnum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COLNUM_COLNUM_H_
#define COLNUM_COLNUM_H_

/* C interface to the colnum library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Functions returning char* hand over a NUL-terminated
 * string that must be released with colnum_string_free. On any status other
 * than COLNUM_OK, colnum_last_error() describes the failure; the message is
 * thread-local and valid until the next call on the same thread.
 *
 * Radii are unsigned integers; COLNUM_RADIUS_INF selects the unbounded
 * radius. Kinds are "weak", "strong" or "adm". */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(COLNUM_BUILDING_LIBRARY)
#define COLNUM_API __declspec(dllexport)
#else
#define COLNUM_API __declspec(dllimport)
#endif
#else
#define COLNUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum colnum_status {
  COLNUM_OK = 0,
  COLNUM_CHECK_FAILED = 1, /* a bound or claim did not hold */
  COLNUM_INPUT_ERROR = 2,  /* malformed input or invalid arguments */
  COLNUM_RESOURCE_CAP = 3, /* exact-search cap or path budget exceeded */
  COLNUM_INTERNAL = 4
} colnum_status;

#define COLNUM_RADIUS_INF 0u

typedef struct colnum_graph colnum_graph;
typedef struct colnum_ordering colnum_ordering;

COLNUM_API const char* colnum_version(void);
COLNUM_API const char* colnum_last_error(void);
COLNUM_API void colnum_string_free(char* s);

/* Graphs: edge-list text "n m" followed by m lines "u v". */
COLNUM_API colnum_status colnum_graph_parse(const char* text, colnum_graph** out);
COLNUM_API colnum_status colnum_graph_read(const char* path, colnum_graph** out);
COLNUM_API colnum_status colnum_graph_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count,
                                                 colnum_graph** out);
COLNUM_API void colnum_graph_free(colnum_graph* g);
COLNUM_API size_t colnum_graph_vertex_count(const colnum_graph* g);
COLNUM_API size_t colnum_graph_edge_count(const colnum_graph* g);
COLNUM_API colnum_status colnum_graph_serialize(const colnum_graph* g, char** out);
/* *out = SIZE_MAX when x and y lie in different components. */
COLNUM_API colnum_status colnum_graph_distance(const colnum_graph* g, uint32_t x, uint32_t y, size_t* out);

/* Orderings: vertices listed earliest first. */
COLNUM_API colnum_status colnum_ordering_parse(const char* text, size_t n, colnum_ordering** out);
COLNUM_API colnum_status colnum_ordering_read(const char* path, size_t n, colnum_ordering** out);
COLNUM_API colnum_status colnum_ordering_from_sequence(const uint32_t* seq, size_t n, colnum_ordering** out);
COLNUM_API colnum_status colnum_ordering_degeneracy(const colnum_graph* g, colnum_ordering** out);
COLNUM_API void colnum_ordering_free(colnum_ordering* o);
COLNUM_API size_t colnum_ordering_size(const colnum_ordering* o);
/* Copies the sequence into buf, which must hold colnum_ordering_size entries. */
COLNUM_API void colnum_ordering_sequence(const colnum_ordering* o, uint32_t* buf);

/* Reachability report for one ordering: JSON {kind, r, value, per_vertex}. */
COLNUM_API colnum_status colnum_eval(const colnum_graph* g, const colnum_ordering* o, unsigned radius,
                                     const char* kind, size_t path_budget, size_t* value, char** json);

/* Optimum over all orderings. cap = 0 uses the default cap. witness may be
 * NULL. JSON {kind, r, value, witness, explored}. */
COLNUM_API colnum_status colnum_exact(const colnum_graph* g, unsigned radius, const char* kind, size_t cap,
                                      size_t* value, colnum_ordering** witness, char** json);
COLNUM_API colnum_status colnum_treewidth(const colnum_graph* g, size_t cap, size_t* out);
COLNUM_API colnum_status colnum_treedepth(const colnum_graph* g, size_t cap, size_t* out);

/* Collecting walk. tie_break: "deterministic" or "random". Reports are JSON;
 * a failed bound yields COLNUM_CHECK_FAILED with the report still filled in.
 * sigma_star may be NULL. */
typedef struct colnum_uniform_options {
  const char* tie_break;
  uint64_t seed;
  int audit;
  size_t exact_cap; /* 0: default */
} colnum_uniform_options;

COLNUM_API colnum_status colnum_uniform_instance(const char* instance_json, const colnum_uniform_options* opts,
                                                 colnum_ordering** sigma_star, char** json);
/* mode: "dyadic", "eps" (uses eps, e.g. "1/2") or "multi" (one or more
 * graphs with their radii). sigma: "exact" or "degeneracy". */
COLNUM_API colnum_status colnum_uniform_graphs(const char* mode, const colnum_graph* const* graphs,
                                               const unsigned* radii, size_t count, const char* eps,
                                               const char* sigma, const colnum_uniform_options* opts,
                                               colnum_ordering** sigma_star, char** json);

/* Counterexample family. labels_json maps label -> vertex id. */
COLNUM_API colnum_status colnum_example21(unsigned t, unsigned n, unsigned r, unsigned r_prime,
                                          colnum_graph** graph, char** labels_json);
/* Facts and claims report; COLNUM_CHECK_FAILED when any check fails. */
COLNUM_API colnum_status colnum_example21_verify(unsigned t, unsigned n, unsigned r, unsigned r_prime,
                                                 size_t samples, uint64_t seed, char** json);

/* Verification battery: suite name or "all". COLNUM_CHECK_FAILED when any
 * criterion fails. */
COLNUM_API colnum_status colnum_verify_suite(const char* suite, uint64_t seed, char** json);

#ifdef __cplusplus
}
#endif

#endif /* COLNUM_COLNUM_H_ */
