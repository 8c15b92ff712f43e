// Copyright 2026 The selbn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to selbn. Graphs are opaque handles; structured results come
// back as heap strings (JSON, graph text or DOT) released with
// selbn_string_free. Every call returns a status; on failure the message is
// available from selbn_last_error() on the same thread.

#ifndef SELBN_SELBN_H_
#define SELBN_SELBN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SELBN_API __declspec(dllexport)
#else
#define SELBN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct selbn_graph selbn_graph;

typedef enum selbn_status {
  SELBN_OK = 0,
  SELBN_ERR_INVALID_ARGUMENT = 1,
  SELBN_ERR_PARSE = 2,
  SELBN_ERR_UNKNOWN_NODE = 3,
  SELBN_ERR_INVALID_GRAPH = 4,
  SELBN_ERR_NOT_CHORDAL = 5,
  SELBN_ERR_NO_EXTENSION = 6,
  SELBN_ERR_GUARD_EXCEEDED = 7,
  SELBN_ERR_ZERO_CONDITIONING_EVENT = 8,
  SELBN_ERR_NOT_POSITIVE = 9,
  SELBN_ERR_NON_CONVERGENCE = 10,
  SELBN_ERR_PRECONDITION = 11,
  SELBN_ERR_INTERNAL = 12
} selbn_status;

typedef enum selbn_format { SELBN_FORMAT_TEXT = 0, SELBN_FORMAT_JSON = 1, SELBN_FORMAT_DOT = 2 } selbn_format;

SELBN_API const char* selbn_version(void);
SELBN_API const char* selbn_status_string(selbn_status status);

// Message of the last failed call on this thread ("" if none).
SELBN_API const char* selbn_last_error(void);
// Graph-file line of the last parse error on this thread, 0 if unknown.
SELBN_API int selbn_last_error_line(void);
SELBN_API void selbn_string_free(char* s);

SELBN_API selbn_status selbn_graph_parse(const char* text, selbn_graph** out);
SELBN_API selbn_status selbn_graph_load(const char* path, selbn_graph** out);
SELBN_API selbn_status selbn_graph_fixture(const char* name, selbn_graph** out);
SELBN_API void selbn_graph_free(selbn_graph* g);
SELBN_API size_t selbn_graph_node_count(const selbn_graph* g);
SELBN_API selbn_status selbn_graph_render(const selbn_graph* g, selbn_format format, char** out);

// Newline-separated list of bundled fixtures, and the text of one.
SELBN_API selbn_status selbn_fixture_names(char** out);
SELBN_API selbn_status selbn_fixture_text(const char* name, char** out);

// CPDAG of a DAG; a PDAG input must already be a CPDAG. JSON adds
// "class_size" (null past the enumeration guard).
SELBN_API selbn_status selbn_cpdag(const selbn_graph* g, selbn_format format, char** out);
SELBN_API selbn_status selbn_same_class(const selbn_graph* a, const selbn_graph* b, int* same);
// JSON: {"class_size": n, "members": [graph, ...]}. guard 0 = default.
SELBN_API selbn_status selbn_enumerate_class(const selbn_graph* g, size_t guard, selbn_format format, char** out);

// targets: comma-separated node names. JSON {"A", "U", "compelled"}; with
// check_oracle also "oracle" and "oracle_match".
SELBN_API selbn_status selbn_compelled_ancestors(const selbn_graph* g, const char* targets, int check_oracle,
                                                 char** out_json);
SELBN_API selbn_status selbn_min_ancestor_dag(const selbn_graph* g, const char* targets, selbn_format format,
                                              char** out);

// Reduction report as JSON, or a readable summary as text.
SELBN_API selbn_status selbn_reduce(const selbn_graph* g, int use_compelled, selbn_format format, char** out);

// Selection hierarchical model. With cpt_json (may be NULL) the selected
// distribution of that BN is also fitted; tol <= 0 means the default.
SELBN_API selbn_status selbn_shm(const selbn_graph* g, const char* cpt_json, double tol, char** out_json);

// law: lemma1, lemma3, lemma4, thm1, thm7, shm or lauritzen. tol <= 0 means
// the law's default; floor is the smallest CPT entry of the random models
// (<= 0 means the default). *passed is set on SELBN_OK.
SELBN_API selbn_status selbn_verify(const selbn_graph* g, const char* law, size_t trials, uint64_t seed, double tol,
                                    double floor, int* passed, char** out_json);

// q_json: {"over": [O1, O2, O3], "given": [O4], "rows": [[8], [8]]}.
SELBN_API selbn_status selbn_constraint_check(const char* q_json, double tol, char** out_json);
SELBN_API selbn_status selbn_constraint_demo(size_t trials, uint64_t seed, double tol, char** out_json);

#ifdef __cplusplus
}
#endif

#endif  // SELBN_SELBN_H_
