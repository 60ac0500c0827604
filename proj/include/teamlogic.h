/*
 * Copyright 2026 The teamlogic Authors
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

/* C interface to the teamlogic library. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every call
 * returns a tl_status; on failure tl_last_error() describes the problem for
 * the calling thread. Strings returned through char** are released with
 * tl_string_free. */

#ifndef TEAMLOGIC_H
#define TEAMLOGIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TL_API __declspec(dllexport)
#else
#define TL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  TL_OK = 0,
  TL_ERR_INVALID = 1,   /* bad argument or violated precondition */
  TL_ERR_PARSE = 2,     /* malformed formula or JSON */
  TL_ERR_FRAGMENT = 3,  /* formula outside the accepted fragment */
  TL_ERR_RESOURCE = 4,  /* search budget exhausted */
  TL_ERR_IO = 5,
  TL_ERR_INTERNAL = 6
} tl_status;

typedef enum { TL_PASS = 0, TL_FAIL = 1, TL_INCONCLUSIVE = 2 } tl_verdict;

typedef enum { TL_SEM_LAX = 0, TL_SEM_STRICT = 1, TL_SEM_MAXSUB = 2 } tl_semantics;

typedef struct tl_structure tl_structure;
typedef struct tl_team tl_team;
typedef struct tl_formula tl_formula;

TL_API const char* tl_version(void);
TL_API const char* tl_last_error(void);
TL_API void tl_string_free(char* s);

/* Structures and teams use the JSON file formats. */
TL_API tl_status tl_structure_from_json(const char* json, tl_structure** out);
TL_API tl_status tl_structure_to_json(const tl_structure* s, char** out);
TL_API void tl_structure_free(tl_structure* s);

TL_API tl_status tl_team_from_json(const char* json, tl_team** out);
TL_API tl_status tl_team_to_json(const tl_team* t, char** out);
TL_API void tl_team_free(tl_team* t);

TL_API tl_status tl_formula_parse(const char* text, tl_formula** out);
TL_API tl_status tl_formula_render(const tl_formula* f, char** out);
TL_API void tl_formula_free(tl_formula* f);
/* Edge_k over x1..xk and y1..yk. */
TL_API tl_status tl_edge_formula(int k, tl_formula** out);

typedef struct {
  tl_semantics semantics;
  uint64_t max_enumerations; /* 0 keeps the default */
  uint64_t max_rows;         /* 0 keeps the default */
  int literal_cind;
  int want_trace;
} tl_eval_options;

TL_API void tl_eval_options_init(tl_eval_options* opts);

/* *verdict receives 1 or 0. report, when not NULL, receives a JSON object
 * with the verdict, search statistics, the witness trace if requested and,
 * for TL_SEM_MAXSUB, the maximal subteam. */
TL_API tl_status tl_eval(const tl_structure* m, const tl_team* team, const tl_formula* f,
                         const tl_eval_options* opts, int* verdict, char** report);

/* JSON fragment profile. */
TL_API tl_status tl_classify(const tl_formula* f, char** out);

/* Arguments of the neg-tc pass: psi(x̄, ȳ) is the translated formula, b and c
 * name constants. Each array holds k entries. */
typedef struct {
  size_t k;
  const char* const* xs;
  const char* const* ys;
  const char* const* b;
  const char* const* c;
} tl_neg_tc_args;

/* pass is one of "prenex", "one-forall", "neg-tc", "elim-terms". args is
 * only read for neg-tc. output and report may be NULL. */
TL_API tl_status tl_translate(const char* pass, const tl_formula* f, const tl_neg_tc_args* args,
                              tl_formula** output, char** report);

TL_API tl_status tl_gen_two_path(int k, int n, tl_structure** out);
TL_API tl_status tl_gen_clique_path(int k, int n, int paths, tl_structure** out);
TL_API tl_status tl_gen_random_graph(uint32_t nodes, double edge_prob, uint64_t seed, tl_structure** out);

/* Name of the i-th property suite, NULL past the end. */
TL_API const char* tl_property_name(size_t i);

/* budget 0 runs the suite at its documented scale. workers 0 means 1. */
TL_API tl_status tl_check(const char* property, uint64_t budget, uint64_t seed, unsigned workers,
                          tl_verdict* verdict, char** report);

/* Re-runs the counterexample embedded in a check report. */
TL_API tl_status tl_replay(const char* report_json, tl_verdict* verdict, char** report);

#ifdef __cplusplus
}
#endif

#endif /* TEAMLOGIC_H */
