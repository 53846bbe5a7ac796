/*
 * Copyright 2026 The uninorm Authors
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

/*
 * C interface of libuninorm.
 *
 * Every object is an opaque handle released with its matching *_free
 * function. Functions return un_status; on anything but UN_OK the out
 * parameters are untouched and un_last_error() describes the failure
 * (thread-local, valid until the next call on the same thread). Strings
 * returned through char** are owned by the caller and released with
 * un_string_free().
 */

#ifndef UNINORM_UNINORM_H
#define UNINORM_UNINORM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define UN_API __declspec(dllexport)
#else
#  define UN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum un_status {
  UN_OK = 0,
  UN_ERR_ARGUMENT = 1,
  UN_ERR_STRUCTURE = 2,
  UN_ERR_PARSE = 3,
  UN_ERR_DOMAIN = 4,
  UN_ERR_WRONG_CASE = 5,
  UN_ERR_EMPTY_RESTRICTION = 6,
  UN_ERR_INVALID_UNINORM = 7,
  UN_ERR_COMPOSITION = 8,
  UN_ERR_REFUSED = 9,
  UN_ERR_RESOURCE = 10,
  UN_ERR_INTERNAL = 11
} un_status;

typedef enum un_format {
  UN_FORMAT_TEXT = 0,
  UN_FORMAT_STRUCTURED = 1
} un_format;

/* Or-ed into un_format: drop wall-clock fields so output is reproducible. */
#define UN_RENDER_OMIT_TIMING 0x100

typedef struct un_table un_table;
typedef struct un_uninorm un_uninorm;
typedef struct un_report un_report;
typedef struct un_decomposition un_decomposition;
typedef struct un_uninorm_list un_uninorm_list;

typedef struct un_search_options {
  unsigned workers;          /* 0 or 1: single thread */
  int max_n;                 /* enumeration / certification scale limit; 0 = library default */
  uint64_t max_pairs;        /* certification pair budget; 0 = none */
  int idempotent_only;       /* enumeration filters */
  int locally_internal_only;
  int conjunctive_only;
  int verbose;               /* collect every witness instead of one per law */
} un_search_options;

UN_API const char* un_version(void);
UN_API const char* un_last_error(void);
/* 1-based position of the last UN_ERR_PARSE, 0 otherwise. */
UN_API int un_last_error_line(void);
UN_API int un_last_error_column(void);
UN_API const char* un_status_name(un_status status);
UN_API void un_string_free(char* s);
UN_API void un_search_options_init(un_search_options* options);

/* Tables: well-formed, commutative, not yet checked against the axioms. */
UN_API un_status un_table_parse(const char* text, un_table** out);
UN_API un_status un_table_from_family(const char* spec, un_table** out);
UN_API un_status un_table_write(const un_table* table, char** out);
UN_API int un_table_scale(const un_table* table);
UN_API int un_table_neutral(const un_table* table);
UN_API int un_table_at(const un_table* table, int x, int y);
UN_API void un_table_free(un_table* table);

/* Axiom check of a table; verdict via un_report_verdict. */
UN_API un_status un_validate(const un_table* table, int verbose, un_report** out);

/* Uninorms: validated on construction. */
UN_API un_status un_uninorm_from_table(const un_table* table, un_uninorm** out);
UN_API un_status un_uninorm_from_family(const char* spec, un_uninorm** out);
UN_API un_status un_uninorm_write(const un_uninorm* u, char** out);
UN_API int un_uninorm_scale(const un_uninorm* u);
UN_API int un_uninorm_neutral(const un_uninorm* u);
UN_API int un_uninorm_at(const un_uninorm* u, int x, int y);
UN_API int un_uninorm_equal(const un_uninorm* a, const un_uninorm* b);
UN_API un_status un_dual(const un_uninorm* u, un_uninorm** out);
UN_API un_status un_underlying_tnorm(const un_uninorm* u, un_uninorm** out);
UN_API un_status un_underlying_tconorm(const un_uninorm* u, un_uninorm** out);
UN_API int un_is_idempotent(const un_uninorm* u);
UN_API int un_is_locally_internal(const un_uninorm* u);
/* 1 conjunctive, 0 disjunctive; UN_ERR_DOMAIN for non-proper uninorms. */
UN_API un_status un_is_conjunctive(const un_uninorm* u, int* out);
UN_API void un_uninorm_free(un_uninorm* u);

/* Reports. */
UN_API un_status un_profile(const un_uninorm* u, un_report** out);
UN_API un_status un_check_distributivity(const un_uninorm* u1, const un_uninorm* u2, int verbose, un_report** out);
UN_API un_status un_verify_ordered_semiring(const un_uninorm* u1, const un_uninorm* u2, int verbose,
                                            un_report** out);
/* Structure predicate selected by the ordering of the neutral elements. */
UN_API un_status un_theorem_conditions(const un_uninorm* u1, const un_uninorm* u2, int verbose, un_report** out);
/* Verdict: distributive. Also see un_report_divergence. */
UN_API un_status un_classify_and_check(const un_uninorm* u1, const un_uninorm* u2, int verbose, un_report** out);

UN_API int un_report_verdict(const un_report* report);
/* 1 when the report records a theorem divergence. */
UN_API int un_report_divergence(const un_report* report);
/* 1 when a budget cut the computation short. */
UN_API int un_report_partial(const un_report* report);
/* format is un_format, optionally or-ed with UN_RENDER_OMIT_TIMING. */
UN_API un_status un_report_render(const un_report* report, int format, char** out);
UN_API void un_report_free(un_report* report);

/* Decomposition of a distributive pair with distinct neutral elements. */
UN_API un_status un_decompose(const un_uninorm* u1, const un_uninorm* u2, un_decomposition** out);
UN_API un_status un_decomposition_parse(const char* text, un_decomposition** out);
UN_API un_status un_decomposition_render(const un_decomposition* d, int format, char** out);
UN_API int un_decomposition_scale(const un_decomposition* d);
UN_API int un_decomposition_e1(const un_decomposition* d);
UN_API int un_decomposition_e2(const un_decomposition* d);
UN_API un_status un_compose(const un_decomposition* d, int n, int e1, int e2, un_uninorm** u1, un_uninorm** u2);
UN_API void un_decomposition_free(un_decomposition* d);

/* Exhaustive search. options may be NULL for defaults. */
UN_API un_status un_enumerate(int n, int e, const un_search_options* options, un_uninorm_list** out);
UN_API size_t un_uninorm_list_size(const un_uninorm_list* list);
/* Borrowed pointer, valid while the list lives. */
UN_API const un_uninorm* un_uninorm_list_get(const un_uninorm_list* list, size_t i);
UN_API void un_uninorm_list_free(un_uninorm_list* list);

UN_API un_status un_scan_pairs(int n, int e1, int e2, const un_search_options* options, un_report** out);
/* Verdict: no divergences and not partial. */
UN_API un_status un_certify(int n, const un_search_options* options, un_report** out);

#ifdef __cplusplus
}
#endif

#endif /* UNINORM_UNINORM_H */
