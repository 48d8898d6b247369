// Copyright 2026 The thompson-density Authors
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


/* C interface to the thompson-density library.
 *
 * Every object is an opaque handle owned by the caller and released with its
 * matching free function. Functions return a tf_status; on failure a
 * description is available from tf_last_error() on the calling thread.
 * Strings returned through char** are released with tf_string_free(). */

#ifndef THOMPSON_THOMPSON_H_
#define THOMPSON_THOMPSON_H_

#include <stddef.h>
#include <stdint.h>

#if defined(TF_BUILDING_LIBRARY)
#define TF_API __attribute__((visibility("default")))
#else
#define TF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
  TF_OK = 0,
  TF_ERR_INVALID_ARGUMENT = 1,
  TF_ERR_PARSE = 2,
  TF_ERR_CAP_EXCEEDED = 3,
  TF_ERR_PRECISION = 4,
  TF_ERR_INVARIANT = 5,
  TF_ERR_ALLOC = 6,
  TF_ERR_INTERNAL = 7
} tf_status;

TF_API const char* tf_version(void);
TF_API const char* tf_last_error(void);
TF_API const char* tf_status_name(tf_status status);
TF_API void tf_string_free(char* s);

/* ---- elements of F ---------------------------------------------------- */

typedef struct tf_element tf_element;

/* Accepts any word in the tokens x<i>, X<i> (inverse) and e. */
TF_API tf_status tf_element_parse(const char* text, tf_element** out);
TF_API tf_status tf_element_from_parts(const uint64_t* pos, size_t npos,
                                       const uint64_t* neg, size_t nneg,
                                       tf_element** out);
TF_API void tf_element_free(tf_element* g);
TF_API tf_status tf_element_multiply(const tf_element* a, const tf_element* b,
                                     tf_element** out);
TF_API tf_status tf_element_invert(const tf_element* a, tf_element** out);
TF_API tf_status tf_element_symmetry(const tf_element* a, tf_element** out);
TF_API tf_status tf_element_to_string(const tf_element* a, char** out);
/* Borrowed views, valid while the handle lives. */
TF_API tf_status tf_element_parts(const tf_element* a, const uint64_t** pos,
                                  size_t* npos, const uint64_t** neg,
                                  size_t* nneg);
TF_API int tf_element_equal(const tf_element* a, const tf_element* b);
TF_API int tf_element_is_identity(const tf_element* a);
TF_API tf_status tf_verify_relation(const char* lhs, const char* rhs,
                                    int* holds);

/* ---- generating sets and balls --------------------------------------- */

typedef struct tf_genset tf_genset;
typedef struct tf_element_list tf_element_list;

/* "standard", "symmetric", "extended" or "custom:<word>,<word>,...". */
TF_API tf_status tf_genset_parse(const char* text, tf_genset** out);
TF_API void tf_genset_free(tf_genset* s);
TF_API size_t tf_genset_rank(const tf_genset* s);
TF_API tf_status tf_ball(const tf_genset* s, unsigned radius,
                         tf_element_list** out);
TF_API void tf_element_list_free(tf_element_list* list);
TF_API size_t tf_element_list_size(const tf_element_list* list);
/* Borrowed; valid while the list lives. */
TF_API const tf_element* tf_element_list_get(const tf_element_list* list,
                                             size_t i);
/* counts receives 2 * rank values: label 2i is generator i, 2i + 1 its
 * inverse. */
TF_API tf_status tf_cheeger_per_label(const tf_element_list* ys,
                                      const tf_genset* s, uint64_t* counts,
                                      size_t capacity);

/* ---- marked forests --------------------------------------------------- */

typedef enum tf_label {
  TF_X0 = 0,
  TF_X0_INV = 1,
  TF_X1 = 2,
  TF_X1_INV = 3,
  TF_X1BAR = 4,
  TF_X1BAR_INV = 5
} tf_label;

typedef struct tf_forest tf_forest;

/* Grammar: tree := "." | "(" tree tree ")"; items separated by single
 * spaces; exactly one item starred. */
TF_API tf_status tf_forest_parse(const char* text, tf_forest** out);
TF_API void tf_forest_free(tf_forest* f);
TF_API tf_status tf_forest_encode(const tf_forest* f, char** out);
/* *out is NULL when the action is undefined (apply) or leaves B(n, k)
 * (apply_within); both are successful calls. */
TF_API tf_status tf_forest_apply(tf_label label, const tf_forest* f,
                                 tf_forest** out);
TF_API tf_status tf_forest_apply_within(tf_label label, const tf_forest* f,
                                        unsigned k, tf_forest** out);
/* Decimal string of |B(n, k)|. */
TF_API tf_status tf_bb_count(size_t n, unsigned k, char** out);

/* ---- certified intervals --------------------------------------------- */

typedef struct tf_interval tf_interval;

TF_API tf_status tf_xi(unsigned k, double tol, tf_interval** out);
TF_API void tf_interval_free(tf_interval* iv);
TF_API tf_status tf_interval_lo(const tf_interval* iv, int digits, char** out);
TF_API tf_status tf_interval_hi(const tf_interval* iv, int digits, char** out);
TF_API double tf_interval_width(const tf_interval* iv);

/* ---- exact count series ---------------------------------------------- */

typedef enum tf_series {
  TF_SERIES_BETA = 0,
  TF_SERIES_TRIVIAL_MARKED = 1,
  TF_SERIES_MARKED_LEFTMOST = 2,
  TF_SERIES_MARKED_RIGHTMOST = 3,
  TF_SERIES_X1INV_BLOCKED = 4,
  TF_SERIES_X1BARINV_BLOCKED = 5,
  TF_SERIES_ISOLATED = 6
} tf_series;

/* Decimal string of the coefficient of z^n. */
TF_API tf_status tf_series_coefficient(tf_series which, unsigned k, size_t n,
                                       char** out);

/* ---- command runs ------------------------------------------------------ */

typedef enum tf_mode { TF_MODE_ENUMERATE = 0, TF_MODE_DP = 1, TF_MODE_BOTH = 2 }
    tf_mode;

typedef struct tf_run_config {
  const char* command;
  int64_t n; /* -1 when unset, likewise nmax, k, kmax */
  int64_t nmax;
  int64_t k;
  int64_t kmax;
  const char* genset; /* NULL means "standard" */
  tf_mode mode;
  double tol;
  size_t truncation;
  double cap;
  unsigned threads;
  int digits;
  unsigned mn;
  const char* const* checks; /* "lhs = rhs" strings */
  size_t nchecks;
  int outer;
  int perturb;
  int list;
} tf_run_config;

typedef struct tf_report tf_report;

/* Fills defaults; command stays NULL. */
TF_API void tf_run_config_init(tf_run_config* config);
/* Succeeds whenever a report was produced, including failed claims; the
 * report status carries the outcome. Invalid configurations also produce a
 * report (status 3). */
TF_API tf_status tf_run(const tf_run_config* config, tf_report** out);
TF_API void tf_report_free(tf_report* r);
/* Exit code: 0 ok, 2 not certified, 3 invalid config, 4 invariant violation. */
TF_API int tf_report_status(const tf_report* r);
TF_API const char* tf_report_message(const tf_report* r);
/* format: "csv", "json" or "summary". */
TF_API tf_status tf_report_render(const tf_report* r, const char* format,
                                  char** out);
TF_API size_t tf_report_table_count(const tf_report* r);
TF_API const char* tf_report_table_name(const tf_report* r, size_t table);
TF_API size_t tf_report_column_count(const tf_report* r, size_t table);
TF_API const char* tf_report_column(const tf_report* r, size_t table,
                                    size_t column);
TF_API size_t tf_report_row_count(const tf_report* r, size_t table);
TF_API const char* tf_report_cell(const tf_report* r, size_t table, size_t row,
                                  size_t column);
TF_API size_t tf_report_summary_count(const tf_report* r);
TF_API const char* tf_report_summary_key(const tf_report* r, size_t i);
TF_API const char* tf_report_summary_value(const tf_report* r, size_t i);
/* Value for key, or NULL. */
TF_API const char* tf_report_summary_lookup(const tf_report* r,
                                            const char* key);

#ifdef __cplusplus
}
#endif

#endif /* THOMPSON_THOMPSON_H_ */
