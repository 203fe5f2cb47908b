// Copyright 2026 The lvf Authors
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


/* C interface to the lvf verification pipelines.
 *
 * Every entry point returns an lvf_status. On LVF_OK the report handle is
 * owned by the caller and released with lvf_report_free. A report whose
 * checks failed is still LVF_OK; query lvf_report_all_pass. On any other
 * status *out is set to NULL and lvf_last_error() describes the problem
 * (per thread, valid until the next call on that thread). */

#ifndef LVF_LVF_H
#define LVF_LVF_H

#include <stddef.h>

#if defined(_WIN32)
#define LVF_API __declspec(dllexport)
#elif defined(__GNUC__)
#define LVF_API __attribute__((visibility("default")))
#else
#define LVF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lvf_report lvf_report;

typedef enum lvf_status {
  LVF_OK = 0,
  /* Bad tag, malformed option value or unreadable/malformed input. */
  LVF_ERR_USAGE = 1,
  /* NULL where a pointer is required. */
  LVF_ERR_NULL = 2,
  /* Exact arithmetic failure not caused by the input format. */
  LVF_ERR_MATH = 3,
  LVF_ERR_INTERNAL = 4
} lvf_status;

LVF_API const char* lvf_version(void);
LVF_API const char* lvf_last_error(void);
LVF_API const char* lvf_status_name(lvf_status s);

/* tag: "223", "22N:5", ...; x0: exact rational "p/q". */
LVF_API lvf_status lvf_verify_family(const char* tag, const char* x0, int order, lvf_report** out);
/* text: contents of a check file. */
LVF_API lvf_status lvf_check_text(const char* text, lvf_report** out);
LVF_API lvf_status lvf_check_file(const char* path, lvf_report** out);
/* tag: "C:n", "D:N", "2T", "2O" or "2I". */
LVF_API lvf_status lvf_group_facts(const char* tag, lvf_report** out);
LVF_API lvf_status lvf_indicial(const char* tag, lvf_report** out);
LVF_API lvf_status lvf_conservation(const char* tag, const double start[3], double t_end, double dt, int order,
                                    double tolerance, lvf_report** out);

LVF_API void lvf_report_free(lvf_report* r);
LVF_API int lvf_report_all_pass(const lvf_report* r);
LVF_API double lvf_report_duration_ms(const lvf_report* r);
LVF_API size_t lvf_report_check_count(const lvf_report* r);
/* Returned strings live as long as the report. Out pointers may be NULL. */
LVF_API lvf_status lvf_report_check(const lvf_report* r, size_t i, const char** name, int* pass,
                                    const char** witness);
LVF_API size_t lvf_report_fact_count(const lvf_report* r);
LVF_API lvf_status lvf_report_fact(const lvf_report* r, size_t i, const char** key, const char** value);
LVF_API const char* lvf_report_text(const lvf_report* r);
LVF_API const char* lvf_report_json(const lvf_report* r);

#ifdef __cplusplus
}
#endif

#endif /* LVF_LVF_H */
