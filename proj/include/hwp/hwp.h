/*
Copyright 2026 The hwp Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef HWP_HWP_H
#define HWP_HWP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HWP_BUILDING_LIBRARY)
#define HWP_API __declspec(dllexport)
#else
#define HWP_API __declspec(dllimport)
#endif
#else
#define HWP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Result codes. The CLI uses the same numbers as exit codes. */
typedef enum hwp_status {
  HWP_OK = 0,
  HWP_VERIFY_FAILED = 1,
  HWP_EXCEPTION = 2,      /* the point is a proven exception */
  HWP_OPEN = 3,           /* the point is a listed open case */
  HWP_NOT_FOUND = 4,      /* an ingredient could not be produced */
  HWP_INVALID = 5,        /* bad parameters or unparsable input */
  HWP_NONEXISTENT = 6,    /* search enumerated everything, found nothing */
  HWP_BUDGET = 7,         /* search stopped by its budget */
  HWP_INTERNAL = 8
} hwp_status;

typedef struct hwp_decomposition hwp_decomposition;

typedef struct hwp_budget {
  double seconds;      /* <= 0: default (60) */
  uint64_t node_limit; /* 0: restart schedule */
  uint64_t seed;
  const char* cache_root; /* NULL: HWP_CACHE or no disk cache */
} hwp_budget;

typedef struct hwp_info {
  int v;
  int m;
  int n;
  int r;
  int s;
  int has_one_factor;
} hwp_info;

/* Initializes `b` with the defaults. */
HWP_API void hwp_budget_default(hwp_budget* b);

/* Builds a (3,3x)-HWP(3xy; r, s). On HWP_OK *out owns a new handle. On other
   codes *message (if non-NULL) receives a string to release with
   hwp_string_free: the governing case, missing ingredient, or error. */
HWP_API hwp_status hwp_solve(int x, int y, int r, int s, const hwp_budget* budget, hwp_decomposition** out,
                             char** message);

/* Runs the search on K_v (graph 'c'), K_v - F ('f', F = {2k, 2k+1}) or
   K_(h:u) ('e', v ignored). */
HWP_API hwp_status hwp_oracle(char graph, int v, int h, int u, int m, int n, int r, int s, const hwp_budget* budget,
                              hwp_decomposition** out, char** message);

HWP_API hwp_status hwp_decomposition_read(const char* path, hwp_decomposition** out, char** message);
HWP_API hwp_status hwp_decomposition_parse(const char* text, hwp_decomposition** out, char** message);
HWP_API hwp_status hwp_decomposition_write(const hwp_decomposition* d, const char* path);
/* Text form; release with hwp_string_free. */
HWP_API char* hwp_decomposition_to_string(const hwp_decomposition* d);
HWP_API hwp_status hwp_decomposition_info(const hwp_decomposition* d, hwp_info* info);
HWP_API void hwp_decomposition_free(hwp_decomposition* d);

/* HWP_OK when `d` is a valid decomposition, HWP_VERIFY_FAILED with the first
   violation in *message otherwise. */
HWP_API hwp_status hwp_verify(const hwp_decomposition* d, char** message);

/* Status table for (x, y), one line per s. */
HWP_API hwp_status hwp_table(int x, int y, char** text);

/* HWP_OK when the necessary conditions hold; else HWP_INVALID and the
   violated clauses, one per line. */
HWP_API hwp_status hwp_check_necessary(int x, int y, int r, int s, char** message);

HWP_API const char* hwp_status_string(hwp_status s);
HWP_API void hwp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HWP_HWP_H */
