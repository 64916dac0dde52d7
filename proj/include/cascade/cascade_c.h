/* Copyright 2026 The Cascade Authors
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License. */

/* C interface to libcascade.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a cas_status; on
 * failure cas_last_error() describes the problem (thread-local, valid until
 * the next failing call on the same thread). Strings returned through char**
 * are NUL-terminated, heap-allocated and released with cas_string_free.
 * Output pointers are left untouched on failure. */

#ifndef CASCADE_CASCADE_C_H_
#define CASCADE_CASCADE_C_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CAS_API __declspec(dllexport)
#else
#define CAS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cas_status {
  CAS_OK = 0,
  CAS_ERR_INVALID_ARGUMENT = 1,
  CAS_ERR_PARSE = 2,
  CAS_ERR_OUT_OF_RANGE = 3,
  CAS_ERR_DEGREE_MISMATCH = 4,
  CAS_ERR_GROUP_TOO_LARGE = 5,
  CAS_ERR_OVERFLOW = 6,
  CAS_ERR_NOT_FOUND = 7,
  CAS_ERR_INTERNAL = 99
} cas_status;

typedef struct cas_session cas_session;
typedef struct cas_components cas_components;
typedef struct cas_cascade cas_cascade;
typedef struct cas_group cas_group;
typedef struct cas_report cas_report;

typedef struct cas_options {
  int check_membership; /* default 1: dependency values must lie in their group */
} cas_options;

#define CAS_DEFAULT_CAP 1000000

CAS_API const char* cas_version(void);
CAS_API const char* cas_last_error(void);
CAS_API void cas_string_free(char* s);
CAS_API void cas_options_default(cas_options* options);

/* Sessions ---------------------------------------------------------------- */

CAS_API cas_status cas_session_parse(const char* text, size_t length,
                                     const cas_options* options, cas_session** out);
CAS_API void cas_session_free(cas_session* session);
/* Canonical text of the whole session. */
CAS_API cas_status cas_session_format(const cas_session* session, char** out);
CAS_API cas_status cas_session_components(const cas_session* session, const char* name,
                                          cas_components** out);
CAS_API cas_status cas_session_cascade(const cas_session* session, const char* name,
                                       cas_cascade** out);
/* Name of the component list the named cascade is declared over; the pointer
   stays valid while the session lives. */
CAS_API cas_status cas_session_cascade_list(const cas_session* session, const char* name,
                                            const char** list_name);

/* Component lists --------------------------------------------------------- */

CAS_API void cas_components_free(cas_components* components);
CAS_API size_t cas_components_levels(const cas_components* components);
CAS_API uint64_t cas_components_total_degree(const cas_components* components);
/* Order of the full cascade product, in decimal. */
CAS_API cas_status cas_components_full_order(const cas_components* components,
                                             uint64_t cap, char** decimal);
/* Writes 1 to *holds when both groupings of a 3-component list give the same
   order; the two orders are returned in decimal when the pointers are
   non-NULL. */
CAS_API cas_status cas_components_check_associativity(const cas_components* components,
                                                      uint64_t cap, int* holds,
                                                      char** left, char** right);
CAS_API cas_status cas_components_format(const cas_components* components, const char* name,
                                         char** out);
/* Identity cascade over the list. */
CAS_API cas_status cas_components_identity(const cas_components* components,
                                           cas_cascade** out);

/* Cascades ---------------------------------------------------------------- */

CAS_API void cas_cascade_free(cas_cascade* cascade);
CAS_API void cas_cascade_array_free(cas_cascade** cascades, size_t count);
/* The component list the cascade is over (a new handle). */
CAS_API cas_status cas_cascade_components(const cas_cascade* cascade, cas_components** out);
/* `state` and `out_state` hold cas_components_levels() coordinates. */
CAS_API cas_status cas_cascade_act(const cas_cascade* cascade, const uint32_t* state,
                                   size_t levels, uint32_t* out_state);
CAS_API cas_status cas_cascade_multiply(const cas_cascade* d, const cas_cascade* f,
                                        cas_cascade** out);
CAS_API cas_status cas_cascade_invert(const cas_cascade* d, cas_cascade** out);
CAS_API int cas_cascade_equal(const cas_cascade* a, const cas_cascade* b);
/* The flattened permutation in cycle notation. */
CAS_API cas_status cas_cascade_flatten(const cas_cascade* d, uint64_t cap, char** cycles);
/* A "cascade NAME over LIST ... end" block. */
CAS_API cas_status cas_cascade_format(const cas_cascade* d, const char* name,
                                      const char* list_name, char** out);

/* Generated groups -------------------------------------------------------- */

/* <generators> over `components`; count may be 0 (trivial group). */
CAS_API cas_status cas_generated_group(const cas_components* components,
                                       const cas_cascade* const* generators, size_t count,
                                       uint64_t cap, cas_group** out);
CAS_API void cas_group_free(cas_group* group);
CAS_API uint64_t cas_group_order(const cas_group* group);
CAS_API int cas_group_abelian(const cas_group* group);
/* Element-order histogram, in increasing element order. */
CAS_API size_t cas_group_histogram_size(const cas_group* group);
CAS_API cas_status cas_group_histogram_entry(const cas_group* group, size_t index,
                                             uint64_t* element_order, uint64_t* count);
/* "(order, {k:count, ...}, abelian|non-abelian)" */
CAS_API cas_status cas_group_fingerprint(const cas_group* group, char** out);

/* Constructions ----------------------------------------------------------- */

CAS_API cas_status cas_direct_product(const cas_components* components,
                                      cas_cascade*** out, size_t* count);
/* Z_m x| Z_n with the generator of Z_m acting as x -> x^k. */
CAS_API cas_status cas_semidirect_cyclic(uint32_t m, uint32_t n, uint32_t k,
                                         cas_components** components,
                                         cas_cascade*** out, size_t* count);
/* The list must have exactly two components (top, bottom). */
CAS_API cas_status cas_wreath_check(const cas_components* components, uint64_t cap,
                                    int* matches);
CAS_API cas_status cas_example_mod4(cas_components** components, cas_cascade*** out,
                                    size_t* count);
CAS_API cas_status cas_example_quaternion(cas_components** components, cas_cascade*** out,
                                          size_t* count);

/* Lamplighter ------------------------------------------------------------- */

/* `word` over l L t T (lowercase = inverse); positions in decimal. Writes
   the final position and the sorted lit lamps, space-separated. */
CAS_API cas_status cas_lamplighter_act(const char* word, const char* position,
                                       const char* const* lamps, size_t lamp_count,
                                       char** out_position, char** out_lamps);

/* Built-in verification suite --------------------------------------------- */

/* `only` may be NULL or empty to run every check. */
CAS_API cas_status cas_verify(const char* only, cas_report** out);
CAS_API void cas_report_free(cas_report* report);
CAS_API size_t cas_report_size(const cas_report* report);
CAS_API const char* cas_report_name(const cas_report* report, size_t index);
CAS_API int cas_report_passed(const cas_report* report, size_t index);
CAS_API const char* cas_report_detail(const cas_report* report, size_t index);
/* Text of the built-in example session. */
CAS_API cas_status cas_example_session(char** out);

#ifdef __cplusplus
}
#endif

#endif /* CASCADE_CASCADE_C_H_ */
