/* Copyright 2026 The sl3web Authors.
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

#ifndef SL3WEB_H_
#define SL3WEB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SL3WEB_API __declspec(dllexport)
#else
#define SL3WEB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SL3WEB_OK = 0,
  SL3WEB_ERR_INPUT = 1,     /* malformed web, state, signature or argument */
  SL3WEB_ERR_INVARIANT = 2, /* a computation broke an internal invariant */
  SL3WEB_ERR_NULL = 3       /* a required pointer was null */
} sl3web_status;

typedef struct sl3web_web sl3web_web;
typedef struct sl3web_combo sl3web_combo;

/* Strings returned through char** are owned by the caller. */
SL3WEB_API void sl3web_string_free(char* s);
/* Message of the last failed call on this thread, never null. */
SL3WEB_API const char* sl3web_last_error(void);
SL3WEB_API const char* sl3web_version(void);

/* Webs. */
SL3WEB_API sl3web_status sl3web_web_from_json(const char* json, sl3web_web** out);
SL3WEB_API sl3web_status sl3web_web_read_file(const char* path, sl3web_web** out);
/* Names: hexW, B, WxW, WxWxW, WB, WBB, thick2W ... thick5W. */
SL3WEB_API sl3web_status sl3web_web_corpus(const char* name, sl3web_web** out);
SL3WEB_API sl3web_status sl3web_web_to_json(const sl3web_web* w, int indent, char** out);
SL3WEB_API sl3web_status sl3web_web_signature(const sl3web_web* w, char** out);
SL3WEB_API sl3web_status sl3web_web_is_non_elliptic(const sl3web_web* w, int* out);
SL3WEB_API sl3web_status sl3web_web_unclasp(const sl3web_web* w, sl3web_web** out);
/* format: "svg" or "dot". */
SL3WEB_API sl3web_status sl3web_web_render(const sl3web_web* w, const char* format, char** out);
SL3WEB_API void sl3web_web_free(sl3web_web* w);

/* Skein reduction. quantum = 0 specializes v = -1. The trace callback, if
 * given, receives one rule name per rewriting step. */
typedef void (*sl3web_trace_fn)(const char* event, void* user);
SL3WEB_API sl3web_status sl3web_reduce(const sl3web_web* w, int quantum, uint64_t strategy_seed,
                                       sl3web_trace_fn trace, void* user, sl3web_combo** out);
SL3WEB_API sl3web_status sl3web_combo_size(const sl3web_combo* c, size_t* out);
/* {"terms":[{"coeff","web"}]} */
SL3WEB_API sl3web_status sl3web_combo_to_json(const sl3web_combo* c, char** out);
/* The web and coefficient of term i, in key order. */
SL3WEB_API sl3web_status sl3web_combo_term(const sl3web_combo* c, size_t i, sl3web_web** web, char** coeff);
SL3WEB_API void sl3web_combo_free(sl3web_combo* c);

/* Determinantal evaluation of the diagram and of its normal form on random
 * integer configurations: {"configurations":[{"diagram","normal_form"}],"agree"}. */
SL3WEB_API sl3web_status sl3web_eval_classical(const sl3web_web* w, uint64_t seed, int count, char** out);

/* Quantum expansion. strategy: "flows", "contraction" or "discconfig".
 * {"signature","strategy","coefficients":{state: poly},"states","flows"}. */
SL3WEB_API sl3web_status sl3web_expand(const sl3web_web* w, const char* strategy, char** out);
/* state is a comma separated word over 1, 0, -1. */
SL3WEB_API sl3web_status sl3web_coefficient(const sl3web_web* w, const char* state, char** out);
/* Count and the first `limit` flows of weight v^exponent at a state. */
SL3WEB_API sl3web_status sl3web_flows_at(const sl3web_web* w, const char* state, int exponent,
                                         size_t limit, char** out);
SL3WEB_API sl3web_status sl3web_dominant_path(const sl3web_web* w, char** out);

/* Basis webs. */
SL3WEB_API sl3web_status sl3web_dim(const char* signature, uint64_t* out);
/* {"signature","size","webs":[{"path","web"}]} */
SL3WEB_API sl3web_status sl3web_enumerate(const char* signature, int jobs, char** out);
SL3WEB_API sl3web_status sl3web_grow(const char* signature, const char* state, sl3web_web** out);

/* Chebyshev identities. kind 1 = bracelet / first kind, 2 = band / second kind. */
SL3WEB_API sl3web_status sl3web_cheb_verify(const sl3web_web* w, int kind, int kmax, char** out);
SL3WEB_API sl3web_status sl3web_cheb_monomial(int k, int kind, char** out);

/* Red graphs. exhaustive = 0 lists exact chordless cycles only. */
SL3WEB_API sl3web_status sl3web_redgraph_list(const sl3web_web* w, int exhaustive, int exact_only, char** out);
/* faces: JSON array of face ids. pairing: JSON array of [a, b] or null for
 * the first valid pairing. */
SL3WEB_API sl3web_status sl3web_redgraph_reduce(const sl3web_web* w, const char* faces, const char* pairing,
                                                char** out);

/* Dual canonicality. probes: JSON array of states or null for the full expansion. */
SL3WEB_API sl3web_status sl3web_canon_check(const sl3web_web* w, const char* probes, char** out);
/* Returns SL3WEB_ERR_INVARIANT, with the report still written, when a sub-check fails. */
SL3WEB_API sl3web_status sl3web_canon_obstruction(int jobs, int classify_thick5, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SL3WEB_H_ */
