/* C interface to the selfie induction-heuristic engine.
 *
 * A session owns one loaded theory (definitions, goal, candidate
 * argument blocks) and one active heuristic program. All functions
 * returning selfie_status leave an error message retrievable with
 * selfie_last_error() on failure. Strings returned through out
 * parameters are heap-allocated; release them with selfie_string_free().
 */

#ifndef SELFIE_SELFIE_H
#define SELFIE_SELFIE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct selfie_session selfie_session;

typedef enum selfie_status {
  SELFIE_OK = 0,
  SELFIE_ERR_PARSE = 1,  /* theory/heuristic/candidate load error */
  SELFIE_ERR_EVAL = 2,   /* evaluation error */
  SELFIE_ERR_USAGE = 3,  /* invalid arguments or missing state */
  SELFIE_ERR_INTERNAL = 4
} selfie_status;

typedef enum selfie_format {
  SELFIE_FORMAT_JSON = 0,
  SELFIE_FORMAT_TEXT = 1
} selfie_format;

/* Lifecycle. selfie_session_new returns NULL only on allocation
 * failure. */
selfie_session* selfie_session_new(void);
void selfie_session_free(selfie_session* s);

/* Message of the last failed call on this session; valid until the next
 * call with the same session. */
const char* selfie_last_error(const selfie_session* s);

/* Loading. Heuristics default to the built-in suite; the first loaded
 * heuristic file replaces it, further files extend it. */
selfie_status selfie_load_theory_file(selfie_session* s, const char* path);
selfie_status selfie_load_theory_string(selfie_session* s, const char* source, const char* name);
selfie_status selfie_load_heuristics_file(selfie_session* s, const char* path);
selfie_status selfie_load_heuristics_string(selfie_session* s, const char* source,
                                            const char* name);

/* Adds a candidate, e.g. "induct xs arbitrary: ys". Requires a loaded
 * theory; the terms must occur in the goal. */
selfie_status selfie_add_candidate(selfie_session* s, const char* candidate);

/* Configuration. */
selfie_status selfie_set_max_semantic_depth(selfie_session* s, int depth);
selfie_status selfie_set_candidate_limits(selfie_session* s, int max_induction_vars,
                                          int max_arbitrary, int max_candidates);

/* Commands. out_report receives the rendered report.
 *
 * check: evaluates one named heuristic against every candidate;
 * *out_all_true is 1 iff every verdict is true.
 *
 * recommend: scores candidates (declared ones, or generated from the
 * goal's free variables when none are declared) with the active
 * heuristics and reports them ranked.
 *
 * parse: dumps parsed terms, the goal lookup table and heuristic ASTs.
 */
selfie_status selfie_check(selfie_session* s, const char* heuristic_name, selfie_format fmt,
                           char** out_report, int* out_all_true);
selfie_status selfie_recommend(selfie_session* s, selfie_format fmt, char** out_report);
selfie_status selfie_parse_dump(selfie_session* s, selfie_format fmt, char** out_report);

void selfie_string_free(char* str);

const char* selfie_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SELFIE_SELFIE_H */
