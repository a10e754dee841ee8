#include "selfie/selfie.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "interpreter.hpp"
#include "session.hpp"

struct selfie_session {
  selfie::Session impl;
  std::string last_error;
};

namespace {

selfie_status fail(selfie_session* s, selfie_status code, const char* msg) {
  if (s) s->last_error = msg ? msg : "unknown error";
  return code;
}

// Maps C++ exceptions at the boundary to status codes.
template <typename F>
selfie_status guarded(selfie_session* s, F&& f) {
  if (!s) return SELFIE_ERR_USAGE;
  try {
    f();
    s->last_error.clear();
    return SELFIE_OK;
  } catch (const selfie::EvalError& e) {
    return fail(s, SELFIE_ERR_EVAL, e.what());
  } catch (const selfie::ParseError& e) {
    return fail(s, SELFIE_ERR_PARSE, e.what());
  } catch (const selfie::Error& e) {
    return fail(s, SELFIE_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(s, SELFIE_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& str) {
  char* out = static_cast<char*>(std::malloc(str.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, str.c_str(), str.size() + 1);
  return out;
}

selfie::ReportFormat to_format(selfie_format f) {
  return f == SELFIE_FORMAT_TEXT ? selfie::ReportFormat::Text : selfie::ReportFormat::Json;
}

}  // namespace

extern "C" {

selfie_session* selfie_session_new(void) {
  return new (std::nothrow) selfie_session();
}

void selfie_session_free(selfie_session* s) { delete s; }

const char* selfie_last_error(const selfie_session* s) {
  return s ? s->last_error.c_str() : "null session";
}

selfie_status selfie_load_theory_file(selfie_session* s, const char* path) {
  if (!path) return fail(s, SELFIE_ERR_USAGE, "path is null");
  return guarded(s, [&] { s->impl.load_theory_file(path); });
}

selfie_status selfie_load_theory_string(selfie_session* s, const char* source,
                                        const char* name) {
  if (!source) return fail(s, SELFIE_ERR_USAGE, "source is null");
  return guarded(s, [&] { s->impl.load_theory_source(source, name ? name : "<string>"); });
}

selfie_status selfie_load_heuristics_file(selfie_session* s, const char* path) {
  if (!path) return fail(s, SELFIE_ERR_USAGE, "path is null");
  return guarded(s, [&] { s->impl.load_heuristics_file(path); });
}

selfie_status selfie_load_heuristics_string(selfie_session* s, const char* source,
                                            const char* name) {
  if (!source) return fail(s, SELFIE_ERR_USAGE, "source is null");
  return guarded(s, [&] { s->impl.load_heuristics_source(source, name ? name : "<string>"); });
}

selfie_status selfie_add_candidate(selfie_session* s, const char* candidate) {
  if (!candidate) return fail(s, SELFIE_ERR_USAGE, "candidate is null");
  return guarded(s, [&] { s->impl.add_candidate(candidate); });
}

selfie_status selfie_set_max_semantic_depth(selfie_session* s, int depth) {
  if (!s) return SELFIE_ERR_USAGE;
  if (depth < 1) return fail(s, SELFIE_ERR_USAGE, "max semantic depth must be at least 1");
  s->impl.set_max_semantic_depth(depth);
  return SELFIE_OK;
}

selfie_status selfie_set_candidate_limits(selfie_session* s, int max_induction_vars,
                                          int max_arbitrary, int max_candidates) {
  if (!s) return SELFIE_ERR_USAGE;
  if (max_induction_vars < 1 || max_arbitrary < 0 || max_candidates < 1)
    return fail(s, SELFIE_ERR_USAGE, "invalid candidate limits");
  s->impl.set_candidate_limits({max_induction_vars, max_arbitrary, max_candidates});
  return SELFIE_OK;
}

selfie_status selfie_check(selfie_session* s, const char* heuristic_name, selfie_format fmt,
                           char** out_report, int* out_all_true) {
  if (!heuristic_name) return fail(s, SELFIE_ERR_USAGE, "heuristic name is null");
  if (!out_report) return fail(s, SELFIE_ERR_USAGE, "out_report is null");
  return guarded(s, [&] {
    selfie::CommandOutput out = s->impl.check(heuristic_name, to_format(fmt));
    *out_report = dup_string(out.report);
    if (!*out_report) throw std::bad_alloc();
    if (out_all_true) *out_all_true = out.exit_code == 0 ? 1 : 0;
  });
}

selfie_status selfie_recommend(selfie_session* s, selfie_format fmt, char** out_report) {
  if (!out_report) return fail(s, SELFIE_ERR_USAGE, "out_report is null");
  return guarded(s, [&] {
    selfie::CommandOutput out = s->impl.recommend(to_format(fmt));
    *out_report = dup_string(out.report);
    if (!*out_report) throw std::bad_alloc();
  });
}

selfie_status selfie_parse_dump(selfie_session* s, selfie_format fmt, char** out_report) {
  if (!out_report) return fail(s, SELFIE_ERR_USAGE, "out_report is null");
  return guarded(s, [&] {
    selfie::CommandOutput out = s->impl.parse_dump(to_format(fmt));
    *out_report = dup_string(out.report);
    if (!*out_report) throw std::bad_alloc();
  });
}

void selfie_string_free(char* str) { std::free(str); }

const char* selfie_version(void) { return "0.1.0"; }

}  // extern "C"
