// Command-line frontend for the selfie engine. Talks to the engine
// exclusively through the public C API.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "selfie/selfie.h"

namespace {

struct SessionDeleter {
  void operator()(selfie_session* s) const { selfie_session_free(s); }
};
using SessionPtr = std::unique_ptr<selfie_session, SessionDeleter>;

struct Options {
  std::string theory_path;
  std::vector<std::string> heuristic_paths;
  std::string heuristic_name;
  std::string format = "json";
  std::vector<std::string> induct_terms;
  std::vector<std::string> arbitrary_terms;
  std::vector<std::string> rule_names;
  int max_arbitrary = 2;
  int max_candidates = 64;
  int max_semantic_depth = 3;
};

int die(const selfie_session* s, const char* stage) {
  std::fprintf(stderr, "selfie: %s: %s\n", stage, selfie_last_error(s));
  return 2;
}

selfie_format format_of(const Options& opt) {
  return opt.format == "text" ? SELFIE_FORMAT_TEXT : SELFIE_FORMAT_JSON;
}

// Loads theory + heuristics into a fresh session; returns nullptr after
// printing the error.
SessionPtr make_session(const Options& opt) {
  SessionPtr session(selfie_session_new());
  if (!session) {
    std::fprintf(stderr, "selfie: out of memory\n");
    return nullptr;
  }
  if (selfie_set_max_semantic_depth(session.get(), opt.max_semantic_depth) != SELFIE_OK) {
    die(session.get(), "config");
    return nullptr;
  }
  if (selfie_set_candidate_limits(session.get(), 1, opt.max_arbitrary, opt.max_candidates) !=
      SELFIE_OK) {
    die(session.get(), "config");
    return nullptr;
  }
  if (selfie_load_theory_file(session.get(), opt.theory_path.c_str()) != SELFIE_OK) {
    die(session.get(), opt.theory_path.c_str());
    return nullptr;
  }
  std::vector<std::string> heuristics = opt.heuristic_paths;
  if (heuristics.empty()) {
    // Fall back to the default heuristic search path when set.
    if (const char* env = std::getenv("SELFIE_HEURISTIC_PATH")) heuristics.push_back(env);
  }
  for (const auto& path : heuristics) {
    if (selfie_load_heuristics_file(session.get(), path.c_str()) != SELFIE_OK) {
      die(session.get(), path.c_str());
      return nullptr;
    }
  }
  // An explicit candidate from flags joins the declared ones.
  if (!opt.induct_terms.empty()) {
    std::string cand = "induct";
    for (const auto& t : opt.induct_terms) cand += " (" + t + ")";
    if (!opt.arbitrary_terms.empty()) {
      cand += " arbitrary:";
      for (const auto& t : opt.arbitrary_terms) cand += " (" + t + ")";
    }
    if (!opt.rule_names.empty()) {
      cand += " rule:";
      for (const auto& r : opt.rule_names) cand += " " + r;
    }
    if (selfie_add_candidate(session.get(), cand.c_str()) != SELFIE_OK) {
      die(session.get(), "candidate");
      return nullptr;
    }
  }
  return session;
}

int print_report(char* report) {
  std::fputs(report, stdout);
  selfie_string_free(report);
  return 0;
}

int run_check(const Options& opt) {
  SessionPtr session = make_session(opt);
  if (!session) return 2;
  char* report = nullptr;
  int all_true = 0;
  if (selfie_check(session.get(), opt.heuristic_name.c_str(), format_of(opt), &report,
                   &all_true) != SELFIE_OK)
    return die(session.get(), "check");
  print_report(report);
  return all_true ? 0 : 1;
}

int run_recommend(const Options& opt) {
  SessionPtr session = make_session(opt);
  if (!session) return 2;
  char* report = nullptr;
  if (selfie_recommend(session.get(), format_of(opt), &report) != SELFIE_OK)
    return die(session.get(), "recommend");
  return print_report(report);
}

int run_parse(const Options& opt) {
  SessionPtr session = make_session(opt);
  if (!session) return 2;
  char* report = nullptr;
  if (selfie_parse_dump(session.get(), format_of(opt), &report) != SELFIE_OK)
    return die(session.get(), "parse");
  return print_report(report);
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_limits) {
  cmd->add_option("--theory", opt.theory_path, "theory file to load")->required();
  cmd->add_option("--heuristics", opt.heuristic_paths,
                  "heuristic file (repeatable; first file replaces the built-ins)");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--max-semantic-depth", opt.max_semantic_depth,
                  "maximum nesting of semantic constructs")
      ->capture_default_str();
  if (with_limits) {
    cmd->add_option("--max-arbitrary", opt.max_arbitrary,
                    "maximum generalized variables per generated candidate")
        ->capture_default_str();
    cmd->add_option("--max-candidates", opt.max_candidates,
                    "maximum number of generated candidates")
        ->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"judge and rank induction-tactic arguments against heuristic assertions"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* check = app.add_subcommand("check", "evaluate one heuristic per candidate");
  add_common_flags(check, opt, false);
  check->add_option("--heuristic", opt.heuristic_name, "heuristic definition to evaluate")
      ->required();
  check->add_option("--induct", opt.induct_terms, "induction term for an explicit candidate");
  check->add_option("--arbitrary", opt.arbitrary_terms,
                    "generalized variable for an explicit candidate");
  check->add_option("--rule", opt.rule_names, "rule name for an explicit candidate");

  CLI::App* recommend =
      app.add_subcommand("recommend", "rank candidates with the active heuristic suite");
  add_common_flags(recommend, opt, true);

  CLI::App* parse = app.add_subcommand("parse", "dump parsed terms, tables and heuristic ASTs");
  add_common_flags(parse, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (check->parsed()) return run_check(opt);
  if (recommend->parsed()) return run_recommend(opt);
  return run_parse(opt);
}
