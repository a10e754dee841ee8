#pragma once

#include <optional>
#include <string>
#include <vector>

#include "checks.hpp"
#include "heuristics.hpp"
#include "report.hpp"
#include "theory.hpp"

namespace selfie {

/// Outcome of a session command: the rendered report plus the process
/// exit status the CLI should use (0 all verdicts true / success,
/// 1 some verdict false, 2 load or evaluation error; errors are
/// reported by throwing instead).
struct CommandOutput {
  std::string report;
  int exit_code = 0;
};

/// Holds one loaded theory plus the active heuristic program, and runs
/// the check / recommend / parse commands against them. Heuristics
/// default to the built-in suite until a heuristic file is loaded;
/// loading replaces the built-ins.
class Session {
 public:
  Session();

  void load_theory_file(const std::string& path);
  void load_theory_source(const std::string& source, const std::string& name);
  void load_heuristics_file(const std::string& path);
  void load_heuristics_source(const std::string& source, const std::string& name);

  /// Adds a candidate given as "induct ... [arbitrary: ...] [rule: ...]".
  void add_candidate(const std::string& text);

  void set_max_semantic_depth(int depth) { eval_options_.max_semantic_depth = depth; }
  void set_candidate_limits(const CandidateLimits& limits) { limits_ = limits; }

  CommandOutput check(const std::string& heuristic_name, ReportFormat fmt);
  CommandOutput recommend(ReportFormat fmt);
  CommandOutput parse_dump(ReportFormat fmt);

  const Theory& theory() const;
  const Program& heuristics() const { return program_; }

 private:
  std::optional<Theory> theory_;
  std::string theory_name_;
  std::vector<InductArguments> extra_candidates_;
  Program program_;
  bool builtin_heuristics_ = true;
  EvalOptions eval_options_;
  CandidateLimits limits_;

  std::vector<InductArguments> effective_candidates() const;
  void validate_program(const Program& prog, const std::string& name) const;
};

std::string read_file(const std::string& path);

}  // namespace selfie
