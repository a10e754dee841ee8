#include "session.hpp"

#include <fstream>
#include <sstream>

namespace selfie {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Session::Session() : program_(standard_program()) {}

void Session::load_theory_file(const std::string& path) {
  load_theory_source(read_file(path), path);
}

void Session::load_theory_source(const std::string& source, const std::string& name) {
  theory_ = parse_theory(source);
  theory_name_ = name;
  extra_candidates_.clear();
}

void Session::validate_program(const Program& prog, const std::string& name) const {
  auto diags = static_check(prog);
  for (const auto& d : diags) {
    if (d.severity == Diagnostic::Severity::Error)
      throw ParseError("in " + name + ": " + d.message, d.loc.line, d.loc.col);
  }
}

void Session::load_heuristics_file(const std::string& path) {
  load_heuristics_source(read_file(path), path);
}

void Session::load_heuristics_source(const std::string& source, const std::string& name) {
  Program parsed = parse_assertion(source);
  validate_program(parsed, name);
  if (builtin_heuristics_) {
    // The first explicitly loaded file replaces the built-ins.
    program_ = std::move(parsed);
    builtin_heuristics_ = false;
    return;
  }
  for (auto& [n, body] : parsed.defs) program_.add(n, body);
}

const Theory& Session::theory() const {
  if (!theory_) throw Error("no theory loaded");
  return *theory_;
}

void Session::add_candidate(const std::string& text) {
  const Theory& th = theory();
  extra_candidates_.push_back(parse_candidate(text, th.context, th.goal));
}

std::vector<InductArguments> Session::effective_candidates() const {
  const Theory& th = theory();
  std::vector<InductArguments> out = th.candidates;
  out.insert(out.end(), extra_candidates_.begin(), extra_candidates_.end());
  return out;
}

CommandOutput Session::check(const std::string& heuristic_name, ReportFormat fmt) {
  const Theory& th = theory();
  if (!program_.find(heuristic_name)) throw Error("unknown heuristic '" + heuristic_name + "'");
  std::vector<InductArguments> candidates = effective_candidates();
  if (candidates.empty())
    throw Error("no candidates: declare a 'try induct' block or pass one explicitly");
  std::vector<CheckReportItem> items;
  bool all_true = true;
  for (const auto& cand : candidates) {
    CheckReportItem item;
    item.candidate = cand;
    item.heuristic_name = heuristic_name;
    item.result =
        evaluate_program(program_, heuristic_name, th.goal, cand, th.context, eval_options_);
    all_true = all_true && item.result.verdict;
    items.push_back(std::move(item));
  }
  return {render_check_report(theory_name_, items, fmt), all_true ? 0 : 1};
}

CommandOutput Session::recommend(ReportFormat fmt) {
  const Theory& th = theory();
  std::vector<InductArguments> candidates = effective_candidates();
  // Declared candidates pin the comparison; otherwise enumerate.
  if (candidates.empty()) candidates = generate_candidates(th.goal, th.context, limits_);
  HeuristicSuite suite = suite_from_program(program_);
  std::vector<Score> scores =
      score_candidates(th.goal, candidates, th.context, suite, eval_options_);
  return {render_recommend_report(theory_name_, scores, fmt), 0};
}

CommandOutput Session::parse_dump(ReportFormat fmt) {
  const Theory& th = theory();
  return {render_parse_dump(th, &program_, fmt), 0};
}

}  // namespace selfie
