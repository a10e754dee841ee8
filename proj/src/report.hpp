#pragma once

#include <string>
#include <vector>

#include "heuristics.hpp"
#include "interpreter.hpp"
#include "theory.hpp"

namespace selfie {

enum class ReportFormat { Json, Text };

/// One verdict record of a `check` run.
struct CheckReportItem {
  InductArguments candidate;
  std::string heuristic_name;
  EvalResult result;
};

/// Candidate rendered as the surface `induct ... arbitrary: ... rule: ...`.
std::string candidate_to_string(const InductArguments& args);

std::string render_check_report(const std::string& theory_name,
                                const std::vector<CheckReportItem>& items, ReportFormat f);

std::string render_recommend_report(const std::string& theory_name,
                                    const std::vector<Score>& scores, ReportFormat f);

std::string render_parse_dump(const Theory& theory, const Program* heuristics, ReportFormat f);

}  // namespace selfie
