#include "report.hpp"

#include <sstream>

#include "json.hpp"
#include "lookup.hpp"

namespace selfie {

namespace {

using nlohmann::json;

std::string term_sexp(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Constant:
      return "(const " + t->name + ")";
    case Term::Kind::Free:
      return "(free " + t->name + ")";
    case Term::Kind::Bound:
      return "(bound " + std::to_string(t->index) + ")";
    case Term::Kind::Lambda:
      return "(lambda " + term_sexp(t->body) + ")";
    case Term::Kind::App:
      return "(app " + term_sexp(t->fun) + " " + term_sexp(t->arg) + ")";
  }
  return "?";
}

json candidate_json(const InductArguments& args) {
  json j;
  j["induct"] = json::array();
  for (const auto& t : args.induction_terms) j["induct"].push_back(print_term(t));
  j["arbitrary"] = json::array();
  for (const auto& t : args.arbitrary_terms) j["arbitrary"].push_back(print_term(t));
  j["rules"] = args.rules;
  return j;
}

json warnings_json(const std::vector<EvalWarning>& ws) {
  json j = json::array();
  for (const auto& w : ws) j.push_back({{"kind", w.kind}, {"message", w.message}});
  return j;
}

json stats_json(const EvalStats& s) {
  return {{"quantifier_bindings_tried", s.quantifier_bindings_tried},
          {"semantic_calls", s.semantic_calls},
          {"clauses_examined", s.clauses_examined}};
}

}  // namespace

std::string candidate_to_string(const InductArguments& args) {
  std::string out = "induct";
  for (const auto& t : args.induction_terms) out += " " + print_term(t);
  if (!args.arbitrary_terms.empty()) {
    out += " arbitrary:";
    for (const auto& t : args.arbitrary_terms) out += " " + print_term(t);
  }
  if (!args.rules.empty()) {
    out += " rule:";
    for (const auto& r : args.rules) out += " " + r;
  }
  return out;
}

std::string render_check_report(const std::string& theory_name,
                                const std::vector<CheckReportItem>& items, ReportFormat f) {
  if (f == ReportFormat::Json) {
    json j;
    j["command"] = "check";
    j["theory"] = theory_name;
    j["results"] = json::array();
    for (const auto& item : items) {
      json r;
      r["candidate"] = candidate_json(item.candidate);
      r["heuristic_name"] = item.heuristic_name;
      r["verdict"] = item.result.verdict;
      r["warnings"] = warnings_json(item.result.warnings);
      r["eval_stats"] = stats_json(item.result.stats);
      j["results"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& item : items) {
    out << (item.result.verdict ? "true " : "false") << "  " << item.heuristic_name << "  ("
        << candidate_to_string(item.candidate) << ")\n";
    for (const auto& w : item.result.warnings)
      out << "       warning [" << w.kind << "] " << w.message << "\n";
  }
  return out.str();
}

std::string render_recommend_report(const std::string& theory_name,
                                    const std::vector<Score>& scores, ReportFormat f) {
  if (f == ReportFormat::Json) {
    json j;
    j["command"] = "recommend";
    j["theory"] = theory_name;
    j["results"] = json::array();
    int rank = 1;
    for (const auto& s : scores) {
      json r;
      r["rank"] = rank++;
      r["total"] = s.total;
      r["candidate"] = candidate_json(s.candidate);
      r["per_heuristic"] = json::array();
      for (const auto& ph : s.per_heuristic) {
        r["per_heuristic"].push_back({{"heuristic_name", ph.name},
                                      {"verdict", ph.verdict},
                                      {"warnings", warnings_json(ph.warnings)},
                                      {"eval_stats", stats_json(ph.stats)}});
      }
      j["results"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  int rank = 1;
  for (const auto& s : scores) {
    out << rank++ << ". total=" << s.total << "  " << candidate_to_string(s.candidate) << "\n";
    for (const auto& ph : s.per_heuristic)
      out << "     " << (ph.verdict ? "true " : "false") << "  " << ph.name << "\n";
  }
  return out.str();
}

std::string render_parse_dump(const Theory& theory, const Program* heuristics, ReportFormat f) {
  LookupTable table = LookupTable::build(theory.goal);
  if (f == ReportFormat::Json) {
    json j;
    j["command"] = "parse";
    j["goal"] = {{"name", theory.goal_name},
                 {"term", print_term(theory.goal)},
                 {"ast", term_sexp(theory.goal)},
                 {"table", table.dump_lines()}};
    j["definitions"] = json::array();
    for (const auto& name : theory.context.defined_names()) {
      const ConstantInfo* info = theory.context.find(name);
      json d;
      d["name"] = name;
      d["command"] = command_name(info->command);
      d["clauses"] = json::array();
      for (const auto& c : info->clauses) d["clauses"].push_back(print_term(c.body));
      j["definitions"].push_back(std::move(d));
    }
    j["candidates"] = json::array();
    for (const auto& c : theory.candidates) j["candidates"].push_back(candidate_json(c));
    j["heuristics"] = json::array();
    if (heuristics) {
      for (const auto& [name, body] : heuristics->defs)
        j["heuristics"].push_back({{"name", name}, {"text", print_assertion(body)}});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "goal " << theory.goal_name << ": " << print_term(theory.goal) << "\n";
  out << "ast: " << term_sexp(theory.goal) << "\n";
  for (const auto& line : table.dump_lines()) out << line << "\n";
  for (const auto& name : theory.context.defined_names()) {
    const ConstantInfo* info = theory.context.find(name);
    out << command_name(info->command) << " " << name << ":\n";
    for (const auto& c : info->clauses) out << "  " << print_term(c.body) << "\n";
  }
  for (const auto& c : theory.candidates) out << "candidate: " << candidate_to_string(c) << "\n";
  if (heuristics) {
    for (const auto& [name, body] : heuristics->defs)
      out << name << " :=\n  " << print_assertion(body) << "\n";
  }
  return out.str();
}

}  // namespace selfie
