#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "assertion.hpp"
#include "interpreter.hpp"
#include "theory.hpp"

namespace selfie {

/// Ordered collection of boolean heuristics. `program` keeps the full
/// definition list (including lambda helpers referenced by entries).
struct HeuristicSuite {
  struct Entry {
    std::string name;
    AssertionPtr assertion;
    double weight = 1.0;
  };
  std::vector<Entry> entries;
  Program program;
};

/// Source text of the built-in heuristics, in the assertion grammar.
const std::string& standard_heuristics_source();

/// Parsed built-in definitions.
Program standard_program();

/// The generalization heuristic over the goal alone: every free
/// variable not used for induction must be generalized.
AssertionPtr naive_generalization();

/// The definition-aware generalization pair: (outer assertion, inner
/// lambda applied per defining clause).
std::pair<AssertionPtr, AssertionPtr> semantic_generalization();

/// Built-in suite: the boolean definitions of the standard program with
/// unit weights.
HeuristicSuite standard_suite();

/// Builds a suite from arbitrary definitions: every non-lambda
/// definition becomes an entry with unit weight.
HeuristicSuite suite_from_program(Program prog);

struct Score {
  InductArguments candidate;
  size_t candidate_index = 0;
  std::set<std::string> satisfied;
  double total = 0.0;
  struct PerHeuristic {
    std::string name;
    bool verdict = false;
    std::vector<EvalWarning> warnings;
    EvalStats stats;
  };
  std::vector<PerHeuristic> per_heuristic;
};

/// Scores every candidate against the suite. Evaluation errors demote
/// the verdict to false with the error recorded as a warning, so
/// scoring is total. Result is sorted by total descending, ties broken
/// by candidate order.
std::vector<Score> score_candidates(const TermPtr& goal,
                                    const std::vector<InductArguments>& candidates,
                                    const ProofContext& ctx, const HeuristicSuite& suite,
                                    const EvalOptions& opts = {});

struct CandidateLimits {
  int max_induction_vars = 1;
  int max_arbitrary = 2;
  int max_candidates = 64;
};

/// Enumerates candidates from the goal's free variables: nonempty
/// induction subsets crossed with subsets of the remaining variables
/// for the arbitrary field. Deterministic order: variables by first
/// occurrence in the goal, smaller sets first.
std::vector<InductArguments> generate_candidates(const TermPtr& goal, const ProofContext& ctx,
                                                 const CandidateLimits& limits = {});

}  // namespace selfie
