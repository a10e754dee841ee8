#include "heuristics.hpp"

#include <algorithm>

namespace selfie {

const std::string& standard_heuristics_source() {
  static const std::string src = R"(-- Standard induction-argument heuristics.

-- Every free variable that is not an induction term must appear in the
-- arbitrary field.
naive_generalization :=
  ALL free_var_term : term.
      term_is_free (free_var_term)
    &
      !(EX induction_term : term in induction_term.
          are_same_terms (free_var_term, induction_term))
   ->
    EX generalized_term : term in arbitrary_term.
      are_same_terms (free_var_term, generalized_term)

-- Inner check, applied per defining clause of f_term: the parameter at
-- position generalize_nth on the left-hand side differs from the
-- argument at that position in some application of f_term on the right.
generalize_nth_argument_of :=
  \ [generalize_nth, f_term].
   EX root_occ : term_occurrence.
      is_root_in_a_location (root_occ)
    &
     (EX lhs_occ : term_occurrence.
        is_lhs_of_root (lhs_occ, root_occ)
      &
       (EX nth_param_on_lhs : term_occurrence.
          is_nplus1th_child_of (nth_param_on_lhs, generalize_nth, lhs_occ)
        &
         (EX nth_param_on_rhs : term_occurrence.
            !are_of_same_term (nth_param_on_rhs, nth_param_on_lhs)
          &
           (EX f_occ_on_rhs : term_occurrence : f_term.
              is_nth_argument_of (nth_param_on_rhs, generalize_nth, f_occ_on_rhs)))))

-- Generalized variables must sit at an argument position of a
-- recursively defined constant, distinct from the induction position,
-- and that argument must change in some recursive call.
generalize_only_what_should_be_generalized :=
  ALL arb_term : term in arbitrary_term.
   EX ind_term : term in induction_term.
    EX ind_occ : term_occurrence : ind_term.
     EX f_term : term.
        is_defined_with_recursion_keyword (f_term)
      &
       (EX f_occ : term_occurrence : f_term.
         EX recursion_on_nth : number.
            is_or_below_nth_argument_of (ind_occ, recursion_on_nth, f_occ)
          &
           (EX arb_occ : term_occurrence : arb_term.
             EX generalize_nth : number.
                is_or_below_nth_argument_of (arb_occ, generalize_nth, f_occ)
              &
                !are_same_number (recursion_on_nth, generalize_nth)
              &
                in_some_definition
                  (f_term, generalize_nth_argument_of,
                   [generalize_nth, f_term])))

-- Induction terms must be free variables appearing as an argument of a
-- recursively defined constant in the goal.
induction_term_occurs :=
  ALL ind_term : term in induction_term.
    term_is_free (ind_term)
   &
    (EX ind_occ : term_occurrence : ind_term.
      EX f_term : term.
         is_defined_with_recursion_keyword (f_term)
       &
        (EX f_occ : term_occurrence : f_term.
          EX n : number.
            is_nth_argument_of (ind_occ, n, f_occ)))
)";
  return src;
}

Program standard_program() { return parse_assertion(standard_heuristics_source()); }

AssertionPtr naive_generalization() {
  Program p = standard_program();
  return *p.find("naive_generalization");
}

std::pair<AssertionPtr, AssertionPtr> semantic_generalization() {
  Program p = standard_program();
  return {*p.find("generalize_only_what_should_be_generalized"),
          *p.find("generalize_nth_argument_of")};
}

HeuristicSuite suite_from_program(Program prog) {
  HeuristicSuite suite;
  for (const auto& [name, body] : prog.defs) {
    // Lambda definitions are helpers to be applied by other heuristics,
    // not boolean judgments of their own.
    if (body->kind == Assertion::Kind::Lambda) continue;
    suite.entries.push_back({name, body, 1.0});
  }
  suite.program = std::move(prog);
  return suite;
}

HeuristicSuite standard_suite() { return suite_from_program(standard_program()); }

std::vector<Score> score_candidates(const TermPtr& goal,
                                    const std::vector<InductArguments>& candidates,
                                    const ProofContext& ctx, const HeuristicSuite& suite,
                                    const EvalOptions& opts) {
  std::vector<Score> scores;
  scores.reserve(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    Score s;
    s.candidate = candidates[i];
    s.candidate_index = i;
    for (const auto& entry : suite.entries) {
      Score::PerHeuristic ph;
      ph.name = entry.name;
      try {
        EvalResult r =
            evaluate_assertion(entry.assertion, goal, candidates[i], ctx, opts, &suite.program);
        ph.verdict = r.verdict;
        ph.warnings = std::move(r.warnings);
        ph.stats = r.stats;
      } catch (const EvalError& e) {
        ph.verdict = false;
        ph.warnings.push_back({eval_error_kind_name(e.kind), e.what()});
      } catch (const Error& e) {
        ph.verdict = false;
        ph.warnings.push_back({"Error", e.what()});
      }
      if (ph.verdict) {
        s.satisfied.insert(entry.name);
        s.total += entry.weight;
      }
      s.per_heuristic.push_back(std::move(ph));
    }
    scores.push_back(std::move(s));
  }
  std::stable_sort(scores.begin(), scores.end(),
                   [](const Score& a, const Score& b) { return a.total > b.total; });
  return scores;
}

namespace {

void collect_free_vars(const TermPtr& t, std::vector<TermPtr>& out) {
  if (t->kind == Term::Kind::Free) {
    for (const auto& v : out) {
      if (equal_terms(v, t)) return;
    }
    out.push_back(t);
    return;
  }
  for (const auto& c : flattened_child_terms(t)) collect_free_vars(c, out);
}

// All index subsets of {0..n-1} of size 1..max_size (plus the empty
// set when allowed), smaller sets first, lexicographic within a size.
std::vector<std::vector<size_t>> subsets_up_to(size_t n, int max_size, bool empty_allowed) {
  std::vector<std::vector<size_t>> out;
  if (empty_allowed) out.push_back({});
  for (int size = 1; size <= max_size; ++size) {
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t start) -> void {
      if (static_cast<int>(pick.size()) == size) {
        out.push_back(pick);
        return;
      }
      for (size_t i = start; i < n; ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

}  // namespace

std::vector<InductArguments> generate_candidates(const TermPtr& goal, const ProofContext& ctx,
                                                 const CandidateLimits& limits) {
  (void)ctx;
  std::vector<TermPtr> vars;
  collect_free_vars(goal, vars);
  std::vector<InductArguments> out;
  auto induct_sets = subsets_up_to(vars.size(), limits.max_induction_vars, false);
  for (const auto& ind : induct_sets) {
    std::vector<TermPtr> rest;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (std::find(ind.begin(), ind.end(), i) == ind.end()) rest.push_back(vars[i]);
    }
    auto arb_sets = subsets_up_to(rest.size(), limits.max_arbitrary, true);
    for (const auto& arb : arb_sets) {
      InductArguments args;
      for (size_t i : ind) args.induction_terms.push_back(vars[i]);
      for (size_t i : arb) args.arbitrary_terms.push_back(rest[i]);
      out.push_back(std::move(args));
      if (static_cast<int>(out.size()) >= limits.max_candidates) return out;
    }
  }
  return out;
}

}  // namespace selfie
