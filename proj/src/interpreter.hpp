#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "assertion.hpp"
#include "lookup.hpp"
#include "term.hpp"
#include "theory.hpp"

namespace selfie {

/// An occurrence value remembers the table it was enumerated from;
/// occurrences are only meaningful within that evaluation context.
struct OccurrenceValue {
  Path path;
  const LookupTable* table;
};

struct RuleValue {
  std::string name;
};

struct ClosureValue;
using ClosurePtr = std::shared_ptr<const ClosureValue>;

using Value =
    std::variant<bool, int, TermPtr, OccurrenceValue, RuleValue, DefinitionCommand, ClosurePtr>;

/// Lexically scoped variable bindings.
struct Env {
  std::vector<std::pair<std::string, Value>> locals;

  const Value* lookup(const std::string& name) const {
    for (size_t i = locals.size(); i-- > 0;) {
      if (locals[i].first == name) return &locals[i].second;
    }
    return nullptr;
  }
};

struct ClosureValue {
  std::vector<std::string> params;
  AssertionPtr body;
  Env captured;
};

const char* value_kind_name(const Value& v);

enum class EvalErrorKind {
  TypeMismatch,
  UnboundVariable,
  OccurrenceCrossedBoundary,
  ModifierInInnerContext,
  DepthLimitExceeded,
  NotABoolean,
};

const char* eval_error_kind_name(EvalErrorKind k);

struct EvalError : Error {
  EvalError(EvalErrorKind kind, std::string construct, std::string msg, SourceLoc loc)
      : Error(std::string(eval_error_kind_name(kind)) + " in " + construct + ": " + msg),
        kind(kind),
        construct(std::move(construct)),
        detail(std::move(msg)),
        loc(loc) {}
  EvalErrorKind kind;
  std::string construct;
  std::string detail;
  SourceLoc loc;
};

struct EvalWarning {
  std::string kind;
  std::string message;
};

struct EvalStats {
  std::uint64_t quantifier_bindings_tried = 0;
  std::uint64_t semantic_calls = 0;
  std::uint64_t clauses_examined = 0;
  // Number of goal-table queries issued while evaluating in an inner
  // (clause) context; must stay zero.
  std::uint64_t inner_goal_table_queries = 0;
};

/// A witness recorded when an existential quantifier succeeds.
struct TraceBinding {
  std::string var;
  Value value;
};

struct EvalOptions {
  int max_semantic_depth = 3;
  bool record_trace = false;
};

struct EvalResult {
  bool verdict = false;
  std::vector<EvalWarning> warnings;
  EvalStats stats;
  std::vector<TraceBinding> trace;
};

/// Evaluates the named definition of `defs` against the goal, the
/// induct arguments and the proof context. The goal is preprocessed
/// into a lookup table once; quantifier domains come from it until a
/// semantic construct switches the evaluation into a clause context.
EvalResult evaluate_program(const Program& defs, const std::string& name, const TermPtr& goal,
                            const InductArguments& args, const ProofContext& ctx,
                            const EvalOptions& opts = {});

/// Evaluates a bare assertion; `defs` (optional) supplies named
/// definitions it may reference.
EvalResult evaluate_assertion(const AssertionPtr& a, const TermPtr& goal,
                              const InductArguments& args, const ProofContext& ctx,
                              const EvalOptions& opts = {}, const Program* defs = nullptr);

/// Applies the named lambda definition to explicit argument values in
/// the inner context of a single clause, mirroring what a semantic
/// construct does per clause. Argument values must be terms or numbers.
EvalResult evaluate_closure_on_clause(const Program& defs, const std::string& lambda_name,
                                      const std::vector<Value>& args, const Clause& clause,
                                      const ProofContext& ctx, const EvalOptions& opts = {});

}  // namespace selfie
