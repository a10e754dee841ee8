#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "term.hpp"

namespace selfie {

/// Definitional command of a registered constant.
enum class DefinitionCommand { Definition, Primrec, Fun, Function, Inductive, InductiveSet };

const char* command_name(DefinitionCommand c);
std::optional<DefinitionCommand> command_from_name(const std::string& s);

bool is_recursion_command(DefinitionCommand c);  // fun | function | primrec

/// One defining equation of a constant, with leading meta-binders
/// already stripped; clause variables are free variables.
struct Clause {
  TermPtr body;
};

/// Strips leading universal meta-binders from a raw clause, turning the
/// bound variables into free variables. Binder display hints are reused
/// when they do not collide with names already present; otherwise fresh
/// names are generated. Idempotent.
Clause normalize_clause(const TermPtr& raw);

struct ConstantInfo {
  DefinitionCommand command;
  std::vector<Clause> clauses;
};

/// Registry of defined constants plus the builtin constant set.
class ProofContext {
 public:
  ProofContext();

  static const std::string kEquality;  // "="

  bool is_builtin(const std::string& name) const;
  bool is_constant(const std::string& name) const;  // builtin or defined
  const ConstantInfo* find(const std::string& name) const;

  /// Registers a constant. Every clause must mention the constant.
  void define(const std::string& name, DefinitionCommand command, std::vector<Clause> clauses);

  std::vector<std::string> defined_names() const;  // in definition order
  std::set<std::string> constant_names() const;    // defined + builtins

 private:
  std::set<std::string> builtins_;
  std::vector<std::string> order_;
  std::map<std::string, ConstantInfo> constants_;
};

/// The (induction terms, generalized terms, rules) triple under
/// judgment.
struct InductArguments {
  std::vector<TermPtr> induction_terms;
  std::vector<TermPtr> arbitrary_terms;
  std::vector<std::string> rules;
};

/// Parses a term in the surface syntax. Identifiers in `constant_names`
/// (or builtins) become constants, lambda-bound names become de Bruijn
/// variables, everything else is a free variable. Infix `=`, `#`, `@`
/// desugar to prefix applications; `[a, b]` is cons-list sugar ending
/// in the builtin `nil`.
TermPtr parse_term(const std::string& source, const std::set<std::string>& constant_names);

/// A parsed theory file: definitions, one goal, candidate argument
/// blocks.
struct Theory {
  ProofContext context;
  std::string goal_name;
  TermPtr goal;
  std::vector<InductArguments> candidates;
};

/// Parses a theory file. Definitions are registered in order and become
/// visible to later parses; induct/arbitrary terms must occur in the
/// goal.
Theory parse_theory(const std::string& source);

/// Parses a single candidate block, e.g. "induct xs arbitrary: ys"
/// (leading "try" optional), against an already-loaded goal.
InductArguments parse_candidate(const std::string& source, const ProofContext& ctx,
                                const TermPtr& goal);

}  // namespace selfie
