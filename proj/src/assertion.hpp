#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "term.hpp"
#include "theory.hpp"

namespace selfie {

/// Quantifiable primitive types.
enum class SelfieType { Term, TermOccurrence, Rule, Number };

const char* selfie_type_name(SelfieType t);
std::optional<SelfieType> selfie_type_from_name(const std::string& s);

enum class ModifierKind { InductionTerm, ArbitraryTerm };

const char* modifier_name(ModifierKind m);

enum class QuantKind { Exists, Forall };
enum class SemanticKind { Some, All };

/// Atomic assertion vocabulary. Each name has a fixed arity and
/// argument typing; see atomic_signature().
enum class AtomicName {
  IsRuleOf,
  TermOccurrenceIsOfTerm,
  AreSameTerm,
  AreOfSameTerm,
  AreSameTerms,
  IsInTermOccurrence,
  IsAtomic,
  IsConstant,
  IsFreeVariable,
  IsLambda,
  IsApplication,
  IsAnArgumentOf,
  IsNthArgumentOf,
  IsNthInductionTerm,
  IsNthArbitraryTerm,
  IsAtDeepest,
  TermIsFree,
  AreSameNumber,
  IsDefinedWithRecursionKeyword,
  IsDefinedWithCommand,
  IsOrBelowNthArgumentOf,
  IsRootInALocation,
  IsLhsOfRoot,
  IsNplus1thChildOf,
};

/// Expected value kind of an atomic argument position.
enum class ArgKind { Occurrence, Number, Term, Rule, Command };

struct AtomicSignature {
  const char* name;
  std::vector<ArgKind> args;
};

const AtomicSignature& atomic_signature(AtomicName a);
std::optional<AtomicName> atomic_from_name(const std::string& s);
std::vector<AtomicName> all_atomic_names();

struct SourceLoc {
  int line = 0;
  int col = 0;
};

struct Assertion;
using AssertionPtr = std::shared_ptr<const Assertion>;

/// Assertion AST. Child layout per kind:
///   Not         [a]
///   And/Or/Implies [lhs, rhs]
///   QuantTyped / QuantModifier / QuantOccIn [body]
///   Lambda      [body]
///   Apply       [fun, arg...]
///   Atomic      [arg...]
///   Semantic    [target, heuristic, arg...]
///   Let         [bound, body]
struct Assertion {
  enum class Kind {
    Var,
    NumberLit,
    TermLit,
    CommandLit,
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    QuantTyped,
    QuantModifier,
    QuantOccIn,
    Lambda,
    Apply,
    Atomic,
    Semantic,
    Let,
  };

  Kind kind;
  std::string name;  // Var name; bound variable of quantifiers and Let
  int number = 0;
  TermPtr term;
  DefinitionCommand command = DefinitionCommand::Definition;
  QuantKind quant = QuantKind::Exists;
  SelfieType type = SelfieType::Term;
  ModifierKind modifier = ModifierKind::InductionTerm;
  std::string domain_var;  // QuantOccIn: variable holding the term
  AtomicName atomic = AtomicName::IsAtomic;
  SemanticKind semantic = SemanticKind::Some;
  std::vector<std::string> params;  // Lambda
  std::vector<AssertionPtr> children;
  SourceLoc loc;
};

AssertionPtr mk_var(std::string name);
AssertionPtr mk_number_lit(int n);
AssertionPtr mk_term_lit(TermPtr t);
AssertionPtr mk_command_lit(DefinitionCommand c);
AssertionPtr mk_true();
AssertionPtr mk_false();
AssertionPtr mk_not(AssertionPtr a);
AssertionPtr mk_and(AssertionPtr a, AssertionPtr b);
AssertionPtr mk_or(AssertionPtr a, AssertionPtr b);
AssertionPtr mk_implies(AssertionPtr a, AssertionPtr b);
AssertionPtr mk_quant(QuantKind q, std::string var, SelfieType type, AssertionPtr body);
AssertionPtr mk_quant_modifier(QuantKind q, std::string var, ModifierKind m, AssertionPtr body);
AssertionPtr mk_quant_occ_in(QuantKind q, std::string occ_var, std::string term_var,
                             AssertionPtr body);
AssertionPtr mk_lambda(std::vector<std::string> params, AssertionPtr body);
AssertionPtr mk_apply(AssertionPtr fun, std::vector<AssertionPtr> args);
AssertionPtr mk_atomic(AtomicName a, std::vector<AssertionPtr> args);
AssertionPtr mk_semantic(SemanticKind k, AssertionPtr target, AssertionPtr heuristic,
                         std::vector<AssertionPtr> args);
AssertionPtr mk_let(std::string name, AssertionPtr bound, AssertionPtr body);

/// Structural equality (ignores source locations).
bool equal_assertions(const AssertionPtr& a, const AssertionPtr& b);

/// Named top-level definitions in file order; earlier names are in
/// scope for later bodies.
struct Program {
  std::vector<std::pair<std::string, AssertionPtr>> defs;

  const AssertionPtr* find(const std::string& name) const;
  std::vector<std::string> names() const;
  void add(std::string name, AssertionPtr body);  // throws on duplicates
};

/// Parses an assertion file (`name := assertion` definitions). Rejects
/// unbound variables, unknown atomics and arity mismatches.
Program parse_assertion(const std::string& source);

/// Parses one assertion body against the given names in scope.
AssertionPtr parse_assertion_expr(const std::string& source,
                                  const std::vector<std::string>& in_scope = {});

/// Renders an assertion; parse_assertion_expr(print_assertion(a)) is
/// structurally equal to `a`.
std::string print_assertion(const AssertionPtr& a);

/// Renders a whole program as definitions.
std::string print_program(const Program& p);

}  // namespace selfie
