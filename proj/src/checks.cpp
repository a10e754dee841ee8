#include "checks.hpp"

#include <algorithm>

namespace selfie {

namespace {

struct ScopeEntry {
  std::string name;
  bool is_occurrence;  // quantified at type term_occurrence
};

class Checker {
 public:
  std::vector<Diagnostic> diags;
  std::vector<ScopeEntry> scope;

  void error(const AssertionPtr& a, std::string msg) {
    diags.push_back({Diagnostic::Severity::Error, std::move(msg), a->loc});
  }
  void warn(const AssertionPtr& a, std::string msg) {
    diags.push_back({Diagnostic::Severity::Warning, std::move(msg), a->loc});
  }

  bool bound(const std::string& n) const {
    return std::any_of(scope.begin(), scope.end(),
                       [&](const ScopeEntry& e) { return e.name == n; });
  }
  bool bound_as_occurrence(const std::string& n) const {
    for (size_t i = scope.size(); i-- > 0;) {
      if (scope[i].name == n) return scope[i].is_occurrence;
    }
    return false;
  }

  void push(const AssertionPtr& at, const std::string& n, bool occ) {
    if (bound(n)) warn(at, "binding of '" + n + "' shadows an enclosing binding");
    scope.push_back({n, occ});
  }

  void check_bool_position(const AssertionPtr& a, const char* where) {
    if (a->kind == Assertion::Kind::Lambda)
      warn(a, std::string("lambda used where a boolean is needed (") + where +
                  "); apply it to arguments");
  }

  void check_semantic_args(const AssertionPtr& arg) {
    // Flag occurrence-typed variables anywhere inside the argument
    // expression; occurrences must not pass through the boundary.
    if (arg->kind == Assertion::Kind::Var && bound_as_occurrence(arg->name)) {
      error(arg, "term occurrence '" + arg->name +
                     "' must not be passed through a semantic construct");
      return;
    }
    for (const auto& c : arg->children) check_semantic_args(c);
  }

  void visit(const AssertionPtr& a) {
    switch (a->kind) {
      case Assertion::Kind::Var:
        if (!bound(a->name)) error(a, "unbound variable '" + a->name + "'");
        return;
      case Assertion::Kind::NumberLit:
      case Assertion::Kind::TermLit:
      case Assertion::Kind::CommandLit:
      case Assertion::Kind::True:
      case Assertion::Kind::False:
        return;
      case Assertion::Kind::Not:
        check_bool_position(a->children[0], "negation operand");
        visit(a->children[0]);
        return;
      case Assertion::Kind::And:
      case Assertion::Kind::Or:
      case Assertion::Kind::Implies:
        check_bool_position(a->children[0], "connective operand");
        check_bool_position(a->children[1], "connective operand");
        visit(a->children[0]);
        visit(a->children[1]);
        return;
      case Assertion::Kind::QuantTyped: {
        push(a, a->name, a->type == SelfieType::TermOccurrence);
        check_bool_position(a->children[0], "quantifier body");
        visit(a->children[0]);
        scope.pop_back();
        return;
      }
      case Assertion::Kind::QuantModifier: {
        push(a, a->name, false);
        check_bool_position(a->children[0], "quantifier body");
        visit(a->children[0]);
        scope.pop_back();
        return;
      }
      case Assertion::Kind::QuantOccIn: {
        if (!bound(a->domain_var)) error(a, "unbound variable '" + a->domain_var + "'");
        push(a, a->name, true);
        check_bool_position(a->children[0], "quantifier body");
        visit(a->children[0]);
        scope.pop_back();
        return;
      }
      case Assertion::Kind::Lambda: {
        for (const auto& p : a->params) push(a, p, false);
        visit(a->children[0]);
        for (size_t i = 0; i < a->params.size(); ++i) scope.pop_back();
        return;
      }
      case Assertion::Kind::Apply:
        for (const auto& c : a->children) visit(c);
        return;
      case Assertion::Kind::Atomic: {
        const auto& sig = atomic_signature(a->atomic);
        if (a->children.size() != sig.args.size())
          error(a, std::string("atomic '") + sig.name + "' expects " +
                       std::to_string(sig.args.size()) + " arguments, got " +
                       std::to_string(a->children.size()));
        for (const auto& c : a->children) visit(c);
        return;
      }
      case Assertion::Kind::Semantic: {
        visit(a->children[0]);
        visit(a->children[1]);
        for (size_t i = 2; i < a->children.size(); ++i) {
          check_semantic_args(a->children[i]);
          visit(a->children[i]);
        }
        return;
      }
      case Assertion::Kind::Let: {
        visit(a->children[0]);
        push(a, a->name, false);
        visit(a->children[1]);
        scope.pop_back();
        return;
      }
    }
  }
};

}  // namespace

std::vector<Diagnostic> static_check(const Program& prog) {
  Checker c;
  for (const auto& [name, body] : prog.defs) {
    c.visit(body);
    c.scope.push_back({name, false});
  }
  return c.diags;
}

std::vector<Diagnostic> static_check_assertion(const AssertionPtr& a,
                                               const std::vector<std::string>& in_scope) {
  Checker c;
  for (const auto& n : in_scope) c.scope.push_back({n, false});
  c.visit(a);
  return c.diags;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Diagnostic::Severity::Error;
  });
}

}  // namespace selfie
