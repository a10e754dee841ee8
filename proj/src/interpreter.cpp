#include "interpreter.hpp"

#include <algorithm>

namespace selfie {

const char* value_kind_name(const Value& v) {
  switch (v.index()) {
    case 0: return "boolean";
    case 1: return "number";
    case 2: return "term";
    case 3: return "term occurrence";
    case 4: return "rule";
    case 5: return "command";
    case 6: return "function";
  }
  return "?";
}

const char* eval_error_kind_name(EvalErrorKind k) {
  switch (k) {
    case EvalErrorKind::TypeMismatch: return "TypeMismatch";
    case EvalErrorKind::UnboundVariable: return "UnboundVariable";
    case EvalErrorKind::OccurrenceCrossedBoundary: return "OccurrenceCrossedBoundary";
    case EvalErrorKind::ModifierInInnerContext: return "ModifierInInnerContext";
    case EvalErrorKind::DepthLimitExceeded: return "DepthLimitExceeded";
    case EvalErrorKind::NotABoolean: return "NotABoolean";
  }
  return "?";
}

namespace {

class Evaluator {
 public:
  Evaluator(const Program* defs, const ProofContext& ctx, const InductArguments& args,
            const EvalOptions& opts)
      : defs_(defs), ctx_(ctx), args_(args), opts_(opts) {}

  // Evaluation mode: depth 0 is the goal (outer) context, each semantic
  // construct pushes one clause (inner) context for a named constant.
  struct Context {
    const LookupTable* table;
    int depth;
    std::string defining_constant;
  };

  EvalStats stats;
  std::vector<EvalWarning> warnings;
  std::vector<TraceBinding> trace;
  const LookupTable* goal_table = nullptr;

  Value eval(const AssertionPtr& a, Env& env, const Context& ec) {
    switch (a->kind) {
      case Assertion::Kind::Var: {
        if (const Value* v = env.lookup(a->name)) return *v;
        if (defs_) {
          if (const AssertionPtr* def = defs_->find(a->name)) {
            Env fresh;  // top-level definitions are closed
            return eval(*def, fresh, ec);
          }
        }
        throw EvalError(EvalErrorKind::UnboundVariable, "variable", a->name, a->loc);
      }
      case Assertion::Kind::NumberLit:
        return a->number;
      case Assertion::Kind::TermLit:
        return a->term;
      case Assertion::Kind::CommandLit:
        return a->command;
      case Assertion::Kind::True:
        return true;
      case Assertion::Kind::False:
        return false;
      case Assertion::Kind::Not:
        return !as_bool(eval(a->children[0], env, ec), "negation", a->loc);
      case Assertion::Kind::And: {
        if (!as_bool(eval(a->children[0], env, ec), "conjunction", a->loc)) return false;
        return as_bool(eval(a->children[1], env, ec), "conjunction", a->loc);
      }
      case Assertion::Kind::Or: {
        if (as_bool(eval(a->children[0], env, ec), "disjunction", a->loc)) return true;
        return as_bool(eval(a->children[1], env, ec), "disjunction", a->loc);
      }
      case Assertion::Kind::Implies: {
        if (!as_bool(eval(a->children[0], env, ec), "implication", a->loc)) return true;
        return as_bool(eval(a->children[1], env, ec), "implication", a->loc);
      }
      case Assertion::Kind::QuantTyped:
      case Assertion::Kind::QuantModifier:
      case Assertion::Kind::QuantOccIn:
        return eval_quantifier(a, env, ec);
      case Assertion::Kind::Lambda: {
        auto c = std::make_shared<ClosureValue>();
        c->params = a->params;
        c->body = a->children[0];
        c->captured = env;
        return ClosurePtr(std::move(c));
      }
      case Assertion::Kind::Apply: {
        Value fun = eval(a->children[0], env, ec);
        auto* cl = std::get_if<ClosurePtr>(&fun);
        if (!cl)
          throw EvalError(EvalErrorKind::TypeMismatch, "application",
                          std::string("cannot apply a ") + value_kind_name(fun), a->loc);
        std::vector<Value> vals;
        for (size_t i = 1; i < a->children.size(); ++i)
          vals.push_back(eval(a->children[i], env, ec));
        return apply_closure(*cl, vals, ec, a->loc);
      }
      case Assertion::Kind::Atomic: {
        std::vector<Value> vals;
        vals.reserve(a->children.size());
        for (const auto& c : a->children) vals.push_back(eval(c, env, ec));
        return eval_atomic(a, vals, ec);
      }
      case Assertion::Kind::Semantic:
        return eval_semantic(a, env, ec);
      case Assertion::Kind::Let: {
        Value bound = eval(a->children[0], env, ec);
        env.locals.emplace_back(a->name, std::move(bound));
        Value out = eval(a->children[1], env, ec);
        env.locals.pop_back();
        return out;
      }
    }
    throw EvalError(EvalErrorKind::TypeMismatch, "assertion", "unreachable node kind", a->loc);
  }

  Value apply_closure(const ClosurePtr& cl, const std::vector<Value>& vals, const Context& ec,
                      SourceLoc loc) {
    if (vals.size() != cl->params.size())
      throw EvalError(EvalErrorKind::TypeMismatch, "application",
                      "expected " + std::to_string(cl->params.size()) + " arguments, got " +
                          std::to_string(vals.size()),
                      loc);
    Env env = cl->captured;
    for (size_t i = 0; i < vals.size(); ++i) env.locals.emplace_back(cl->params[i], vals[i]);
    return eval(cl->body, env, ec);
  }

 private:
  const Program* defs_;
  const ProofContext& ctx_;
  const InductArguments& args_;
  EvalOptions opts_;

  // Every table access goes through here so the isolation counter sees
  // any goal-table use from an inner context.
  const LookupTable& table_of(const Context& ec) {
    if (ec.depth > 0 && ec.table == goal_table) ++stats.inner_goal_table_queries;
    return *ec.table;
  }

  bool as_bool(const Value& v, const char* construct, SourceLoc loc) {
    if (auto* b = std::get_if<bool>(&v)) return *b;
    throw EvalError(EvalErrorKind::TypeMismatch, construct,
                    std::string("expected a boolean, got a ") + value_kind_name(v), loc);
  }

  int as_number(const Value& v, const char* construct, SourceLoc loc) {
    if (auto* n = std::get_if<int>(&v)) return *n;
    throw EvalError(EvalErrorKind::TypeMismatch, construct,
                    std::string("expected a number, got a ") + value_kind_name(v), loc);
  }

  TermPtr as_term(const Value& v, const char* construct, SourceLoc loc) {
    if (auto* t = std::get_if<TermPtr>(&v)) return *t;
    throw EvalError(EvalErrorKind::TypeMismatch, construct,
                    std::string("expected a term, got a ") + value_kind_name(v), loc);
  }

  const OccurrenceValue& as_occurrence(const Value& v, const Context& ec, const char* construct,
                                       SourceLoc loc) {
    auto* o = std::get_if<OccurrenceValue>(&v);
    if (!o)
      throw EvalError(EvalErrorKind::TypeMismatch, construct,
                      std::string("expected a term occurrence, got a ") + value_kind_name(v),
                      loc);
    if (o->table != ec.table)
      throw EvalError(EvalErrorKind::OccurrenceCrossedBoundary, construct,
                      "term occurrence " + format_path(o->path) +
                          " belongs to a different evaluation context",
                      loc);
    return *o;
  }

  // ---------------------------------------------------------------------
  // Quantifiers

  std::vector<Value> enumerate_domain(const AssertionPtr& a, Env& env, const Context& ec) {
    std::vector<Value> out;
    if (a->kind == Assertion::Kind::QuantTyped) {
      switch (a->type) {
        case SelfieType::Term:
          for (const auto& t : table_of(ec).all_subterms()) out.emplace_back(t);
          return out;
        case SelfieType::TermOccurrence:
          for (const auto& p : table_of(ec).all_paths())
            out.emplace_back(OccurrenceValue{p, ec.table});
          return out;
        case SelfieType::Number:
          for (int n : table_of(ec).number_domain()) out.emplace_back(n);
          return out;
        case SelfieType::Rule:
          if (ec.depth > 0)
            throw EvalError(EvalErrorKind::ModifierInInnerContext, "quantifier",
                            "rule domains are only available in the goal context", a->loc);
          for (const auto& r : args_.rules) out.emplace_back(RuleValue{r});
          return out;
      }
    }
    if (a->kind == Assertion::Kind::QuantModifier) {
      if (ec.depth > 0)
        throw EvalError(EvalErrorKind::ModifierInInnerContext, "quantifier",
                        std::string(modifier_name(a->modifier)) +
                            " domains are only available in the goal context",
                        a->loc);
      const auto& terms = a->modifier == ModifierKind::InductionTerm ? args_.induction_terms
                                                                     : args_.arbitrary_terms;
      for (const auto& t : terms) out.emplace_back(t);
      return out;
    }
    // QuantOccIn: occurrences of the term bound to domain_var.
    const Value* tv = env.lookup(a->domain_var);
    if (!tv)
      throw EvalError(EvalErrorKind::UnboundVariable, "quantifier", a->domain_var, a->loc);
    TermPtr t = as_term(*tv, "quantifier", a->loc);
    for (const auto& p : table_of(ec).occurrences_of(t))
      out.emplace_back(OccurrenceValue{p, ec.table});
    return out;
  }

  Value eval_quantifier(const AssertionPtr& a, Env& env, const Context& ec) {
    std::vector<Value> domain = enumerate_domain(a, env, ec);
    bool exists = a->quant == QuantKind::Exists;
    for (const auto& v : domain) {
      ++stats.quantifier_bindings_tried;
      env.locals.emplace_back(a->name, v);
      bool ok = as_bool(eval(a->children[0], env, ec), "quantifier body", a->loc);
      env.locals.pop_back();
      if (exists && ok) {
        if (opts_.record_trace) trace.push_back({a->name, v});
        return true;
      }
      if (!exists && !ok) return false;
    }
    return !exists;  // empty/failed domain: EX false, ALL true
  }

  // ---------------------------------------------------------------------
  // Semantic constructs

  Value eval_semantic(const AssertionPtr& a, Env& env, const Context& ec) {
    ++stats.semantic_calls;
    const char* construct =
        a->semantic == SemanticKind::Some ? "in_some_definition" : "in_all_definition";
    Value target = eval(a->children[0], env, ec);
    Value heuristic = eval(a->children[1], env, ec);
    std::vector<Value> vals;
    for (size_t i = 2; i < a->children.size(); ++i) vals.push_back(eval(a->children[i], env, ec));

    // Only terms and numbers may bridge the two levels; occurrences in
    // particular must stay within their own context.
    for (const auto& v : vals) {
      if (std::holds_alternative<OccurrenceValue>(v))
        throw EvalError(EvalErrorKind::OccurrenceCrossedBoundary, construct,
                        "term occurrences cannot be passed through semantic constructs", a->loc);
      if (!std::holds_alternative<TermPtr>(v) && !std::holds_alternative<int>(v))
        throw EvalError(EvalErrorKind::TypeMismatch, construct,
                        std::string("arguments must be terms or numbers, got a ") +
                            value_kind_name(v),
                        a->loc);
    }

    TermPtr t = as_term(target, construct, a->loc);
    if (t->kind != Term::Kind::Constant)
      throw EvalError(EvalErrorKind::TypeMismatch, construct,
                      "target must be a constant, got " + print_term(t), a->loc);
    auto* cl = std::get_if<ClosurePtr>(&heuristic);
    if (!cl)
      throw EvalError(EvalErrorKind::TypeMismatch, construct,
                      std::string("heuristic must be a function, got a ") +
                          value_kind_name(heuristic),
                      a->loc);
    if (ec.depth + 1 > opts_.max_semantic_depth)
      throw EvalError(EvalErrorKind::DepthLimitExceeded, construct,
                      "semantic nesting deeper than " + std::to_string(opts_.max_semantic_depth),
                      a->loc);

    const ConstantInfo* info = ctx_.find(t->name);
    bool some = a->semantic == SemanticKind::Some;
    if (!info) {
      warnings.push_back({"NoDefinition", "constant '" + t->name + "' has no definition; " +
                                              construct + (some ? " is false" : " is true")});
      return some ? false : true;
    }
    for (const auto& clause : info->clauses) {
      ++stats.clauses_examined;
      LookupTable clause_table = LookupTable::build(clause.body);
      Context inner{&clause_table, ec.depth + 1, t->name};
      bool ok;
      try {
        ok = as_bool(apply_closure(*cl, vals, inner, a->loc), construct, a->loc);
      } catch (const EvalError& e) {
        throw EvalError(e.kind, e.construct,
                        e.detail + " (in a defining clause of " + t->name + ")", e.loc);
      }
      if (some && ok) return true;
      if (!some && !ok) return false;
    }
    return some ? false : true;
  }

  // ---------------------------------------------------------------------
  // Atomic assertions

  const NodeInfo& node_info(const OccurrenceValue& o, const Context& ec, const char* construct,
                            SourceLoc loc) {
    const NodeInfo* info = table_of(ec).info_at(o.path);
    if (!info)
      throw EvalError(EvalErrorKind::TypeMismatch, construct,
                      "occurrence path " + format_path(o.path) + " does not resolve", loc);
    return *info;
  }

  TermPtr occ_subterm(const OccurrenceValue& o, const Context& ec) {
    return subterm_at(table_of(ec).root(), o.path);
  }

  static bool path_is_prefix(const Path& prefix, const Path& p) {
    if (prefix.size() > p.size()) return false;
    return std::equal(prefix.begin(), prefix.end(), p.begin());
  }

  // o2 is the head (child 1) of a spine and o1 is its (n+1)-th child.
  bool nth_argument_of(const OccurrenceValue& o1, int n, const OccurrenceValue& o2,
                       const Context& ec, const char* construct, SourceLoc loc) {
    if (n < 1) return false;
    if (o2.path.empty() || o2.path.back() != 1) return false;
    Path parent(o2.path.begin(), o2.path.end() - 1);
    const NodeInfo* pinfo = table_of(ec).info_at(parent);
    if (!pinfo || pinfo->kind != NodeKind::Application) return false;
    (void)node_info(o1, ec, construct, loc);
    if (o1.path.size() != parent.size() + 1) return false;
    if (!path_is_prefix(parent, o1.path)) return false;
    return o1.path.back() == n + 1;
  }

  Value eval_atomic(const AssertionPtr& a, const std::vector<Value>& vals, const Context& ec) {
    const auto& sig = atomic_signature(a->atomic);
    const char* construct = sig.name;
    SourceLoc loc = a->loc;
    if (vals.size() != sig.args.size())
      throw EvalError(EvalErrorKind::TypeMismatch, construct,
                      "expected " + std::to_string(sig.args.size()) + " arguments", loc);

    auto occ = [&](size_t i) -> const OccurrenceValue& {
      return as_occurrence(vals[i], ec, construct, loc);
    };
    auto num = [&](size_t i) { return as_number(vals[i], construct, loc); };
    auto term = [&](size_t i) { return as_term(vals[i], construct, loc); };

    auto require_outer = [&] {
      if (ec.depth > 0)
        throw EvalError(EvalErrorKind::ModifierInInnerContext, construct,
                        "only available in the goal context", loc);
    };

    switch (a->atomic) {
      case AtomicName::AreSameTerm:
      case AtomicName::AreOfSameTerm:
        return equal_terms(occ_subterm(occ(0), ec), occ_subterm(occ(1), ec));
      case AtomicName::AreSameTerms:
        return equal_terms(term(0), term(1));
      case AtomicName::AreSameNumber:
        return num(0) == num(1);
      case AtomicName::TermOccurrenceIsOfTerm:
        return equal_terms(occ_subterm(occ(0), ec), term(1));
      case AtomicName::IsInTermOccurrence:
        // o1 sits at or below o2.
        return path_is_prefix(occ(1).path, occ(0).path);
      case AtomicName::IsAtomic: {
        NodeKind k = node_info(occ(0), ec, construct, loc).kind;
        return k == NodeKind::Constant || k == NodeKind::Free || k == NodeKind::Bound;
      }
      case AtomicName::IsConstant:
        return node_info(occ(0), ec, construct, loc).kind == NodeKind::Constant;
      case AtomicName::IsFreeVariable:
        return node_info(occ(0), ec, construct, loc).kind == NodeKind::Free;
      case AtomicName::IsLambda:
        return node_info(occ(0), ec, construct, loc).kind == NodeKind::Lambda;
      case AtomicName::IsApplication:
        return node_info(occ(0), ec, construct, loc).kind == NodeKind::Application;
      case AtomicName::TermIsFree:
        return term(0)->kind == Term::Kind::Free;
      case AtomicName::IsNthArgumentOf:
        return nth_argument_of(occ(0), num(1), occ(2), ec, construct, loc);
      case AtomicName::IsAnArgumentOf: {
        const OccurrenceValue& o1 = occ(0);
        const OccurrenceValue& o2 = occ(1);
        if (o2.path.empty() || o2.path.back() != 1) return false;
        Path parent(o2.path.begin(), o2.path.end() - 1);
        const NodeInfo* pinfo = table_of(ec).info_at(parent);
        if (!pinfo || pinfo->kind != NodeKind::Application) return false;
        if (o1.path.size() != parent.size() + 1) return false;
        if (!path_is_prefix(parent, o1.path)) return false;
        return o1.path.back() >= 2;
      }
      case AtomicName::IsOrBelowNthArgumentOf: {
        const OccurrenceValue& o1 = occ(0);
        int n = num(1);
        const OccurrenceValue& o2 = occ(2);
        if (n < 1) return false;
        if (o2.path.empty() || o2.path.back() != 1) return false;
        Path arg_path(o2.path.begin(), o2.path.end() - 1);
        arg_path.push_back(n + 1);
        if (!table_of(ec).info_at(arg_path)) return false;
        const NodeInfo* pinfo =
            table_of(ec).info_at(Path(o2.path.begin(), o2.path.end() - 1));
        if (!pinfo || pinfo->kind != NodeKind::Application) return false;
        return path_is_prefix(arg_path, o1.path);
      }
      case AtomicName::IsNplus1thChildOf: {
        const OccurrenceValue& o1 = occ(0);
        int n = num(1);
        const OccurrenceValue& o2 = occ(2);
        (void)node_info(o2, ec, construct, loc);
        if (o1.path.size() != o2.path.size() + 1) return false;
        if (!path_is_prefix(o2.path, o1.path)) return false;
        return o1.path.back() == n + 1;
      }
      case AtomicName::IsRootInALocation:
        return occ(0).path.empty();
      case AtomicName::IsLhsOfRoot: {
        const OccurrenceValue& olhs = occ(0);
        const OccurrenceValue& oroot = occ(1);
        if (!oroot.path.empty()) return false;
        const NodeInfo& root_info = node_info(oroot, ec, construct, loc);
        if (root_info.kind != NodeKind::Application) return false;
        TermPtr head = subterm_at(table_of(ec).root(), Path{1});
        if (head->kind != Term::Kind::Constant || head->name != ProofContext::kEquality)
          return false;
        return olhs.path == Path{2};
      }
      case AtomicName::IsAtDeepest:
        return static_cast<int>(occ(0).path.size()) == table_of(ec).max_depth();
      case AtomicName::IsNthInductionTerm:
      case AtomicName::IsNthArbitraryTerm: {
        require_outer();
        TermPtr t = term(0);
        int n = num(1);
        const auto& list = a->atomic == AtomicName::IsNthInductionTerm ? args_.induction_terms
                                                                       : args_.arbitrary_terms;
        if (n < 1 || static_cast<size_t>(n) > list.size()) return false;
        return equal_terms(list[static_cast<size_t>(n) - 1], t);
      }
      case AtomicName::IsRuleOf: {
        auto* r = std::get_if<RuleValue>(&vals[0]);
        if (!r)
          throw EvalError(EvalErrorKind::TypeMismatch, construct,
                          std::string("expected a rule, got a ") + value_kind_name(vals[0]),
                          loc);
        TermPtr t = occ_subterm(occ(1), ec);
        if (t->kind != Term::Kind::Constant) return false;
        return r->name == t->name + ".induct";
      }
      case AtomicName::IsDefinedWithCommand: {
        TermPtr t = term(0);
        auto* cmd = std::get_if<DefinitionCommand>(&vals[1]);
        if (!cmd)
          throw EvalError(EvalErrorKind::TypeMismatch, construct,
                          std::string("expected a command, got a ") + value_kind_name(vals[1]),
                          loc);
        if (t->kind != Term::Kind::Constant) return false;
        const ConstantInfo* info = ctx_.find(t->name);
        return info && info->command == *cmd;
      }
      case AtomicName::IsDefinedWithRecursionKeyword: {
        TermPtr t = term(0);
        if (t->kind != Term::Kind::Constant) return false;
        const ConstantInfo* info = ctx_.find(t->name);
        return info && is_recursion_command(info->command);
      }
    }
    throw EvalError(EvalErrorKind::TypeMismatch, construct, "unreachable atomic", loc);
  }
};

}  // namespace

EvalResult evaluate_assertion(const AssertionPtr& a, const TermPtr& goal,
                              const InductArguments& args, const ProofContext& ctx,
                              const EvalOptions& opts, const Program* defs) {
  Evaluator ev(defs, ctx, args, opts);
  LookupTable goal_table = LookupTable::build(goal);
  ev.goal_table = &goal_table;
  Env env;
  Evaluator::Context outer{&goal_table, 0, ""};
  Value v = ev.eval(a, env, outer);
  EvalResult res;
  if (auto* b = std::get_if<bool>(&v)) {
    res.verdict = *b;
  } else {
    throw EvalError(EvalErrorKind::NotABoolean, "assertion",
                    std::string("evaluates to a ") + value_kind_name(v) +
                        "; a lambda definition must be applied",
                    a->loc);
  }
  res.warnings = std::move(ev.warnings);
  res.stats = ev.stats;
  res.trace = std::move(ev.trace);
  return res;
}

EvalResult evaluate_program(const Program& defs, const std::string& name, const TermPtr& goal,
                            const InductArguments& args, const ProofContext& ctx,
                            const EvalOptions& opts) {
  const AssertionPtr* a = defs.find(name);
  if (!a) throw Error("unknown heuristic '" + name + "'");
  return evaluate_assertion(*a, goal, args, ctx, opts, &defs);
}

EvalResult evaluate_closure_on_clause(const Program& defs, const std::string& lambda_name,
                                      const std::vector<Value>& args, const Clause& clause,
                                      const ProofContext& ctx, const EvalOptions& opts) {
  const AssertionPtr* a = defs.find(lambda_name);
  if (!a) throw Error("unknown heuristic '" + lambda_name + "'");
  InductArguments no_args;
  Evaluator ev(&defs, ctx, no_args, opts);
  LookupTable clause_table = LookupTable::build(clause.body);
  // No goal table: the clause context is the whole evaluation.
  Env env;
  Evaluator::Context inner{&clause_table, 1, ""};
  Value fun = ev.eval(*a, env, inner);
  auto* cl = std::get_if<ClosurePtr>(&fun);
  if (!cl)
    throw EvalError(EvalErrorKind::TypeMismatch, "application",
                    std::string("definition '") + lambda_name + "' is not a function",
                    (*a)->loc);
  Value v = ev.apply_closure(*cl, args, inner, (*a)->loc);
  EvalResult res;
  if (auto* b = std::get_if<bool>(&v)) {
    res.verdict = *b;
  } else {
    throw EvalError(EvalErrorKind::NotABoolean, "application",
                    std::string("evaluates to a ") + value_kind_name(v), (*a)->loc);
  }
  res.warnings = std::move(ev.warnings);
  res.stats = ev.stats;
  res.trace = std::move(ev.trace);
  return res;
}

}  // namespace selfie
