#include "reference_interpreter.hpp"

#include <algorithm>
#include <memory>
#include <variant>

namespace selfie::test {

namespace {

// Occurrences are tagged with the root they belong to, by identity.
struct ROcc {
  Path path;
  const Term* root;
};

struct RRule {
  std::string name;
};

struct RClosure;
using RClosurePtr = std::shared_ptr<const RClosure>;

using RValue = std::variant<bool, int, TermPtr, ROcc, RRule, DefinitionCommand, RClosurePtr>;

struct REnv {
  std::vector<std::pair<std::string, RValue>> locals;
  const RValue* lookup(const std::string& n) const {
    for (size_t i = locals.size(); i-- > 0;) {
      if (locals[i].first == n) return &locals[i].second;
    }
    return nullptr;
  }
};

struct RClosure {
  std::vector<std::string> params;
  AssertionPtr body;
  REnv captured;
};

[[noreturn]] void bail(const std::string& msg) { throw Error("reference interpreter: " + msg); }

// --- naive tree helpers -----------------------------------------------------

std::vector<TermPtr> naive_children(const TermPtr& t) {
  if (t->kind == Term::Kind::Lambda) return {t->body};
  if (t->kind != Term::Kind::App) return {};
  std::vector<TermPtr> rev_args;
  TermPtr cur = t;
  while (cur->kind == Term::Kind::App) {
    rev_args.push_back(cur->arg);
    cur = cur->fun;
  }
  std::vector<TermPtr> out{cur};
  for (size_t i = rev_args.size(); i-- > 0;) out.push_back(rev_args[i]);
  return out;
}

TermPtr naive_at(const TermPtr& root, const Path& p) {
  TermPtr cur = root;
  for (int step : p) {
    auto children = naive_children(cur);
    if (step < 1 || static_cast<size_t>(step) > children.size()) return nullptr;
    cur = children[static_cast<size_t>(step) - 1];
  }
  return cur;
}

void naive_paths_rec(const TermPtr& t, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  auto children = naive_children(t);
  for (size_t i = 0; i < children.size(); ++i) {
    cur.push_back(static_cast<int>(i) + 1);
    naive_paths_rec(children[i], cur, out);
    cur.pop_back();
  }
}

std::vector<Path> naive_paths(const TermPtr& root) {
  std::vector<Path> out;
  Path cur;
  naive_paths_rec(root, cur, out);
  return out;
}

void naive_subterms_rec(const TermPtr& t, std::vector<TermPtr>& out) {
  bool seen = std::any_of(out.begin(), out.end(),
                          [&](const TermPtr& u) { return equal_terms(u, t); });
  if (!seen) out.push_back(t);
  for (const auto& c : naive_children(t)) naive_subterms_rec(c, out);
}

std::vector<TermPtr> naive_subterms(const TermPtr& root) {
  std::vector<TermPtr> out;
  naive_subterms_rec(root, out);
  return out;
}

std::vector<Path> naive_occurrences(const TermPtr& root, const TermPtr& needle) {
  std::vector<Path> out;
  for (const auto& p : naive_paths(root)) {
    if (equal_terms(naive_at(root, p), needle)) out.push_back(p);
  }
  return out;
}

int naive_max_depth(const TermPtr& root) {
  int best = 0;
  for (const auto& p : naive_paths(root)) best = std::max(best, static_cast<int>(p.size()));
  return best;
}

int naive_max_children(const TermPtr& root) {
  int best = 0;
  for (const auto& p : naive_paths(root))
    best = std::max(best, static_cast<int>(naive_children(naive_at(root, p)).size()));
  return best;
}

bool is_prefix(const Path& prefix, const Path& p) {
  if (prefix.size() > p.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), p.begin());
}

// --- evaluator ---------------------------------------------------------------

class RefEvaluator {
 public:
  RefEvaluator(const Program* defs, const ProofContext& ctx, const InductArguments& args,
               const RefOptions& opts)
      : defs_(defs), ctx_(ctx), args_(args), opts_(opts) {}

  struct Ctx {
    TermPtr root;
    int depth;
  };

  RValue eval(const AssertionPtr& a, REnv& env, const Ctx& ec) {
    switch (a->kind) {
      case Assertion::Kind::Var: {
        if (const RValue* v = env.lookup(a->name)) return *v;
        if (defs_) {
          if (const AssertionPtr* def = defs_->find(a->name)) {
            REnv fresh;
            return eval(*def, fresh, ec);
          }
        }
        bail("unbound variable " + a->name);
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
        return !want_bool(eval(a->children[0], env, ec));
      case Assertion::Kind::And: {
        if (!want_bool(eval(a->children[0], env, ec))) return false;
        return want_bool(eval(a->children[1], env, ec));
      }
      case Assertion::Kind::Or: {
        if (want_bool(eval(a->children[0], env, ec))) return true;
        return want_bool(eval(a->children[1], env, ec));
      }
      case Assertion::Kind::Implies: {
        if (!want_bool(eval(a->children[0], env, ec))) return true;
        return want_bool(eval(a->children[1], env, ec));
      }
      case Assertion::Kind::QuantTyped:
      case Assertion::Kind::QuantModifier:
      case Assertion::Kind::QuantOccIn: {
        std::vector<RValue> domain = enumerate(a, env, ec);
        bool exists = a->quant == QuantKind::Exists;
        for (const auto& v : domain) {
          env.locals.emplace_back(a->name, v);
          bool ok = want_bool(eval(a->children[0], env, ec));
          env.locals.pop_back();
          if (exists && ok) return true;
          if (!exists && !ok) return false;
        }
        return !exists;
      }
      case Assertion::Kind::Lambda: {
        auto c = std::make_shared<RClosure>();
        c->params = a->params;
        c->body = a->children[0];
        c->captured = env;
        return RClosurePtr(std::move(c));
      }
      case Assertion::Kind::Apply: {
        RValue fun = eval(a->children[0], env, ec);
        auto* cl = std::get_if<RClosurePtr>(&fun);
        if (!cl) bail("applied a non-function");
        std::vector<RValue> vals;
        for (size_t i = 1; i < a->children.size(); ++i)
          vals.push_back(eval(a->children[i], env, ec));
        return apply(*cl, vals, ec);
      }
      case Assertion::Kind::Atomic: {
        std::vector<RValue> vals;
        for (const auto& c : a->children) vals.push_back(eval(c, env, ec));
        return atomic(a, vals, ec);
      }
      case Assertion::Kind::Semantic:
        return semantic(a, env, ec);
      case Assertion::Kind::Let: {
        RValue bound = eval(a->children[0], env, ec);
        env.locals.emplace_back(a->name, std::move(bound));
        RValue out = eval(a->children[1], env, ec);
        env.locals.pop_back();
        return out;
      }
    }
    bail("unreachable");
  }

  RValue apply(const RClosurePtr& cl, const std::vector<RValue>& vals, const Ctx& ec) {
    if (vals.size() != cl->params.size()) bail("arity mismatch");
    REnv env = cl->captured;
    for (size_t i = 0; i < vals.size(); ++i) env.locals.emplace_back(cl->params[i], vals[i]);
    return eval(cl->body, env, ec);
  }

 private:
  const Program* defs_;
  const ProofContext& ctx_;
  const InductArguments& args_;
  RefOptions opts_;

  static bool want_bool(const RValue& v) {
    auto* b = std::get_if<bool>(&v);
    if (!b) bail("expected boolean");
    return *b;
  }
  static int want_num(const RValue& v) {
    auto* n = std::get_if<int>(&v);
    if (!n) bail("expected number");
    return *n;
  }
  static TermPtr want_term(const RValue& v) {
    auto* t = std::get_if<TermPtr>(&v);
    if (!t) bail("expected term");
    return *t;
  }
  ROcc want_occ(const RValue& v, const Ctx& ec) {
    auto* o = std::get_if<ROcc>(&v);
    if (!o) bail("expected occurrence");
    if (o->root != ec.root.get()) bail("occurrence crossed an evaluation boundary");
    return *o;
  }

  std::vector<RValue> enumerate(const AssertionPtr& a, REnv& env, const Ctx& ec) {
    std::vector<RValue> out;
    if (a->kind == Assertion::Kind::QuantTyped) {
      switch (a->type) {
        case SelfieType::Term:
          for (const auto& t : naive_subterms(ec.root)) out.emplace_back(t);
          return out;
        case SelfieType::TermOccurrence:
          for (const auto& p : naive_paths(ec.root)) out.emplace_back(ROcc{p, ec.root.get()});
          return out;
        case SelfieType::Number: {
          int hi = std::max(naive_max_children(ec.root), naive_max_depth(ec.root));
          for (int n = 0; n <= hi; ++n) out.emplace_back(n);
          return out;
        }
        case SelfieType::Rule:
          if (ec.depth > 0) bail("rule domain in inner context");
          for (const auto& r : args_.rules) out.emplace_back(RRule{r});
          return out;
      }
    }
    if (a->kind == Assertion::Kind::QuantModifier) {
      if (ec.depth > 0) bail("modifier domain in inner context");
      const auto& list = a->modifier == ModifierKind::InductionTerm ? args_.induction_terms
                                                                    : args_.arbitrary_terms;
      for (const auto& t : list) out.emplace_back(t);
      return out;
    }
    const RValue* tv = env.lookup(a->domain_var);
    if (!tv) bail("unbound domain variable " + a->domain_var);
    TermPtr t = want_term(*tv);
    for (const auto& p : naive_occurrences(ec.root, t)) out.emplace_back(ROcc{p, ec.root.get()});
    return out;
  }

  RValue semantic(const AssertionPtr& a, REnv& env, const Ctx& ec) {
    RValue target = eval(a->children[0], env, ec);
    RValue heuristic = eval(a->children[1], env, ec);
    std::vector<RValue> vals;
    for (size_t i = 2; i < a->children.size(); ++i) vals.push_back(eval(a->children[i], env, ec));
    for (const auto& v : vals) {
      if (std::holds_alternative<ROcc>(v)) bail("occurrence passed through semantic construct");
      if (!std::holds_alternative<TermPtr>(v) && !std::holds_alternative<int>(v))
        bail("semantic argument must be a term or number");
    }
    TermPtr t = want_term(target);
    if (t->kind != Term::Kind::Constant) bail("semantic target must be a constant");
    auto* cl = std::get_if<RClosurePtr>(&heuristic);
    if (!cl) bail("semantic heuristic must be a function");
    if (ec.depth + 1 > opts_.max_semantic_depth) bail("semantic depth limit exceeded");
    const ConstantInfo* info = ctx_.find(t->name);
    bool some = a->semantic == SemanticKind::Some;
    if (!info) return some ? false : true;
    for (const auto& clause : info->clauses) {
      Ctx inner{clause.body, ec.depth + 1};
      bool ok = want_bool(apply(*cl, vals, inner));
      if (some && ok) return true;
      if (!some && !ok) return false;
    }
    return some ? false : true;
  }

  RValue atomic(const AssertionPtr& a, const std::vector<RValue>& vals, const Ctx& ec) {
    auto occ = [&](size_t i) { return want_occ(vals[i], ec); };
    auto num = [&](size_t i) { return want_num(vals[i]); };
    auto term = [&](size_t i) { return want_term(vals[i]); };
    auto sub = [&](const ROcc& o) {
      TermPtr t = naive_at(ec.root, o.path);
      if (!t) bail("occurrence path does not resolve");
      return t;
    };
    auto require_outer = [&] {
      if (ec.depth > 0) bail("modifier atomic in inner context");
    };

    switch (a->atomic) {
      case AtomicName::AreSameTerm:
      case AtomicName::AreOfSameTerm:
        return equal_terms(sub(occ(0)), sub(occ(1)));
      case AtomicName::AreSameTerms:
        return equal_terms(term(0), term(1));
      case AtomicName::AreSameNumber:
        return num(0) == num(1);
      case AtomicName::TermOccurrenceIsOfTerm:
        return equal_terms(sub(occ(0)), term(1));
      case AtomicName::IsInTermOccurrence:
        return is_prefix(occ(1).path, occ(0).path);
      case AtomicName::IsAtomic: {
        auto k = sub(occ(0))->kind;
        return k == Term::Kind::Constant || k == Term::Kind::Free || k == Term::Kind::Bound;
      }
      case AtomicName::IsConstant:
        return sub(occ(0))->kind == Term::Kind::Constant;
      case AtomicName::IsFreeVariable:
        return sub(occ(0))->kind == Term::Kind::Free;
      case AtomicName::IsLambda:
        return sub(occ(0))->kind == Term::Kind::Lambda;
      case AtomicName::IsApplication:
        return sub(occ(0))->kind == Term::Kind::App;
      case AtomicName::TermIsFree:
        return term(0)->kind == Term::Kind::Free;
      case AtomicName::IsNthArgumentOf: {
        ROcc o1 = occ(0);
        int n = num(1);
        ROcc o2 = occ(2);
        if (n < 1) return false;
        if (o2.path.empty() || o2.path.back() != 1) return false;
        Path parent(o2.path.begin(), o2.path.end() - 1);
        TermPtr pt = naive_at(ec.root, parent);
        if (!pt || pt->kind != Term::Kind::App) return false;
        if (o1.path.size() != parent.size() + 1) return false;
        if (!is_prefix(parent, o1.path)) return false;
        return o1.path.back() == n + 1;
      }
      case AtomicName::IsAnArgumentOf: {
        ROcc o1 = occ(0);
        ROcc o2 = occ(1);
        if (o2.path.empty() || o2.path.back() != 1) return false;
        Path parent(o2.path.begin(), o2.path.end() - 1);
        TermPtr pt = naive_at(ec.root, parent);
        if (!pt || pt->kind != Term::Kind::App) return false;
        if (o1.path.size() != parent.size() + 1) return false;
        if (!is_prefix(parent, o1.path)) return false;
        return o1.path.back() >= 2;
      }
      case AtomicName::IsOrBelowNthArgumentOf: {
        ROcc o1 = occ(0);
        int n = num(1);
        ROcc o2 = occ(2);
        if (n < 1) return false;
        if (o2.path.empty() || o2.path.back() != 1) return false;
        Path parent(o2.path.begin(), o2.path.end() - 1);
        TermPtr pt = naive_at(ec.root, parent);
        if (!pt || pt->kind != Term::Kind::App) return false;
        Path arg_path = parent;
        arg_path.push_back(n + 1);
        if (!naive_at(ec.root, arg_path)) return false;
        return is_prefix(arg_path, o1.path);
      }
      case AtomicName::IsNplus1thChildOf: {
        ROcc o1 = occ(0);
        int n = num(1);
        ROcc o2 = occ(2);
        if (o1.path.size() != o2.path.size() + 1) return false;
        if (!is_prefix(o2.path, o1.path)) return false;
        return o1.path.back() == n + 1;
      }
      case AtomicName::IsRootInALocation:
        return occ(0).path.empty();
      case AtomicName::IsLhsOfRoot: {
        ROcc olhs = occ(0);
        ROcc oroot = occ(1);
        if (!oroot.path.empty()) return false;
        if (ec.root->kind != Term::Kind::App) return false;
        TermPtr head = naive_at(ec.root, Path{1});
        if (!head || head->kind != Term::Kind::Constant ||
            head->name != ProofContext::kEquality)
          return false;
        return olhs.path == Path{2};
      }
      case AtomicName::IsAtDeepest:
        return static_cast<int>(occ(0).path.size()) == naive_max_depth(ec.root);
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
        auto* r = std::get_if<RRule>(&vals[0]);
        if (!r) bail("expected rule");
        TermPtr t = sub(occ(1));
        if (t->kind != Term::Kind::Constant) return false;
        return r->name == t->name + ".induct";
      }
      case AtomicName::IsDefinedWithCommand: {
        TermPtr t = term(0);
        auto* cmd = std::get_if<DefinitionCommand>(&vals[1]);
        if (!cmd) bail("expected command");
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
    bail("unreachable atomic");
  }
};

}  // namespace

bool ref_evaluate_assertion(const AssertionPtr& a, const TermPtr& goal,
                            const InductArguments& args, const ProofContext& ctx,
                            const RefOptions& opts, const Program* defs) {
  RefEvaluator ev(defs, ctx, args, opts);
  REnv env;
  RefEvaluator::Ctx outer{goal, 0};
  RValue v = ev.eval(a, env, outer);
  auto* b = std::get_if<bool>(&v);
  if (!b) throw Error("reference interpreter: top-level value is not a boolean");
  return *b;
}

bool ref_evaluate_program(const Program& defs, const std::string& name, const TermPtr& goal,
                          const InductArguments& args, const ProofContext& ctx,
                          const RefOptions& opts) {
  const AssertionPtr* a = defs.find(name);
  if (!a) throw Error("reference interpreter: unknown definition " + name);
  return ref_evaluate_assertion(*a, goal, args, ctx, opts, &defs);
}

}  // namespace selfie::test
