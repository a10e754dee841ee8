#include "term.hpp"

#include <algorithm>
#include <sstream>

namespace selfie {

TermPtr mk_const(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Constant;
  t->name = std::move(name);
  return t;
}

TermPtr mk_free(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Free;
  t->name = std::move(name);
  return t;
}

TermPtr mk_bound(int index) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Bound;
  t->index = index;
  return t;
}

TermPtr mk_lambda(TermPtr body, std::string binder_hint) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Lambda;
  t->body = std::move(body);
  t->binder_hint = std::move(binder_hint);
  return t;
}

TermPtr mk_app(TermPtr fun, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::App;
  t->fun = std::move(fun);
  t->arg = std::move(arg);
  return t;
}

TermPtr mk_spine(TermPtr head, const std::vector<TermPtr>& args) {
  TermPtr t = std::move(head);
  for (const auto& a : args) t = mk_app(t, a);
  return t;
}

bool equal_terms(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Constant:
    case Term::Kind::Free:
      return a->name == b->name;
    case Term::Kind::Bound:
      return a->index == b->index;
    case Term::Kind::Lambda:
      return equal_terms(a->body, b->body);
    case Term::Kind::App:
      return equal_terms(a->fun, b->fun) && equal_terms(a->arg, b->arg);
  }
  return false;
}

static void term_key_rec(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case Term::Kind::Constant:
      out += "C:";
      out += t->name;
      break;
    case Term::Kind::Free:
      out += "F:";
      out += t->name;
      break;
    case Term::Kind::Bound:
      out += "B:";
      out += std::to_string(t->index);
      break;
    case Term::Kind::Lambda:
      out += "L(";
      term_key_rec(t->body, out);
      out += ")";
      break;
    case Term::Kind::App:
      out += "A(";
      term_key_rec(t->fun, out);
      out += ",";
      term_key_rec(t->arg, out);
      out += ")";
      break;
  }
}

std::string term_key(const TermPtr& t) {
  std::string out;
  term_key_rec(t, out);
  return out;
}

std::string format_path(const Path& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  out += "]";
  return out;
}

std::vector<TermPtr> flatten_spine(const TermPtr& t) {
  std::vector<TermPtr> parts;
  TermPtr cur = t;
  while (cur->kind == Term::Kind::App) {
    parts.push_back(cur->arg);
    cur = cur->fun;
  }
  parts.push_back(cur);
  std::reverse(parts.begin(), parts.end());
  return parts;
}

std::vector<TermPtr> flattened_child_terms(const TermPtr& node) {
  switch (node->kind) {
    case Term::Kind::App:
      return flatten_spine(node);
    case Term::Kind::Lambda:
      return {node->body};
    default:
      return {};
  }
}

TermPtr subterm_at(const TermPtr& root, const Path& path) {
  TermPtr cur = root;
  for (size_t i = 0; i < path.size(); ++i) {
    auto children = flattened_child_terms(cur);
    int step = path[i];
    if (step < 1 || static_cast<size_t>(step) > children.size()) {
      Path prefix(path.begin(), path.begin() + static_cast<long>(i) + 1);
      throw Error("path " + format_path(prefix) + " does not resolve in term");
    }
    cur = children[static_cast<size_t>(step) - 1];
  }
  return cur;
}

std::vector<Path> flattened_children(const TermPtr& root, const Path& path) {
  TermPtr node = subterm_at(root, path);
  auto children = flattened_child_terms(node);
  std::vector<Path> out;
  out.reserve(children.size());
  for (size_t i = 0; i < children.size(); ++i) {
    Path p = path;
    p.push_back(static_cast<int>(i) + 1);
    out.push_back(std::move(p));
  }
  return out;
}

static bool well_scoped_rec(const TermPtr& t, int depth) {
  switch (t->kind) {
    case Term::Kind::Bound:
      return t->index >= 0 && t->index < depth;
    case Term::Kind::Lambda:
      return well_scoped_rec(t->body, depth + 1);
    case Term::Kind::App:
      return well_scoped_rec(t->fun, depth) && well_scoped_rec(t->arg, depth);
    default:
      return true;
  }
}

bool well_scoped(const TermPtr& t) { return well_scoped_rec(t, 0); }

void collect_names(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Constant:
    case Term::Kind::Free:
      out.push_back(t->name);
      break;
    case Term::Kind::Bound:
      break;
    case Term::Kind::Lambda:
      if (!t->binder_hint.empty()) out.push_back(t->binder_hint);
      collect_names(t->body, out);
      break;
    case Term::Kind::App:
      collect_names(t->fun, out);
      collect_names(t->arg, out);
      break;
  }
}

namespace {

bool is_operator_name(const std::string& n) { return n == "=" || n == "@" || n == "#"; }

// Precedence levels of the surface grammar. Higher binds tighter.
constexpr int kPrecEq = 0;
constexpr int kPrecAppend = 1;
constexpr int kPrecCons = 2;
constexpr int kPrecApply = 3;
constexpr int kPrecAtom = 4;

struct TermPrinter {
  std::vector<std::string> avoid;
  std::vector<std::string> binders;  // innermost last
  int fresh_counter = 0;

  bool name_taken(const std::string& n) const {
    if (is_operator_name(n) || n == "nil") return true;
    if (std::find(avoid.begin(), avoid.end(), n) != avoid.end()) return true;
    return std::find(binders.begin(), binders.end(), n) != binders.end();
  }

  std::string pick_binder_name(const std::string& hint) {
    if (!hint.empty() && !name_taken(hint)) return hint;
    std::string n;
    do {
      n = "v" + std::to_string(fresh_counter++);
    } while (name_taken(n));
    return n;
  }

  // True when the right-nested cons chain terminates in nil, so the
  // whole chain can print as a list literal.
  bool is_list_literal(const TermPtr& t, std::vector<TermPtr>& elems) const {
    TermPtr cur = t;
    while (true) {
      if (cur->kind == Term::Kind::Constant && cur->name == "nil") return true;
      if (cur->kind != Term::Kind::App) return false;
      auto spine = flatten_spine(cur);
      if (spine.size() != 3 || spine[0]->kind != Term::Kind::Constant || spine[0]->name != "#")
        return false;
      elems.push_back(spine[1]);
      cur = spine[2];
    }
  }

  std::string print(const TermPtr& t, int prec) {
    switch (t->kind) {
      case Term::Kind::Constant:
        if (t->name == "nil") return "[]";
        if (is_operator_name(t->name)) return "(" + t->name + ")";
        return t->name;
      case Term::Kind::Free:
        return t->name;
      case Term::Kind::Bound: {
        size_t depth = binders.size();
        if (t->index < 0 || static_cast<size_t>(t->index) >= depth)
          throw Error("cannot print term: unbound de Bruijn index " + std::to_string(t->index));
        return binders[depth - 1 - static_cast<size_t>(t->index)];
      }
      case Term::Kind::Lambda: {
        std::string n = pick_binder_name(t->binder_hint);
        binders.push_back(n);
        std::string body = print(t->body, kPrecEq);
        binders.pop_back();
        std::string out = "%" + n + ". " + body;
        // A lambda in any operand position needs parentheses.
        if (prec > kPrecEq) return "(" + out + ")";
        return out;
      }
      case Term::Kind::App: {
        std::vector<TermPtr> elems;
        if (is_list_literal(t, elems)) {
          std::string out = "[";
          for (size_t i = 0; i < elems.size(); ++i) {
            if (i) out += ", ";
            out += print(elems[i], kPrecEq);
          }
          return out + "]";
        }
        auto spine = flatten_spine(t);
        const TermPtr& head = spine[0];
        if (head->kind == Term::Kind::Constant && spine.size() == 3) {
          if (head->name == "=") {
            std::string out =
                print(spine[1], kPrecAppend) + " = " + print(spine[2], kPrecAppend);
            return prec > kPrecEq ? "(" + out + ")" : out;
          }
          if (head->name == "@") {
            std::string out =
                print(spine[1], kPrecCons) + " @ " + print(spine[2], kPrecAppend);
            return prec > kPrecAppend ? "(" + out + ")" : out;
          }
          if (head->name == "#") {
            std::string out =
                print(spine[1], kPrecApply) + " # " + print(spine[2], kPrecCons);
            return prec > kPrecCons ? "(" + out + ")" : out;
          }
        }
        std::string out = print(head, kPrecAtom);
        for (size_t i = 1; i < spine.size(); ++i) out += " " + print(spine[i], kPrecAtom);
        return prec > kPrecApply ? "(" + out + ")" : out;
      }
    }
    throw Error("unreachable term kind");
  }
};

}  // namespace

namespace {

// Free and constant names only; binder hints may be reused as long as
// they cannot capture one of these.
void collect_rigid_names(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Constant:
    case Term::Kind::Free:
      out.push_back(t->name);
      return;
    case Term::Kind::Lambda:
      collect_rigid_names(t->body, out);
      return;
    case Term::Kind::App:
      collect_rigid_names(t->fun, out);
      collect_rigid_names(t->arg, out);
      return;
    default:
      return;
  }
}

}  // namespace

std::string print_term(const TermPtr& t, const std::vector<std::string>& avoid) {
  TermPrinter p;
  p.avoid = avoid;
  collect_rigid_names(t, p.avoid);
  return p.print(t, kPrecEq);
}

}  // namespace selfie
