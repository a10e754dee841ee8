#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace selfie {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse/load failure with a source position (1-based; 0 = unknown).
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Untyped lambda term: constants, free variables, de Bruijn bound
/// variables, lambda abstraction and binary application.
struct Term {
  enum class Kind { Constant, Free, Bound, Lambda, App };

  Kind kind;
  std::string name;  // Constant / Free
  int index = 0;     // Bound (de Bruijn, innermost binder = 0)
  TermPtr fun;       // App
  TermPtr arg;       // App
  TermPtr body;      // Lambda
  // Display hint for the binder of a Lambda. Not part of the term's
  // identity; equal_terms ignores it.
  std::string binder_hint;
};

TermPtr mk_const(std::string name);
TermPtr mk_free(std::string name);
TermPtr mk_bound(int index);
TermPtr mk_lambda(TermPtr body, std::string binder_hint = "");
TermPtr mk_app(TermPtr fun, TermPtr arg);
// f a1 ... ak as left-nested applications.
TermPtr mk_spine(TermPtr head, const std::vector<TermPtr>& args);

/// Structural equality. Binders use de Bruijn indices, so no alpha
/// handling is needed; binder hints are ignored.
bool equal_terms(const TermPtr& a, const TermPtr& b);

/// Canonical serialization used as a map key for structural identity.
std::string term_key(const TermPtr& t);

// A position inside a root term, in flattened-application coordinates:
// for a spine `f a1 ... ak`, child 1 is the head `f` and child i+1 is
// argument `ai`; a Lambda has its body as child 1; atoms have no
// children. The empty path is the root.
using Path = std::vector<int>;

std::string format_path(const Path& p);  // "[2,3]", root prints "[]"

/// Children of the node at `path`, viewed as one flattened node per
/// application spine. Throws if the path does not resolve.
std::vector<TermPtr> flattened_child_terms(const TermPtr& node);
std::vector<Path> flattened_children(const TermPtr& root, const Path& path);

/// Subterm at a flattened-coordinate path. Throws if the path does not
/// resolve in `root`.
TermPtr subterm_at(const TermPtr& root, const Path& path);

/// Decompose nested applications into [head, a1, ..., ak] where head is
/// not itself an application. Non-App terms yield a singleton.
std::vector<TermPtr> flatten_spine(const TermPtr& t);

/// True if the number of enclosing lambdas bounds every de Bruijn index.
bool well_scoped(const TermPtr& t);

/// Render a term in the surface syntax. The result reparses to a
/// structurally equal term; `avoid` lists names (e.g. constants of the
/// enclosing theory) that generated binder names must not collide with.
std::string print_term(const TermPtr& t, const std::vector<std::string>& avoid = {});

/// Collect every Constant/Free name and binder hint occurring in t.
void collect_names(const TermPtr& t, std::vector<std::string>& out);

}  // namespace selfie
