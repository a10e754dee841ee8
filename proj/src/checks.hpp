#pragma once

#include <string>
#include <vector>

#include "assertion.hpp"

namespace selfie {

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity;
  std::string message;
  SourceLoc loc;
};

/// Best-effort static well-formedness checks over parsed definitions:
///  - error:   an occurrence-typed variable appearing inside the
///             argument list of a semantic construct;
///  - warning: a lambda in a position that needs a boolean;
///  - warning: shadowed names;
///  - error:   unbound variables / wrong atomic arity (for ASTs built
///             programmatically rather than parsed).
std::vector<Diagnostic> static_check(const Program& prog);

/// Checks a single assertion with the given names already in scope.
std::vector<Diagnostic> static_check_assertion(const AssertionPtr& a,
                                               const std::vector<std::string>& in_scope = {});

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace selfie
