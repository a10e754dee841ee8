#include "theory.hpp"

#include <algorithm>
#include <cctype>

namespace selfie {

const char* command_name(DefinitionCommand c) {
  switch (c) {
    case DefinitionCommand::Definition: return "definition";
    case DefinitionCommand::Primrec: return "primrec";
    case DefinitionCommand::Fun: return "fun";
    case DefinitionCommand::Function: return "function";
    case DefinitionCommand::Inductive: return "inductive";
    case DefinitionCommand::InductiveSet: return "inductive_set";
  }
  return "?";
}

std::optional<DefinitionCommand> command_from_name(const std::string& s) {
  if (s == "definition") return DefinitionCommand::Definition;
  if (s == "primrec") return DefinitionCommand::Primrec;
  if (s == "fun") return DefinitionCommand::Fun;
  if (s == "function") return DefinitionCommand::Function;
  if (s == "inductive") return DefinitionCommand::Inductive;
  if (s == "inductive_set") return DefinitionCommand::InductiveSet;
  return std::nullopt;
}

bool is_recursion_command(DefinitionCommand c) {
  return c == DefinitionCommand::Fun || c == DefinitionCommand::Function ||
         c == DefinitionCommand::Primrec;
}

// ---------------------------------------------------------------------------
// Clause normalization

namespace {

// Replace de Bruijn index `depth` with a closed replacement term and
// shift the indices above it down by one.
TermPtr open_rec(const TermPtr& t, int depth, const TermPtr& repl) {
  switch (t->kind) {
    case Term::Kind::Bound:
      if (t->index == depth) return repl;
      if (t->index > depth) return mk_bound(t->index - 1);
      return t;
    case Term::Kind::Lambda:
      return mk_lambda(open_rec(t->body, depth + 1, repl), t->binder_hint);
    case Term::Kind::App:
      return mk_app(open_rec(t->fun, depth, repl), open_rec(t->arg, depth, repl));
    default:
      return t;
  }
}

bool reserved_name(const std::string& n) {
  return n.empty() || n == "=" || n == "@" || n == "#" || n == "nil";
}

}  // namespace

Clause normalize_clause(const TermPtr& raw) {
  TermPtr cur = raw;
  std::vector<std::string> used;
  collect_names(cur, used);
  int fresh = 0;
  while (cur->kind == Term::Kind::Lambda) {
    std::string name = cur->binder_hint;
    // The hint was counted once by collect_names; any second occurrence
    // means another node carries the same name and the hint would
    // capture it.
    bool hint_ok = !reserved_name(name) &&
                   std::count(used.begin(), used.end(), name) <= 1;
    if (!hint_ok) {
      do {
        name = "v" + std::to_string(fresh++);
      } while (std::find(used.begin(), used.end(), name) != used.end());
    }
    used.push_back(name);
    cur = open_rec(cur->body, 0, mk_free(name));
  }
  return Clause{cur};
}

// ---------------------------------------------------------------------------
// ProofContext

const std::string ProofContext::kEquality = "=";

ProofContext::ProofContext() : builtins_{"=", "#", "nil"} {}

bool ProofContext::is_builtin(const std::string& name) const { return builtins_.count(name) > 0; }

bool ProofContext::is_constant(const std::string& name) const {
  return is_builtin(name) || constants_.count(name) > 0;
}

const ConstantInfo* ProofContext::find(const std::string& name) const {
  auto it = constants_.find(name);
  return it == constants_.end() ? nullptr : &it->second;
}

static bool mentions_constant(const TermPtr& t, const std::string& name) {
  switch (t->kind) {
    case Term::Kind::Constant:
      return t->name == name;
    case Term::Kind::Lambda:
      return mentions_constant(t->body, name);
    case Term::Kind::App:
      return mentions_constant(t->fun, name) || mentions_constant(t->arg, name);
    default:
      return false;
  }
}

void ProofContext::define(const std::string& name, DefinitionCommand command,
                          std::vector<Clause> clauses) {
  if (is_constant(name)) throw Error("duplicate constant definition: " + name);
  if (clauses.empty()) throw Error("constant " + name + " has no defining clauses");
  for (const auto& c : clauses) {
    if (!mentions_constant(c.body, name))
      throw Error("defining clause of " + name + " does not mention it: " + print_term(c.body));
  }
  order_.push_back(name);
  constants_.emplace(name, ConstantInfo{command, std::move(clauses)});
}

std::vector<std::string> ProofContext::defined_names() const { return order_; }

std::set<std::string> ProofContext::constant_names() const {
  std::set<std::string> out = builtins_;
  for (const auto& n : order_) out.insert(n);
  return out;
}

// ---------------------------------------------------------------------------
// Lexer shared by the term and theory grammars

namespace {

enum class Tok {
  Ident,
  Op,  // = @ #
  Str,
  Percent,
  MetaAll,  // !!
  Dot,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Pipe,
  ColonColon,
  Colon,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& src, int line0 = 1, int col0 = 1) {
  std::vector<Token> out;
  int line = line0, col = col0;
  size_t i = 0;
  auto push = [&](Tok k, std::string text, int l, int c) {
    out.push_back(Token{k, std::move(text), l, c});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    int l = line, co = col;
    if (ident_start(c)) {
      size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      push(Tok::Ident, src.substr(i, j - i), l, co);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '"') {
      size_t j = i + 1;
      int el = line, ec = col + 1;
      std::string text;
      while (j < src.size() && src[j] != '"') {
        if (src[j] == '\n') {
          ++el;
          ec = 1;
        } else {
          ++ec;
        }
        text += src[j];
        ++j;
      }
      if (j >= src.size()) throw ParseError("unterminated string literal", l, co);
      push(Tok::Str, text, l, co);
      line = el;
      col = ec + 1;
      i = j + 1;
      continue;
    }
    auto two = [&](char a, char b) { return c == a && i + 1 < src.size() && src[i + 1] == b; };
    if (two(':', ':')) {
      push(Tok::ColonColon, "::", l, co);
      i += 2;
      col += 2;
      continue;
    }
    if (two('!', '!')) {
      push(Tok::MetaAll, "!!", l, co);
      i += 2;
      col += 2;
      continue;
    }
    switch (c) {
      case '=': push(Tok::Op, "=", l, co); break;
      case '@': push(Tok::Op, "@", l, co); break;
      case '#': push(Tok::Op, "#", l, co); break;
      case '%': push(Tok::Percent, "%", l, co); break;
      case '.': push(Tok::Dot, ".", l, co); break;
      case '(': push(Tok::LParen, "(", l, co); break;
      case ')': push(Tok::RParen, ")", l, co); break;
      case '[': push(Tok::LBracket, "[", l, co); break;
      case ']': push(Tok::RBracket, "]", l, co); break;
      case ',': push(Tok::Comma, ",", l, co); break;
      case '|': push(Tok::Pipe, "|", l, co); break;
      case ':': push(Tok::Colon, ":", l, co); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, co);
    }
    ++i;
    ++col;
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Term parser

class TermParser {
 public:
  TermParser(std::vector<Token> toks, const std::set<std::string>& constants)
      : toks_(std::move(toks)), constants_(constants) {}

  TermPtr parse_full() {
    TermPtr t = parse_eq();
    if (peek().kind != Tok::End)
      throw ParseError("unexpected trailing input '" + peek().text + "'", peek().line,
                       peek().col);
    return t;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::set<std::string> constants_;
  std::vector<std::string> binders_;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  TermPtr parse_eq() {
    TermPtr lhs = parse_append();
    if (peek().kind == Tok::Op && peek().text == "=") {
      next();
      TermPtr rhs = parse_append();
      if (peek().kind == Tok::Op && peek().text == "=")
        throw ParseError("'=' is not associative; use parentheses", peek().line, peek().col);
      return mk_spine(mk_const("="), {lhs, rhs});
    }
    return lhs;
  }

  TermPtr parse_append() {
    TermPtr lhs = parse_cons();
    if (peek().kind == Tok::Op && peek().text == "@") {
      next();
      TermPtr rhs = parse_append();
      return mk_spine(mk_const("@"), {lhs, rhs});
    }
    return lhs;
  }

  TermPtr parse_cons() {
    TermPtr lhs = parse_apply();
    if (peek().kind == Tok::Op && peek().text == "#") {
      next();
      TermPtr rhs = parse_cons();
      return mk_spine(mk_const("#"), {lhs, rhs});
    }
    return lhs;
  }

  bool starts_atom(const Token& t) const {
    switch (t.kind) {
      case Tok::Ident:
      case Tok::LParen:
      case Tok::LBracket:
      case Tok::Percent:
      case Tok::MetaAll:
        return true;
      default:
        return false;
    }
  }

  TermPtr parse_apply() {
    TermPtr head = parse_atom();
    while (starts_atom(peek())) head = mk_app(head, parse_atom());
    return head;
  }

  TermPtr resolve_ident(const Token& tok) {
    for (size_t i = binders_.size(); i-- > 0;) {
      if (binders_[i] == tok.text) return mk_bound(static_cast<int>(binders_.size() - 1 - i));
    }
    if (constants_.count(tok.text)) return mk_const(tok.text);
    return mk_free(tok.text);
  }

  // '%' and '!!' bind identically; the latter is the conventional
  // spelling for meta-level universals in defining clauses.
  TermPtr parse_binder() {
    next();
    std::vector<Token> names;
    while (peek().kind == Tok::Ident) names.push_back(next());
    if (names.empty()) throw ParseError("expected binder name", peek().line, peek().col);
    for (const auto& n : names) {
      if (constants_.count(n.text))
        throw ParseError("name '" + n.text + "' used as both binder and constant", n.line, n.col);
      binders_.push_back(n.text);
    }
    if (peek().kind != Tok::Dot)
      throw ParseError("expected '.' after binder list", peek().line, peek().col);
    next();
    TermPtr body = parse_eq();
    for (size_t i = names.size(); i-- > 0;) {
      binders_.pop_back();
      body = mk_lambda(body, names[i].text);
    }
    return body;
  }

  TermPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        return resolve_ident(next());
      case Tok::Percent:
      case Tok::MetaAll:
        return parse_binder();
      case Tok::LParen: {
        next();
        // "(=)", "(@)", "(#)" name the operator constants directly.
        if (peek().kind == Tok::Op && toks_[pos_ + 1].kind == Tok::RParen) {
          std::string op = next().text;
          next();
          return mk_const(op);
        }
        TermPtr inner = parse_eq();
        if (peek().kind != Tok::RParen)
          throw ParseError("expected ')'", peek().line, peek().col);
        next();
        return inner;
      }
      case Tok::LBracket: {
        next();
        std::vector<TermPtr> elems;
        if (peek().kind != Tok::RBracket) {
          elems.push_back(parse_eq());
          while (peek().kind == Tok::Comma) {
            next();
            elems.push_back(parse_eq());
          }
        }
        if (peek().kind != Tok::RBracket)
          throw ParseError("expected ']'", peek().line, peek().col);
        next();
        TermPtr list = mk_const("nil");
        for (size_t i = elems.size(); i-- > 0;) list = mk_spine(mk_const("#"), {elems[i], list});
        return list;
      }
      default:
        throw ParseError("expected a term, found '" + t.text + "'", t.line, t.col);
    }
  }
};

void check_known_constants(const TermPtr& t, const ProofContext& ctx, const char* where) {
  switch (t->kind) {
    case Term::Kind::Constant:
      if (!ctx.is_constant(t->name))
        throw Error(std::string("unknown constant '") + t->name + "' in " + where);
      return;
    case Term::Kind::Lambda:
      check_known_constants(t->body, ctx, where);
      return;
    case Term::Kind::App:
      check_known_constants(t->fun, ctx, where);
      check_known_constants(t->arg, ctx, where);
      return;
    default:
      return;
  }
}

bool occurs_in(const TermPtr& needle, const TermPtr& root) {
  if (equal_terms(needle, root)) return true;
  for (const auto& c : flattened_child_terms(root))
    if (occurs_in(needle, c)) return true;
  return false;
}

void validate_candidate(const InductArguments& args, const ProofContext& ctx,
                        const TermPtr& goal) {
  auto check_occurs = [&](const TermPtr& t, const char* field) {
    check_known_constants(t, ctx, "candidate");
    if (!occurs_in(t, goal))
      throw Error(std::string(field) + " term '" + print_term(t) +
                  "' is not a subterm of the goal");
  };
  for (const auto& t : args.induction_terms) check_occurs(t, "induction");
  for (const auto& t : args.arbitrary_terms) check_occurs(t, "arbitrary");
}

// Parses the body of a candidate block starting after "try". Candidate
// terms are atoms so several can follow each other; compound terms need
// parentheses or brackets.
class CandidateParser {
 public:
  CandidateParser(const std::vector<Token>& toks, size_t& pos, const ProofContext& ctx)
      : toks_(toks), pos_(pos), ctx_(ctx) {}

  InductArguments run() {
    expect_kw("induct");
    InductArguments args;
    while (at_term()) args.induction_terms.push_back(atom());
    if (is_kw("arbitrary") && peek2().kind == Tok::Colon) {
      next();
      next();
      if (!at_term())
        throw ParseError("expected at least one term after 'arbitrary:'", peek().line,
                         peek().col);
      while (at_term()) args.arbitrary_terms.push_back(atom());
    }
    if (is_kw("rule") && peek2().kind == Tok::Colon) {
      next();
      next();
      if (peek().kind != Tok::Ident)
        throw ParseError("expected at least one rule name after 'rule:'", peek().line,
                         peek().col);
      while (peek().kind == Tok::Ident && peek().text != "try") {
        std::string rule = next().text;
        while (peek().kind == Tok::Dot) {
          next();
          if (peek().kind != Tok::Ident)
            throw ParseError("expected a rule name segment", peek().line, peek().col);
          rule += "." + next().text;
        }
        args.rules.push_back(rule);
      }
    }
    return args;
  }

 private:
  const std::vector<Token>& toks_;
  size_t& pos_;
  const ProofContext& ctx_;

  const Token& peek() const { return toks_[pos_]; }
  const Token& peek2() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_++]; }
  bool is_kw(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }
  void expect_kw(const char* kw) {
    if (!is_kw(kw))
      throw ParseError(std::string("expected '") + kw + "', found '" + peek().text + "'",
                       peek().line, peek().col);
    next();
  }

  bool at_term() const {
    if (peek().kind == Tok::LParen || peek().kind == Tok::LBracket) return true;
    if (peek().kind != Tok::Ident) return false;
    if (peek().text == "try") return false;
    if ((peek().text == "arbitrary" || peek().text == "rule") && peek2().kind == Tok::Colon)
      return false;
    return true;
  }

  TermPtr atom() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      TermParser tp(lex(next().text, t.line, t.col), ctx_.constant_names());
      return tp.parse_full();
    }
    // Slice out the balanced group and parse it as one term.
    int depth = 0;
    size_t start = pos_;
    do {
      const Token& cur = next();
      if (cur.kind == Tok::LParen || cur.kind == Tok::LBracket) ++depth;
      if (cur.kind == Tok::RParen || cur.kind == Tok::RBracket) --depth;
      if (cur.kind == Tok::End)
        throw ParseError("unbalanced parentheses in candidate", t.line, t.col);
    } while (depth > 0);
    std::vector<Token> group(toks_.begin() + static_cast<long>(start),
                             toks_.begin() + static_cast<long>(pos_));
    group.push_back(Token{Tok::End, "", t.line, t.col});
    TermParser tp(std::move(group), ctx_.constant_names());
    return tp.parse_full();
  }
};

// ---------------------------------------------------------------------------
// Theory parser

const std::set<std::string> kTheoryKeywords = {
    "definition", "primrec", "fun",    "function", "inductive", "inductive_set",
    "where",      "lemma",   "try",    "induct",   "arbitrary", "rule"};

class TheoryParser {
 public:
  explicit TheoryParser(const std::string& src) : toks_(lex(src)) {}

  Theory parse() {
    Theory th;
    while (peek().kind == Tok::Ident && command_from_name(peek().text)) parse_definition(th);
    if (!(peek().kind == Tok::Ident && peek().text == "lemma"))
      throw ParseError("expected a definition or 'lemma', found '" + peek().text + "'",
                       peek().line, peek().col);
    parse_goal(th);
    while (peek().kind == Tok::Ident && peek().text == "try") {
      next();
      CandidateParser cp(toks_, pos_, th.context);
      InductArguments args = cp.run();
      validate_candidate(args, th.context, th.goal);
      th.candidates.push_back(std::move(args));
    }
    if (peek().kind != Tok::End)
      throw ParseError("unexpected trailing input '" + peek().text + "'", peek().line,
                       peek().col);
    return th;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  Token expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + what + ", found '" + peek().text + "'",
                       peek().line, peek().col);
    return next();
  }

  Token expect_keyword(const char* kw) {
    if (!(peek().kind == Tok::Ident && peek().text == kw))
      throw ParseError(std::string("expected '") + kw + "', found '" + peek().text + "'",
                       peek().line, peek().col);
    return next();
  }

  TermPtr parse_quoted_term(const std::set<std::string>& constants) {
    Token s = expect(Tok::Str, "a quoted term");
    TermParser tp(lex(s.text, s.line, s.col + 1), constants);
    return tp.parse_full();
  }

  void parse_definition(Theory& th) {
    Token cmd_tok = next();
    DefinitionCommand cmd = *command_from_name(cmd_tok.text);
    Token name_tok = peek();
    std::string name;
    if (peek().kind == Tok::Ident) {
      if (kTheoryKeywords.count(peek().text))
        throw ParseError("'" + peek().text + "' cannot be used as a constant name", peek().line,
                         peek().col);
      name = next().text;
    } else if (peek().kind == Tok::Op) {
      // Operators may be defined as constants, e.g. `primrec @ where ...`.
      name = next().text;
    } else {
      throw ParseError("expected a constant name", peek().line, peek().col);
    }
    if (th.context.is_constant(name))
      throw ParseError("duplicate constant definition: " + name, name_tok.line, name_tok.col);
    if (peek().kind == Tok::ColonColon) {
      // Type annotations are accepted and discarded.
      next();
      expect(Tok::Str, "a quoted type annotation");
    }
    expect_keyword("where");
    std::set<std::string> constants = th.context.constant_names();
    constants.insert(name);  // visible in its own clauses
    std::vector<Clause> clauses;
    while (true) {
      TermPtr raw = parse_quoted_term(constants);
      clauses.push_back(normalize_clause(raw));
      if (peek().kind == Tok::Pipe)
        next();
      else
        break;
    }
    th.context.define(name, cmd, std::move(clauses));
    for (const auto& c : th.context.find(name)->clauses)
      check_known_constants(c.body, th.context, "defining clause");
  }

  void parse_goal(Theory& th) {
    expect_keyword("lemma");
    Token name = expect(Tok::Ident, "a lemma name");
    th.goal_name = name.text;
    expect(Tok::Colon, "':'");
    th.goal = parse_quoted_term(th.context.constant_names());
    check_known_constants(th.goal, th.context, "goal");
  }
};

}  // namespace

TermPtr parse_term(const std::string& source, const std::set<std::string>& constant_names) {
  std::set<std::string> constants = constant_names;
  constants.insert({"=", "#", "nil"});
  TermParser p(lex(source), constants);
  return p.parse_full();
}

Theory parse_theory(const std::string& source) {
  TheoryParser p(source);
  return p.parse();
}

InductArguments parse_candidate(const std::string& source, const ProofContext& ctx,
                                const TermPtr& goal) {
  std::string src = source;
  size_t b = src.find_first_not_of(" \t\r\n");
  src = b == std::string::npos ? "" : src.substr(b);
  // Strip an optional leading "try" keyword (whole word only).
  if (src.rfind("try", 0) == 0 &&
      (src.size() == 3 || std::isspace(static_cast<unsigned char>(src[3]))))
    src = src.substr(3);

  std::vector<Token> toks = lex(src);
  size_t pos = 0;
  CandidateParser cp(toks, pos, ctx);
  InductArguments args = cp.run();
  if (toks[pos].kind != Tok::End)
    throw ParseError("unexpected trailing input in candidate: '" + toks[pos].text + "'",
                     toks[pos].line, toks[pos].col);
  validate_candidate(args, ctx, goal);
  return args;
}

}  // namespace selfie
