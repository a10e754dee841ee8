#include "assertion.hpp"

#include <algorithm>
#include <array>

namespace selfie {

const char* selfie_type_name(SelfieType t) {
  switch (t) {
    case SelfieType::Term: return "term";
    case SelfieType::TermOccurrence: return "term_occurrence";
    case SelfieType::Rule: return "rule";
    case SelfieType::Number: return "number";
  }
  return "?";
}

std::optional<SelfieType> selfie_type_from_name(const std::string& s) {
  if (s == "term") return SelfieType::Term;
  if (s == "term_occurrence") return SelfieType::TermOccurrence;
  if (s == "rule") return SelfieType::Rule;
  if (s == "number") return SelfieType::Number;
  return std::nullopt;
}

const char* modifier_name(ModifierKind m) {
  return m == ModifierKind::InductionTerm ? "induction_term" : "arbitrary_term";
}

namespace {

const std::array<AtomicSignature, 24> kSignatures = {{
    {"is_rule_of", {ArgKind::Rule, ArgKind::Occurrence}},
    {"term_occurrence_is_of_term", {ArgKind::Occurrence, ArgKind::Term}},
    {"are_same_term", {ArgKind::Occurrence, ArgKind::Occurrence}},
    {"are_of_same_term", {ArgKind::Occurrence, ArgKind::Occurrence}},
    {"are_same_terms", {ArgKind::Term, ArgKind::Term}},
    {"is_in_term_occurrence", {ArgKind::Occurrence, ArgKind::Occurrence}},
    {"is_atomic", {ArgKind::Occurrence}},
    {"is_constant", {ArgKind::Occurrence}},
    {"is_free_variable", {ArgKind::Occurrence}},
    {"is_lambda", {ArgKind::Occurrence}},
    {"is_application", {ArgKind::Occurrence}},
    {"is_an_argument_of", {ArgKind::Occurrence, ArgKind::Occurrence}},
    {"is_nth_argument_of", {ArgKind::Occurrence, ArgKind::Number, ArgKind::Occurrence}},
    {"is_nth_induction_term", {ArgKind::Term, ArgKind::Number}},
    {"is_nth_arbitrary_term", {ArgKind::Term, ArgKind::Number}},
    {"is_at_deepest", {ArgKind::Occurrence}},
    {"term_is_free", {ArgKind::Term}},
    {"are_same_number", {ArgKind::Number, ArgKind::Number}},
    {"is_defined_with_recursion_keyword", {ArgKind::Term}},
    {"is_defined_with_command", {ArgKind::Term, ArgKind::Command}},
    {"is_or_below_nth_argument_of", {ArgKind::Occurrence, ArgKind::Number, ArgKind::Occurrence}},
    {"is_root_in_a_location", {ArgKind::Occurrence}},
    {"is_lhs_of_root", {ArgKind::Occurrence, ArgKind::Occurrence}},
    {"is_nplus1th_child_of", {ArgKind::Occurrence, ArgKind::Number, ArgKind::Occurrence}},
}};

}  // namespace

const AtomicSignature& atomic_signature(AtomicName a) {
  return kSignatures[static_cast<size_t>(a)];
}

std::optional<AtomicName> atomic_from_name(const std::string& s) {
  for (size_t i = 0; i < kSignatures.size(); ++i) {
    if (s == kSignatures[i].name) return static_cast<AtomicName>(i);
  }
  return std::nullopt;
}

std::vector<AtomicName> all_atomic_names() {
  std::vector<AtomicName> out;
  for (size_t i = 0; i < kSignatures.size(); ++i) out.push_back(static_cast<AtomicName>(i));
  return out;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {
std::shared_ptr<Assertion> node(Assertion::Kind k) {
  auto a = std::make_shared<Assertion>();
  a->kind = k;
  return a;
}
}  // namespace

AssertionPtr mk_var(std::string name) {
  auto a = node(Assertion::Kind::Var);
  a->name = std::move(name);
  return a;
}

AssertionPtr mk_number_lit(int n) {
  auto a = node(Assertion::Kind::NumberLit);
  a->number = n;
  return a;
}

AssertionPtr mk_term_lit(TermPtr t) {
  auto a = node(Assertion::Kind::TermLit);
  a->term = std::move(t);
  return a;
}

AssertionPtr mk_command_lit(DefinitionCommand c) {
  auto a = node(Assertion::Kind::CommandLit);
  a->command = c;
  return a;
}

AssertionPtr mk_true() { return node(Assertion::Kind::True); }
AssertionPtr mk_false() { return node(Assertion::Kind::False); }

AssertionPtr mk_not(AssertionPtr x) {
  auto a = node(Assertion::Kind::Not);
  a->children = {std::move(x)};
  return a;
}

AssertionPtr mk_and(AssertionPtr l, AssertionPtr r) {
  auto a = node(Assertion::Kind::And);
  a->children = {std::move(l), std::move(r)};
  return a;
}

AssertionPtr mk_or(AssertionPtr l, AssertionPtr r) {
  auto a = node(Assertion::Kind::Or);
  a->children = {std::move(l), std::move(r)};
  return a;
}

AssertionPtr mk_implies(AssertionPtr l, AssertionPtr r) {
  auto a = node(Assertion::Kind::Implies);
  a->children = {std::move(l), std::move(r)};
  return a;
}

AssertionPtr mk_quant(QuantKind q, std::string var, SelfieType type, AssertionPtr body) {
  auto a = node(Assertion::Kind::QuantTyped);
  a->quant = q;
  a->name = std::move(var);
  a->type = type;
  a->children = {std::move(body)};
  return a;
}

AssertionPtr mk_quant_modifier(QuantKind q, std::string var, ModifierKind m, AssertionPtr body) {
  auto a = node(Assertion::Kind::QuantModifier);
  a->quant = q;
  a->name = std::move(var);
  a->modifier = m;
  a->children = {std::move(body)};
  return a;
}

AssertionPtr mk_quant_occ_in(QuantKind q, std::string occ_var, std::string term_var,
                             AssertionPtr body) {
  auto a = node(Assertion::Kind::QuantOccIn);
  a->quant = q;
  a->name = std::move(occ_var);
  a->domain_var = std::move(term_var);
  a->children = {std::move(body)};
  return a;
}

AssertionPtr mk_lambda(std::vector<std::string> params, AssertionPtr body) {
  auto a = node(Assertion::Kind::Lambda);
  a->params = std::move(params);
  a->children = {std::move(body)};
  return a;
}

AssertionPtr mk_apply(AssertionPtr fun, std::vector<AssertionPtr> args) {
  auto a = node(Assertion::Kind::Apply);
  a->children.push_back(std::move(fun));
  for (auto& x : args) a->children.push_back(std::move(x));
  return a;
}

AssertionPtr mk_atomic(AtomicName name, std::vector<AssertionPtr> args) {
  auto a = node(Assertion::Kind::Atomic);
  a->atomic = name;
  a->children = std::move(args);
  return a;
}

AssertionPtr mk_semantic(SemanticKind k, AssertionPtr target, AssertionPtr heuristic,
                         std::vector<AssertionPtr> args) {
  auto a = node(Assertion::Kind::Semantic);
  a->semantic = k;
  a->children.push_back(std::move(target));
  a->children.push_back(std::move(heuristic));
  for (auto& x : args) a->children.push_back(std::move(x));
  return a;
}

AssertionPtr mk_let(std::string name, AssertionPtr bound, AssertionPtr body) {
  auto a = node(Assertion::Kind::Let);
  a->name = std::move(name);
  a->children = {std::move(bound), std::move(body)};
  return a;
}

bool equal_assertions(const AssertionPtr& a, const AssertionPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Assertion::Kind::Var:
      if (a->name != b->name) return false;
      break;
    case Assertion::Kind::NumberLit:
      if (a->number != b->number) return false;
      break;
    case Assertion::Kind::TermLit:
      if (!equal_terms(a->term, b->term)) return false;
      break;
    case Assertion::Kind::CommandLit:
      if (a->command != b->command) return false;
      break;
    case Assertion::Kind::QuantTyped:
      if (a->quant != b->quant || a->name != b->name || a->type != b->type) return false;
      break;
    case Assertion::Kind::QuantModifier:
      if (a->quant != b->quant || a->name != b->name || a->modifier != b->modifier) return false;
      break;
    case Assertion::Kind::QuantOccIn:
      if (a->quant != b->quant || a->name != b->name || a->domain_var != b->domain_var)
        return false;
      break;
    case Assertion::Kind::Lambda:
      if (a->params != b->params) return false;
      break;
    case Assertion::Kind::Atomic:
      if (a->atomic != b->atomic) return false;
      break;
    case Assertion::Kind::Semantic:
      if (a->semantic != b->semantic) return false;
      break;
    case Assertion::Kind::Let:
      if (a->name != b->name) return false;
      break;
    default:
      break;
  }
  if (a->children.size() != b->children.size()) return false;
  for (size_t i = 0; i < a->children.size(); ++i) {
    if (!equal_assertions(a->children[i], b->children[i])) return false;
  }
  return true;
}

const AssertionPtr* Program::find(const std::string& name) const {
  for (const auto& [n, a] : defs) {
    if (n == name) return &a;
  }
  return nullptr;
}

std::vector<std::string> Program::names() const {
  std::vector<std::string> out;
  out.reserve(defs.size());
  for (const auto& [n, _] : defs) out.push_back(n);
  return out;
}

void Program::add(std::string name, AssertionPtr body) {
  if (find(name)) throw Error("duplicate definition: " + name);
  defs.emplace_back(std::move(name), std::move(body));
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Precedence: 0 binders (quantifiers, lambda), 1 implies, 2 or, 3 and,
// 4 unary, 5 atoms.
constexpr int kPrecBinder = 0;
constexpr int kPrecImplies = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecUnary = 4;

struct TermLitPrinter {
  std::vector<std::string> avoid;
  std::vector<std::string> binders;
  int fresh = 0;

  void print(const TermPtr& t, std::string& out) {
    switch (t->kind) {
      case Term::Kind::Constant:
        out += "$" + t->name;
        break;
      case Term::Kind::Free:
        out += t->name;
        break;
      case Term::Kind::Bound:
        out += binders[binders.size() - 1 - static_cast<size_t>(t->index)];
        break;
      case Term::Kind::Lambda: {
        std::string n;
        do {
          n = "b" + std::to_string(fresh++);
        } while (std::find(avoid.begin(), avoid.end(), n) != avoid.end());
        binders.push_back(n);
        out += "%" + n + ". ";
        print(t->body, out);
        binders.pop_back();
        break;
      }
      case Term::Kind::App:
        out += "(";
        print(t->fun, out);
        out += " ";
        print(t->arg, out);
        out += ")";
        break;
    }
  }
};

// Term literals print in a fully parenthesized prefix form with `$`
// marking constants, so no constant table is needed to read them back.
std::string print_term_literal(const TermPtr& t) {
  TermLitPrinter p;
  collect_names(t, p.avoid);
  std::string out;
  p.print(t, out);
  return out;
}

std::string print_rec(const AssertionPtr& a, int prec) {
  auto wrap = [&](const std::string& s, int node_prec) {
    return prec > node_prec ? "(" + s + ")" : s;
  };
  switch (a->kind) {
    case Assertion::Kind::Var:
      return a->name;
    case Assertion::Kind::NumberLit:
      return std::to_string(a->number);
    case Assertion::Kind::TermLit:
      return "`" + print_term_literal(a->term) + "`";
    case Assertion::Kind::CommandLit:
      return command_name(a->command);
    case Assertion::Kind::True:
      return "True";
    case Assertion::Kind::False:
      return "False";
    case Assertion::Kind::Not:
      return wrap("!" + print_rec(a->children[0], kPrecUnary), kPrecUnary);
    case Assertion::Kind::And:
      return wrap(print_rec(a->children[0], kPrecAnd) + " & " +
                      print_rec(a->children[1], kPrecAnd + 1),
                  kPrecAnd);
    case Assertion::Kind::Or:
      return wrap(print_rec(a->children[0], kPrecOr) + " | " +
                      print_rec(a->children[1], kPrecOr + 1),
                  kPrecOr);
    case Assertion::Kind::Implies:
      return wrap(print_rec(a->children[0], kPrecImplies + 1) + " -> " +
                      print_rec(a->children[1], kPrecImplies),
                  kPrecImplies);
    case Assertion::Kind::QuantTyped: {
      std::string out = std::string(a->quant == QuantKind::Exists ? "EX" : "ALL") + " " + a->name +
                        " : " + selfie_type_name(a->type) + ". " +
                        print_rec(a->children[0], kPrecBinder);
      return wrap(out, kPrecBinder);
    }
    case Assertion::Kind::QuantModifier: {
      std::string out = std::string(a->quant == QuantKind::Exists ? "EX" : "ALL") + " " + a->name +
                        " : term in " + modifier_name(a->modifier) + ". " +
                        print_rec(a->children[0], kPrecBinder);
      return wrap(out, kPrecBinder);
    }
    case Assertion::Kind::QuantOccIn: {
      std::string out = std::string(a->quant == QuantKind::Exists ? "EX" : "ALL") + " " + a->name +
                        " : term_occurrence : " + a->domain_var + ". " +
                        print_rec(a->children[0], kPrecBinder);
      return wrap(out, kPrecBinder);
    }
    case Assertion::Kind::Lambda: {
      std::string out = "\\ [";
      for (size_t i = 0; i < a->params.size(); ++i) {
        if (i) out += ", ";
        out += a->params[i];
      }
      out += "]. " + print_rec(a->children[0], kPrecBinder);
      return wrap(out, kPrecBinder);
    }
    case Assertion::Kind::Apply: {
      std::string out = print_rec(a->children[0], kPrecUnary + 1) + " [";
      for (size_t i = 1; i < a->children.size(); ++i) {
        if (i > 1) out += ", ";
        out += print_rec(a->children[i], kPrecBinder);
      }
      return out + "]";
    }
    case Assertion::Kind::Atomic: {
      std::string out = std::string(atomic_signature(a->atomic).name) + " (";
      for (size_t i = 0; i < a->children.size(); ++i) {
        if (i) out += ", ";
        out += print_rec(a->children[i], kPrecBinder);
      }
      return out + ")";
    }
    case Assertion::Kind::Semantic: {
      std::string out = a->semantic == SemanticKind::Some ? "in_some_definition ("
                                                          : "in_all_definition (";
      out += print_rec(a->children[0], kPrecBinder) + ", ";
      out += print_rec(a->children[1], kPrecBinder) + ", [";
      for (size_t i = 2; i < a->children.size(); ++i) {
        if (i > 2) out += ", ";
        out += print_rec(a->children[i], kPrecBinder);
      }
      return out + "])";
    }
    case Assertion::Kind::Let:
      throw Error("let-bindings have no surface syntax");
  }
  throw Error("unreachable assertion kind");
}

}  // namespace

std::string print_assertion(const AssertionPtr& a) { return print_rec(a, kPrecBinder); }

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& [name, body] : p.defs) {
    out += name + " :=\n  " + print_assertion(body) + "\n\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class ATok {
  Ident,
  Number,
  TermLit,
  Assign,   // :=
  Arrow,    // ->
  AndOp,    // &
  OrOp,     // |
  NotOp,    // !
  Backslash,
  Dot,
  Colon,
  Comma,
  LParen,
  RParen,
  LBracket,
  RBracket,
  End,
};

struct AToken {
  ATok kind;
  std::string text;
  int number = 0;
  int line = 1;
  int col = 1;
};

bool a_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool a_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<AToken> alex(const std::string& src) {
  std::vector<AToken> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](ATok k, std::string text, int l, int c) {
    AToken t;
    t.kind = k;
    t.text = std::move(text);
    t.line = l;
    t.col = c;
    out.push_back(std::move(t));
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
    if (a_ident_start(c)) {
      size_t j = i;
      while (j < src.size() && a_ident_char(src[j])) ++j;
      push(ATok::Ident, src.substr(i, j - i), l, co);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      AToken t;
      t.kind = ATok::Number;
      t.text = src.substr(i, j - i);
      t.number = std::stoi(t.text);
      t.line = l;
      t.col = co;
      out.push_back(std::move(t));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '`') {
      size_t j = i + 1;
      while (j < src.size() && src[j] != '`') {
        if (src[j] == '\n') throw ParseError("unterminated term literal", l, co);
        ++j;
      }
      if (j >= src.size()) throw ParseError("unterminated term literal", l, co);
      push(ATok::TermLit, src.substr(i + 1, j - i - 1), l, co);
      col += static_cast<int>(j - i) + 1;
      i = j + 1;
      continue;
    }
    auto two = [&](char a, char b) { return c == a && i + 1 < src.size() && src[i + 1] == b; };
    if (two(':', '=')) {
      push(ATok::Assign, ":=", l, co);
      i += 2;
      col += 2;
      continue;
    }
    if (two('-', '>')) {
      push(ATok::Arrow, "->", l, co);
      i += 2;
      col += 2;
      continue;
    }
    switch (c) {
      case '&': push(ATok::AndOp, "&", l, co); break;
      case '|': push(ATok::OrOp, "|", l, co); break;
      case '!': push(ATok::NotOp, "!", l, co); break;
      case '\\': push(ATok::Backslash, "\\", l, co); break;
      case '.': push(ATok::Dot, ".", l, co); break;
      case ':': push(ATok::Colon, ":", l, co); break;
      case ',': push(ATok::Comma, ",", l, co); break;
      case '(': push(ATok::LParen, "(", l, co); break;
      case ')': push(ATok::RParen, ")", l, co); break;
      case '[': push(ATok::LBracket, "[", l, co); break;
      case ']': push(ATok::RBracket, "]", l, co); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, co);
    }
    ++i;
    ++col;
  }
  AToken end;
  end.kind = ATok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// "induction_term" and "arbitrary_term" are contextual (only special
// after "in"), so variables may reuse those names.
const std::set<std::string> kReservedWords = {
    "EX",  "ALL", "True",          "False",         "in",
    "term", "term_occurrence", "rule", "number",
    "in_some_definition", "in_all_definition",
    "definition", "primrec", "fun", "function", "inductive", "inductive_set"};

// Parse a term literal: fully parenthesized prefix applications,
// `$name` for constants, `%x. body` binders, bare names free.
class TermLitParser {
 public:
  explicit TermLitParser(const std::string& s, int line, int col) : s_(s), line_(line), col_(col) {}

  TermPtr parse() {
    skip_ws();
    TermPtr t = parse_one();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input in term literal", line_, col_);
    return t;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
  int line_, col_;
  std::vector<std::string> binders_;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string ident() {
    size_t start = pos_;
    while (pos_ < s_.size() && a_ident_char(s_[pos_])) ++pos_;
    if (pos_ == start) throw ParseError("expected a name in term literal", line_, col_);
    return s_.substr(start, pos_ - start);
  }

  TermPtr parse_one() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of term literal", line_, col_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TermPtr t = parse_one();
      skip_ws();
      while (pos_ < s_.size() && s_[pos_] != ')') {
        t = mk_app(t, parse_one());
        skip_ws();
      }
      if (pos_ >= s_.size()) throw ParseError("expected ')' in term literal", line_, col_);
      ++pos_;
      return t;
    }
    if (c == '$') {
      ++pos_;
      // Operator constants are spelled bare after the sigil: $= $@ $#
      if (pos_ < s_.size() && (s_[pos_] == '=' || s_[pos_] == '@' || s_[pos_] == '#')) {
        return mk_const(std::string(1, s_[pos_++]));
      }
      return mk_const(ident());
    }
    if (c == '%') {
      ++pos_;
      std::string n = ident();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '.')
        throw ParseError("expected '.' in term literal binder", line_, col_);
      ++pos_;
      binders_.push_back(n);
      TermPtr body = parse_one();
      binders_.pop_back();
      return selfie::mk_lambda(body, n);
    }
    std::string n = ident();
    for (size_t i = binders_.size(); i-- > 0;) {
      if (binders_[i] == n) return mk_bound(static_cast<int>(binders_.size() - 1 - i));
    }
    return mk_free(n);
  }
};

class AssertionParser {
 public:
  AssertionParser(std::vector<AToken> toks, std::vector<std::string> scope)
      : toks_(std::move(toks)), scope_(std::move(scope)) {}

  Program parse_program() {
    Program prog;
    if (peek().kind == ATok::End)
      throw ParseError("empty assertion file", peek().line, peek().col);
    while (peek().kind != ATok::End) {
      AToken name = expect(ATok::Ident, "a definition name");
      check_bindable(name);
      expect(ATok::Assign, "':='");
      AssertionPtr body = parse_assertion();
      prog.add(name.text, std::move(body));
      scope_.push_back(name.text);
    }
    return prog;
  }

  AssertionPtr parse_expr_full() {
    AssertionPtr a = parse_assertion();
    if (peek().kind != ATok::End)
      throw ParseError("unexpected trailing input '" + peek().text + "'", peek().line,
                       peek().col);
    return a;
  }

 private:
  std::vector<AToken> toks_;
  size_t pos_ = 0;
  std::vector<std::string> scope_;

  const AToken& peek() const { return toks_[pos_]; }
  const AToken& peek2() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
  const AToken& next() { return toks_[pos_++]; }

  AToken expect(ATok k, const char* what) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + what + ", found '" + peek().text + "'",
                       peek().line, peek().col);
    return next();
  }

  void check_bindable(const AToken& name) {
    if (kReservedWords.count(name.text) || atomic_from_name(name.text))
      throw ParseError("'" + name.text + "' is reserved and cannot be bound", name.line,
                       name.col);
  }

  bool in_scope(const std::string& n) const {
    return std::find(scope_.begin(), scope_.end(), n) != scope_.end();
  }

  template <typename F>
  AssertionPtr with_binding(const AToken& name, F&& f) {
    check_bindable(name);
    scope_.push_back(name.text);
    AssertionPtr body = f();
    scope_.pop_back();
    return body;
  }

  bool at_keyword(const char* kw) const {
    return peek().kind == ATok::Ident && peek().text == kw;
  }

  AssertionPtr parse_assertion() {
    if (at_keyword("EX") || at_keyword("ALL")) return parse_quantifier();
    if (peek().kind == ATok::Backslash) return parse_lambda();
    return parse_implies();
  }

  AssertionPtr parse_quantifier() {
    AToken q = next();
    QuantKind quant = q.text == "EX" ? QuantKind::Exists : QuantKind::Forall;
    AToken var = expect(ATok::Ident, "a variable name");
    expect(ATok::Colon, "':'");
    AToken ty = expect(ATok::Ident, "a type name");
    auto type = selfie_type_from_name(ty.text);
    if (!type)
      throw ParseError("unknown type '" + ty.text + "'", ty.line, ty.col);
    SourceLoc loc{q.line, q.col};
    if (at_keyword("in")) {
      if (*type != SelfieType::Term)
        throw ParseError("modifier domains require type 'term'", peek().line, peek().col);
      next();
      AToken mod = expect(ATok::Ident, "a modifier name");
      ModifierKind m;
      if (mod.text == "induction_term")
        m = ModifierKind::InductionTerm;
      else if (mod.text == "arbitrary_term")
        m = ModifierKind::ArbitraryTerm;
      else
        throw ParseError("unknown modifier '" + mod.text + "'", mod.line, mod.col);
      expect(ATok::Dot, "'.'");
      AssertionPtr body = with_binding(var, [&] { return parse_assertion(); });
      auto a = mk_quant_modifier(quant, var.text, m, std::move(body));
      const_cast<Assertion*>(a.get())->loc = loc;
      return a;
    }
    if (peek().kind == ATok::Colon) {
      if (*type != SelfieType::TermOccurrence)
        throw ParseError("occurrence-in-term domains require type 'term_occurrence'",
                         peek().line, peek().col);
      next();
      AToken term_var = expect(ATok::Ident, "a term variable");
      if (!in_scope(term_var.text))
        throw ParseError("unbound variable '" + term_var.text + "'", term_var.line,
                         term_var.col);
      // An optional `: term` annotation after the variable is accepted.
      if (peek().kind == ATok::Colon && peek2().kind == ATok::Ident && peek2().text == "term") {
        next();
        next();
      }
      expect(ATok::Dot, "'.'");
      AssertionPtr body = with_binding(var, [&] { return parse_assertion(); });
      auto a = mk_quant_occ_in(quant, var.text, term_var.text, std::move(body));
      const_cast<Assertion*>(a.get())->loc = loc;
      return a;
    }
    expect(ATok::Dot, "'.'");
    AssertionPtr body = with_binding(var, [&] { return parse_assertion(); });
    auto a = mk_quant(quant, var.text, *type, std::move(body));
    const_cast<Assertion*>(a.get())->loc = loc;
    return a;
  }

  AssertionPtr parse_lambda() {
    AToken bs = next();
    expect(ATok::LBracket, "'['");
    std::vector<AToken> params;
    params.push_back(expect(ATok::Ident, "a parameter name"));
    while (peek().kind == ATok::Comma) {
      next();
      params.push_back(expect(ATok::Ident, "a parameter name"));
    }
    expect(ATok::RBracket, "']'");
    expect(ATok::Dot, "'.'");
    std::vector<std::string> names;
    for (const auto& p : params) {
      check_bindable(p);
      if (std::find(names.begin(), names.end(), p.text) != names.end())
        throw ParseError("duplicate lambda parameter '" + p.text + "'", p.line, p.col);
      names.push_back(p.text);
      scope_.push_back(p.text);
    }
    AssertionPtr body = parse_assertion();
    for (size_t i = 0; i < names.size(); ++i) scope_.pop_back();
    auto a = selfie::mk_lambda(std::move(names), std::move(body));
    const_cast<Assertion*>(a.get())->loc = SourceLoc{bs.line, bs.col};
    return a;
  }

  AssertionPtr parse_implies() {
    AssertionPtr lhs = parse_or();
    if (peek().kind == ATok::Arrow) {
      next();
      // Right-assoc; the tail may again be a binder form.
      AssertionPtr rhs =
          (at_keyword("EX") || at_keyword("ALL") || peek().kind == ATok::Backslash)
              ? parse_assertion()
              : parse_implies();
      return mk_implies(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  AssertionPtr parse_or() {
    AssertionPtr lhs = parse_and();
    while (peek().kind == ATok::OrOp) {
      next();
      lhs = mk_or(std::move(lhs), parse_and());
    }
    return lhs;
  }

  AssertionPtr parse_and() {
    AssertionPtr lhs = parse_unary();
    while (peek().kind == ATok::AndOp) {
      next();
      lhs = mk_and(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  std::vector<AssertionPtr> parse_arg_list(ATok open, ATok close, const char* close_text) {
    expect(open, open == ATok::LParen ? "'('" : "'['");
    std::vector<AssertionPtr> args;
    if (peek().kind != close) {
      args.push_back(parse_assertion());
      while (peek().kind == ATok::Comma) {
        next();
        args.push_back(parse_assertion());
      }
    }
    expect(close, close_text);
    return args;
  }

  std::vector<AssertionPtr> parse_any_arg_list() {
    if (peek().kind == ATok::LParen) return parse_arg_list(ATok::LParen, ATok::RParen, "')'");
    return parse_arg_list(ATok::LBracket, ATok::RBracket, "']'");
  }

  AssertionPtr parse_semantic(SemanticKind k, const AToken& kw) {
    bool bracket = peek().kind == ATok::LBracket;
    if (peek().kind != ATok::LParen && !bracket)
      throw ParseError("expected argument list after semantic construct", peek().line,
                       peek().col);
    next();
    AssertionPtr target = parse_assertion();
    expect(ATok::Comma, "','");
    AssertionPtr heuristic = parse_assertion();
    expect(ATok::Comma, "','");
    std::vector<AssertionPtr> args =
        parse_arg_list(ATok::LBracket, ATok::RBracket, "']'");
    expect(bracket ? ATok::RBracket : ATok::RParen, bracket ? "']'" : "')'");
    auto a = mk_semantic(k, std::move(target), std::move(heuristic), std::move(args));
    const_cast<Assertion*>(a.get())->loc = SourceLoc{kw.line, kw.col};
    return a;
  }

  AssertionPtr parse_unary() {
    const AToken& t = peek();
    switch (t.kind) {
      case ATok::NotOp: {
        next();
        return mk_not(parse_unary());
      }
      case ATok::LParen: {
        next();
        AssertionPtr inner = parse_assertion();
        expect(ATok::RParen, "')'");
        return maybe_apply(std::move(inner));
      }
      case ATok::Number: {
        AToken n = next();
        return mk_number_lit(n.number);
      }
      case ATok::TermLit: {
        AToken lit = next();
        TermLitParser tp(lit.text, lit.line, lit.col);
        return mk_term_lit(tp.parse());
      }
      case ATok::Ident:
        return parse_ident_form();
      default:
        throw ParseError("expected an assertion, found '" + t.text + "'", t.line, t.col);
    }
  }

  AssertionPtr parse_ident_form() {
    AToken id = next();
    if (id.text == "True") return mk_true();
    if (id.text == "False") return mk_false();
    if (id.text == "in_some_definition") return parse_semantic(SemanticKind::Some, id);
    if (id.text == "in_all_definition") return parse_semantic(SemanticKind::All, id);
    if (auto cmd = command_from_name(id.text)) return mk_command_lit(*cmd);
    if (auto atom = atomic_from_name(id.text)) {
      if (peek().kind != ATok::LParen && peek().kind != ATok::LBracket)
        throw ParseError("atomic assertion '" + id.text + "' requires arguments", id.line,
                         id.col);
      std::vector<AssertionPtr> args = parse_any_arg_list();
      const auto& sig = atomic_signature(*atom);
      if (args.size() != sig.args.size())
        throw ParseError("atomic '" + id.text + "' expects " +
                             std::to_string(sig.args.size()) + " arguments, got " +
                             std::to_string(args.size()),
                         id.line, id.col);
      auto a = mk_atomic(*atom, std::move(args));
      const_cast<Assertion*>(a.get())->loc = SourceLoc{id.line, id.col};
      return a;
    }
    if (kReservedWords.count(id.text))
      throw ParseError("'" + id.text + "' cannot appear here", id.line, id.col);
    if (!in_scope(id.text))
      throw ParseError("unbound variable '" + id.text + "'", id.line, id.col);
    auto v = mk_var(id.text);
    const_cast<Assertion*>(v.get())->loc = SourceLoc{id.line, id.col};
    return maybe_apply(std::move(v));
  }

  AssertionPtr maybe_apply(AssertionPtr fun) {
    while (peek().kind == ATok::LBracket || peek().kind == ATok::LParen) {
      std::vector<AssertionPtr> args = parse_any_arg_list();
      fun = mk_apply(std::move(fun), std::move(args));
    }
    return fun;
  }
};

}  // namespace

Program parse_assertion(const std::string& source) {
  AssertionParser p(alex(source), {});
  return p.parse_program();
}

AssertionPtr parse_assertion_expr(const std::string& source,
                                  const std::vector<std::string>& in_scope) {
  AssertionParser p(alex(source), in_scope);
  return p.parse_expr_full();
}

}  // namespace selfie
