#include "checks.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "heuristics.hpp"

using namespace selfie;
using namespace selfie::test;

TEST_CASE("parse_assertion handles trivial definitions") {
  Program p = parse_assertion("h := True");
  REQUIRE(p.defs.size() == 1);
  CHECK(p.defs[0].first == "h");
  CHECK(equal_assertions(p.defs[0].second, mk_true()));
}

TEST_CASE("parse_assertion builds the naive generalization AST") {
  Program p = standard_program();
  const AssertionPtr* def = p.find("naive_generalization");
  REQUIRE(def);
  // forall over terms whose body is (free /\ not exists-induction) -> exists-arbitrary
  const AssertionPtr& a = *def;
  REQUIRE(a->kind == Assertion::Kind::QuantTyped);
  CHECK(a->quant == QuantKind::Forall);
  CHECK(a->type == SelfieType::Term);
  CHECK(a->name == "free_var_term");
  const AssertionPtr& body = a->children[0];
  REQUIRE(body->kind == Assertion::Kind::Implies);
  const AssertionPtr& lhs = body->children[0];
  REQUIRE(lhs->kind == Assertion::Kind::And);
  CHECK(lhs->children[0]->kind == Assertion::Kind::Atomic);
  CHECK(lhs->children[0]->atomic == AtomicName::TermIsFree);
  REQUIRE(lhs->children[1]->kind == Assertion::Kind::Not);
  const AssertionPtr& ex_ind = lhs->children[1]->children[0];
  REQUIRE(ex_ind->kind == Assertion::Kind::QuantModifier);
  CHECK(ex_ind->modifier == ModifierKind::InductionTerm);
  const AssertionPtr& rhs = body->children[1];
  REQUIRE(rhs->kind == Assertion::Kind::QuantModifier);
  CHECK(rhs->quant == QuantKind::Exists);
  CHECK(rhs->modifier == ModifierKind::ArbitraryTerm);
}

TEST_CASE("definitions are in scope for later definitions") {
  Program p = standard_program();
  const AssertionPtr* outer = p.find("generalize_only_what_should_be_generalized");
  REQUIRE(outer);
  // The semantic construct references the helper by name.
  std::vector<const Assertion*> stack{outer->get()};
  bool found = false;
  while (!stack.empty()) {
    const Assertion* a = stack.back();
    stack.pop_back();
    if (a->kind == Assertion::Kind::Semantic) {
      CHECK(a->children[1]->kind == Assertion::Kind::Var);
      CHECK(a->children[1]->name == "generalize_nth_argument_of");
      found = true;
    }
    for (const auto& c : a->children) stack.push_back(c.get());
  }
  CHECK(found);
  // Forward references are rejected.
  CHECK_THROWS_AS(parse_assertion("a := b\nb := True"), ParseError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_assertion(""), ParseError);
  CHECK_THROWS_AS(parse_assertion("h := unbound_name"), ParseError);
  CHECK_THROWS_AS(parse_assertion("h := some_unknown_atomic (1, 2)"), ParseError);
  // Wrong arity for a known atomic.
  CHECK_THROWS_AS(parse_assertion("h := EX t : term. term_is_free (t, t)"), ParseError);
  CHECK_THROWS_AS(parse_assertion("h := EX t : term. are_same_terms (t)"), ParseError);
  // Unknown type.
  CHECK_THROWS_AS(parse_assertion("h := EX t : foo. True"), ParseError);
  // Duplicate lambda parameters.
  CHECK_THROWS_AS(parse_assertion("h := \\ [a, a]. True"), ParseError);
  // Reserved words cannot be bound.
  CHECK_THROWS_AS(parse_assertion("h := EX fun : term. True"), ParseError);
  // Atomic names need argument lists.
  CHECK_THROWS_AS(parse_assertion("h := term_is_free"), ParseError);
}

TEST_CASE("arity mutations of the corpus are rejected") {
  // Drop or add one argument in every atomic application of the
  // standard source; every mutation must fail to parse.
  const std::string& src = standard_heuristics_source();
  int mutations = 0;
  for (auto atom : all_atomic_names()) {
    const auto& sig = atomic_signature(atom);
    std::string name = sig.name;
    size_t pos = src.find(name + " (");
    if (pos == std::string::npos) continue;
    size_t open = src.find('(', pos);
    // insert an extra unit argument
    std::string mutated = src.substr(0, open + 1) + "0, " + src.substr(open + 1);
    ++mutations;
    CHECK_THROWS_AS(parse_assertion(mutated), ParseError);
  }
  CHECK(mutations >= 5);
}

TEST_CASE("both application styles normalize to one form") {
  Program a = parse_assertion("h := EX t : term. term_is_free (t)");
  Program b = parse_assertion("h := EX t : term. term_is_free [t]");
  CHECK(equal_assertions(a.defs[0].second, b.defs[0].second));
}

TEST_CASE("print_assertion round-trips fixed cases") {
  CHECK(print_assertion(mk_true()) == "True");
  Program p = standard_program();
  for (const auto& [name, body] : p.defs) {
    std::string printed = print_assertion(body);
    CAPTURE(name);
    CAPTURE(printed);
    AssertionPtr reparsed = parse_assertion_expr(printed, p.names());
    CHECK(equal_assertions(reparsed, body));
  }
  // The whole program prints and reparses too.
  Program again = parse_assertion(print_program(p));
  REQUIRE(again.defs.size() == p.defs.size());
  for (size_t i = 0; i < p.defs.size(); ++i) {
    CHECK(again.defs[i].first == p.defs[i].first);
    CHECK(equal_assertions(again.defs[i].second, p.defs[i].second));
  }
}

TEST_CASE("print_assertion round-trips random ASTs") {
  Gen g(20202);
  for (int i = 0; i < 400; ++i) {
    AssertionPtr a = random_printable_assertion(g);
    std::string printed = print_assertion(a);
    CAPTURE(printed);
    AssertionPtr reparsed = parse_assertion_expr(printed);
    CHECK(equal_assertions(reparsed, a));
  }
}

TEST_CASE("golden transcriptions match the built-ins") {
  Program builtin = standard_program();
  Program naive = parse_assertion(read_file(data_path("golden/naive_generalization.sel")));
  CHECK(equal_assertions(*naive.find("naive_generalization"),
                         *builtin.find("naive_generalization")));
  Program sem = parse_assertion(read_file(data_path("golden/semantic_generalization.sel")));
  CHECK(equal_assertions(*sem.find("generalize_nth_argument_of"),
                         *builtin.find("generalize_nth_argument_of")));
  CHECK(equal_assertions(*sem.find("generalize_only_what_should_be_generalized"),
                         *builtin.find("generalize_only_what_should_be_generalized")));
}

TEST_CASE("shipped asset matches the embedded source") {
  Program asset =
      parse_assertion(read_file(std::string(SELFIE_ASSETS_DIR) + "/heuristics/standard.sel"));
  Program builtin = standard_program();
  REQUIRE(asset.defs.size() == builtin.defs.size());
  for (size_t i = 0; i < asset.defs.size(); ++i) {
    CHECK(asset.defs[i].first == builtin.defs[i].first);
    CHECK(equal_assertions(asset.defs[i].second, builtin.defs[i].second));
  }
}

TEST_CASE("static_check accepts the standard program") {
  auto diags = static_check(standard_program());
  CHECK(!has_errors(diags));
  CHECK(diags.empty());
}

TEST_CASE("static_check flags occurrences in semantic arguments") {
  // Build: EX t : term. EX o : term_occurrence. in_some_definition(t, \[p]. True, [o])
  AssertionPtr sem = mk_semantic(SemanticKind::Some, mk_var("t"),
                                 mk_lambda({"p"}, mk_true()), {mk_var("o")});
  AssertionPtr a = mk_quant(QuantKind::Exists, "t", SelfieType::Term,
                            mk_quant(QuantKind::Exists, "o", SelfieType::TermOccurrence, sem));
  auto diags = static_check_assertion(a);
  REQUIRE(has_errors(diags));
  CHECK(diags[0].message.find("semantic") != std::string::npos);
}

TEST_CASE("static_check warnings") {
  // Shadowed quantifier variable.
  AssertionPtr shadow =
      mk_quant(QuantKind::Exists, "x", SelfieType::Term,
               mk_quant(QuantKind::Forall, "x", SelfieType::Number, mk_true()));
  auto diags = static_check_assertion(shadow);
  CHECK(!has_errors(diags));
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].severity == Diagnostic::Severity::Warning);
  CHECK(diags[0].message.find("shadow") != std::string::npos);

  // Lambda in a boolean position.
  AssertionPtr lam = mk_and(mk_lambda({"a"}, mk_true()), mk_true());
  auto diags2 = static_check_assertion(lam);
  CHECK(!has_errors(diags2));
  REQUIRE(!diags2.empty());
  CHECK(diags2[0].message.find("lambda") != std::string::npos);

  // Unbound variable is an error.
  auto diags3 = static_check_assertion(mk_var("nope"));
  CHECK(has_errors(diags3));
}

TEST_CASE("term literals parse and print") {
  AssertionPtr a = parse_assertion_expr(
      "EX t : term. are_same_terms (t, `($itrev xs ys)`)");
  REQUIRE(a->kind == Assertion::Kind::QuantTyped);
  const AssertionPtr& atom = a->children[0];
  REQUIRE(atom->kind == Assertion::Kind::Atomic);
  const AssertionPtr& lit = atom->children[1];
  REQUIRE(lit->kind == Assertion::Kind::TermLit);
  CHECK(equal_terms(lit->term,
                    mk_spine(mk_const("itrev"), {mk_free("xs"), mk_free("ys")})));
  CHECK(equal_assertions(parse_assertion_expr(print_assertion(a)), a));
}
