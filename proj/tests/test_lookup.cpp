#include <algorithm>
#include <set>

#include "brute.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "lookup.hpp"

using namespace selfie;
using namespace selfie::test;

TEST_CASE("build_table on the itrev goal") {
  const Theory& th = itrev_theory();
  LookupTable table = LookupTable::build(th.goal);
  // Node count frozen from the brute-force flattened enumeration.
  auto pairs = brute_enumerate(th.goal);
  CHECK(pairs.size() == 12);
  CHECK(table.node_count() == pairs.size());
  CHECK(table.all_paths().size() == pairs.size());

  const NodeInfo* root = table.info_at({});
  REQUIRE(root);
  CHECK(root->kind == NodeKind::Application);
  CHECK(root->symbol == "=");
  CHECK(root->child_count == 3);
  CHECK(root->depth == 0);

  const NodeInfo* itrev = table.info_at({2, 1});
  REQUIRE(itrev);
  CHECK(itrev->kind == NodeKind::Constant);
  CHECK(itrev->symbol == "itrev");
  CHECK(itrev->child_count == 0);

  CHECK(table.info_at({4}) == nullptr);
  CHECK(table.max_depth() == 3);
  CHECK(table.max_children() == 3);
}

TEST_CASE("build_table on a single leaf") {
  LookupTable table = LookupTable::build(mk_free("xs"));
  CHECK(table.node_count() == 1);
  CHECK(table.all_paths() == std::vector<Path>{{}});
  CHECK(table.number_domain() == std::vector<int>{0});
}

TEST_CASE("occurrences_of on the goal") {
  const Theory& th = itrev_theory();
  LookupTable table = LookupTable::build(th.goal);
  CHECK(table.occurrences_of(mk_free("ys")) == std::vector<Path>{{2, 3}, {3, 3}});
  CHECK(table.occurrences_of(mk_const("itrev")) == std::vector<Path>{{2, 1}});
  CHECK(table.occurrences_of(mk_free("zs")).empty());
  CHECK(table.occurrences_of(mk_free("xs")) == std::vector<Path>{{2, 2}, {3, 2, 2}});
}

TEST_CASE("occurrences in the second itrev clause") {
  const Theory& th = itrev_theory();
  const Clause& clause2 = th.context.find("itrev")->clauses.at(1);
  LookupTable table = LookupTable::build(clause2.body);
  // ys occurs on the lhs and inside x # ys on the rhs; both found by
  // the brute-force oracle.
  CHECK(brute_occurrences(clause2.body, mk_free("ys")) ==
        std::vector<Path>{{2, 3}, {3, 3, 3}});
  CHECK(table.occurrences_of(mk_free("ys")) == std::vector<Path>{{2, 3}, {3, 3, 3}});
}

TEST_CASE("all_subterms deduplicates") {
  const Theory& th = itrev_theory();
  LookupTable table = LookupTable::build(th.goal);
  int xs_count = 0;
  for (const auto& t : table.all_subterms())
    if (equal_terms(t, mk_free("xs"))) ++xs_count;
  CHECK(xs_count == 1);
  // 12 nodes, xs and ys occur twice each.
  CHECK(table.all_subterms().size() == 10);
}

TEST_CASE("number_domain covers argument indices") {
  const Theory& th = itrev_theory();
  LookupTable table = LookupTable::build(th.goal);
  auto dom = table.number_domain();
  CHECK(dom == std::vector<int>{0, 1, 2, 3});
  CHECK(std::count(dom.begin(), dom.end(), 1) == 1);
  CHECK(std::count(dom.begin(), dom.end(), 2) == 1);
}

TEST_CASE("table dump format") {
  const Theory& th = itrev_theory();
  LookupTable table = LookupTable::build(th.goal);
  auto lines = table.dump_lines();
  CHECK(lines.size() == table.node_count());
  CHECK(std::find(lines.begin(), lines.end(), "[2,1]\tconstant\titrev\t0") != lines.end());
  CHECK(std::find(lines.begin(), lines.end(), "[]\tapplication\t=\t3") != lines.end());
}

TEST_CASE("table agrees with brute-force traversal on random terms") {
  Gen g(999);
  for (int i = 0; i < 150; ++i) {
    TermPtr t = random_term(g);
    LookupTable table = LookupTable::build(t);
    auto pairs = brute_enumerate(t);
    CHECK(table.node_count() == pairs.size());
    // Every enumerated path resolves with matching info.
    for (const auto& [p, sub] : pairs) {
      const NodeInfo* info = table.info_at(p);
      REQUIRE(info);
      CHECK(info->depth == static_cast<int>(p.size()));
      CHECK(info->child_count == static_cast<int>(brute_children(sub).size()));
    }
    // occurrences_of matches a direct traversal for every subterm.
    for (const auto& sub : table.all_subterms()) {
      CHECK(table.occurrences_of(sub) == brute_occurrences(t, sub));
    }
    // Equal subterms share one id; distinct subterms never do.
    for (const auto& [p1, s1] : pairs) {
      for (const auto& [p2, s2] : pairs) {
        bool same_id = table.info_at(p1)->subterm_id == table.info_at(p2)->subterm_id;
        CHECK(same_id == equal_terms(s1, s2));
      }
    }
  }
}

TEST_CASE("build is deterministic") {
  Gen g(31337);
  for (int i = 0; i < 50; ++i) {
    TermPtr t = random_term(g);
    LookupTable a = LookupTable::build(t);
    LookupTable b = LookupTable::build(t);
    CHECK(a.all_paths() == b.all_paths());
    CHECK(a.dump_lines() == b.dump_lines());
    REQUIRE(a.all_subterms().size() == b.all_subterms().size());
    for (size_t j = 0; j < a.all_subterms().size(); ++j)
      CHECK(equal_terms(a.all_subterms()[j], b.all_subterms()[j]));
  }
}
