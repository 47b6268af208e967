#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sg/analysis.hpp"
#include "sg/errors.hpp"
#include "sg/grammar.hpp"
#include "sg/trees.hpp"

using sg::EnumStatus;
using sg::SignedGrammar;
using sg::SignedParseTree;
using sgtest::load_fixture;

namespace {

std::vector<std::string> renders(const sg::TreeEnumeration& e,
                                 const SignedGrammar& g) {
  std::vector<std::string> out;
  for (const auto& t : e.trees) out.push_back(sg::render_tree(t, g));
  return out;
}

int count_production(const SignedParseTree& t, int production) {
  int n = t.production == production ? 1 : 0;
  for (const auto& c : t.children) n += count_production(c, production);
  return n;
}

}  // namespace

TEST_CASE("tree listings come out in declaration order with exact text") {
  auto g = load_fixture("ex1.sg");

  auto eps = sg::enumerate_trees(g, "");
  CHECK(eps.status == EnumStatus::exhaustive);
  CHECK(renders(eps, g) == std::vector<std::string>{"(S (A _))"});
  CHECK(eps.positive == 1);
  CHECK(eps.negative == 0);

  auto one = sg::enumerate_trees(g, "a");
  CHECK(one.status == EnumStatus::exhaustive);
  CHECK(renders(one, g) ==
        std::vector<std::string>{"(S (A- a (A _)))", "(S (B a))"});
  CHECK(sg::tree_sign(one.trees[0], g) == -1);
  CHECK(sg::tree_sign(one.trees[1], g) == +1);
  CHECK(one.positive == 1);
  CHECK(one.negative == 1);

  auto two = sg::enumerate_trees(g, "aa");
  CHECK(renders(two, g) ==
        std::vector<std::string>{"(S (A- a (A- a (A _))))"});
  CHECK(two.positive == 1);
  CHECK(two.negative == 0);
}

TEST_CASE("sign tallies for the alternating single-letter grammar") {
  auto g = load_fixture("ex5a.sg");
  struct Row {
    const char* word;
    std::int64_t pos, neg;
  };
  for (const Row& r : {Row{"a", 1, 0}, Row{"aa", 1, 2}, Row{"aaa", 4, 3},
                       Row{"aaaa", 7, 8}}) {
    CAPTURE(r.word);
    auto e = sg::enumerate_trees(g, r.word);
    CHECK(e.status == EnumStatus::exhaustive);
    CHECK(e.positive == r.pos);
    CHECK(e.negative == r.neg);
    CHECK(e.trees.size() == static_cast<size_t>(r.pos + r.neg));
    for (const auto& t : e.trees) {
      auto y = sg::tree_yield(t);
      CHECK(y == std::vector<std::string>(y.size(), "a"));
      CHECK(y.size() == std::string(r.word).size());
    }
  }
}

TEST_CASE("palindrome fixture trees cancel or survive as expected") {
  auto g = load_fixture("ex4.sg");
  auto aaa = sg::enumerate_trees(g, "aaa");
  CHECK(aaa.positive == 1);
  CHECK(aaa.negative == 1);
  auto ababa = sg::enumerate_trees(g, "ababa");
  CHECK(ababa.positive == 2);
  CHECK(ababa.negative == 1);
  auto y = sg::tree_yield(ababa.trees[0]);
  CHECK(y == std::vector<std::string>{"a", "b", "a", "b", "a"});
}

TEST_CASE("words outside the alphabet simply have no trees") {
  auto g = load_fixture("ex1.sg");
  auto e = sg::enumerate_trees(g, "xyz");
  CHECK(e.status == EnumStatus::exhaustive);
  CHECK(e.trees.empty());
  CHECK(e.positive == 0);
  CHECK(e.negative == 0);
  auto spaced = sg::enumerate_trees(g, "a q");
  CHECK(spaced.trees.empty());
  auto letters = sg::enumerate_trees_letters(g, {"q"});
  CHECK(letters.trees.empty());
}

TEST_CASE("spaced words reach the same enumeration") {
  auto g = load_fixture("ex1.sg");
  auto spaced = sg::enumerate_trees(g, "a a");
  auto plain = sg::enumerate_trees(g, "aa");
  CHECK(renders(spaced, g) == renders(plain, g));
  auto direct = sg::enumerate_trees_letters(g, {"a", "a"});
  CHECK(renders(direct, g) == renders(plain, g));
}

TEST_CASE("the cap truncates and is reported") {
  auto g = sg::parse_grammar("alphabet: a\nstart: S\nS -> S S | a ;\n");
  auto capped = sg::enumerate_trees(g, std::string(13, 'a'), 1000);
  CHECK(capped.status == EnumStatus::cap_exceeded);
  CHECK(capped.trees.size() == 1000);
  CHECK(capped.positive == 1000);
  CHECK(capped.negative == 0);

  auto full = sg::enumerate_trees(g, std::string(5, 'a'));
  CHECK(full.status == EnumStatus::exhaustive);
  CHECK(full.trees.size() == 14);  // the fourth Catalan number

  auto exact = sg::enumerate_trees(g, std::string(5, 'a'), 14);
  CHECK(exact.status == EnumStatus::exhaustive);
  CHECK(exact.trees.size() == 14);

  auto zero = sg::enumerate_trees(g, "a", 0);
  CHECK(zero.status == EnumStatus::cap_exceeded);
  CHECK(zero.trees.empty());
  CHECK(zero.positive == 0);
  CHECK(zero.negative == 0);

  CHECK_THROWS_WITH_AS(sg::enumerate_trees(g, "a", -1),
                       "cap must be nonnegative", sg::PreconditionError);
  CHECK_THROWS_AS(sg::enumerate_trees_letters(g, {"a"}, -1),
                  sg::PreconditionError);
}

TEST_CASE("infinite-tree grammars fall back to a bounded search") {
  auto g = load_fixture("cyclic.sg");
  CHECK_FALSE(sg::check_finite_trees(g).ok);
  auto e = sg::enumerate_trees(g, "a");
  CHECK(e.status == EnumStatus::depth_limited);
  CHECK(e.trees.size() >= 1);
  CHECK(e.negative == 0);
  for (const auto& t : e.trees)
    CHECK(sg::tree_yield(t) == std::vector<std::string>{"a"});
}

TEST_CASE("flipping one production's sign flips exactly its users") {
  auto g = load_fixture("ex5a.sg");
  auto prods = g.productions();
  const int target = 5;
  REQUIRE(prods[target] == sg::SignedProduction{"A", {"a"}, +1});
  prods[target].sign = -1;
  SignedGrammar flipped(g.terminals(), g.start(), prods);
  for (int len = 1; len <= 4; ++len) {
    auto base = sg::enumerate_trees(g, std::string(len, 'a'));
    auto flip = sg::enumerate_trees(flipped, std::string(len, 'a'));
    REQUIRE(base.trees.size() == flip.trees.size());
    for (size_t i = 0; i < base.trees.size(); ++i) {
      int uses = count_production(base.trees[i], target);
      int ratio = sg::tree_sign(base.trees[i], g) *
                  sg::tree_sign(flip.trees[i], flipped);
      CHECK(ratio == (uses % 2 == 0 ? 1 : -1));
    }
  }
}
