#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sg/cartier_foata.hpp"
#include "sg/errors.hpp"
#include "sg/grammar.hpp"
#include "sg/series.hpp"

using sg::CommutationMatrix;
using sg::Word;
using sgtest::CoeffsByText;
using sgtest::decoded;
using sgtest::load_fixture;
using sgtest::load_matrix;
using sgtest::wrd;

namespace {

std::vector<std::vector<std::string>> member_lists(
    const std::vector<sg::CommutingSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(s.members);
  return out;
}

}  // namespace

TEST_CASE("matrix files declare a symmetric relation with unit diagonal") {
  auto m = load_matrix("two-commuting.cm");
  CHECK(m.alphabet == std::vector<std::string>{"a", "b"});
  CHECK(m.size() == 2);
  CHECK(m.commute(0, 0));
  CHECK(m.commute(1, 1));
  CHECK(m.commute(0, 1));
  CHECK(m.commute(1, 0));
  CHECK(m.letter_index("a") == 0);
  CHECK(m.letter_index("b") == 1);
  CHECK(m.letter_index("c") == -1);

  auto chain = load_matrix("abc-chain.cm");
  CHECK(chain.commute(0, 1));
  CHECK(chain.commute(0, 2));
  CHECK_FALSE(chain.commute(1, 2));

  auto id = load_matrix("identity-ab.cm");
  CHECK_FALSE(id.commute(0, 1));
  CHECK(id.commute(0, 0));
}

TEST_CASE("matrix construction rejects bad input") {
  using Pairs = std::vector<std::pair<std::string, std::string>>;
  CHECK_THROWS_WITH_AS(
      CommutationMatrix::from_pairs({"a", "b"}, Pairs{{"a", "c"}}),
      "letter 'c' is not declared", sg::ValidationError);
  CHECK_THROWS_WITH_AS(
      CommutationMatrix::from_pairs({"a", "b"}, Pairs{{"a", "a"}}),
      "commuting pair must name two distinct letters", sg::ValidationError);
  CHECK_THROWS_WITH_AS(
      CommutationMatrix::from_pairs({"a", "b"},
                                    Pairs{{"a", "b"}, {"b", "a"}}),
      "commuting pair b a repeated", sg::ValidationError);
  CHECK_THROWS_WITH_AS(CommutationMatrix::from_pairs({"a", "a"}, Pairs{}),
                       "duplicate letter 'a'", sg::ValidationError);
  CHECK_THROWS_AS(CommutationMatrix::from_pairs({"->"}, Pairs{}),
                  sg::ValidationError);

  CHECK_THROWS_AS(sg::parse_matrix("alphabet: a b\ncommute: a\n"),
                  sg::ParseError);
  CHECK_THROWS_AS(sg::parse_matrix("alphabet: a b\ncommute: a c\n"),
                  sg::ParseError);
  CHECK_THROWS_AS(
      sg::parse_matrix("alphabet: a b\ncommute: a b\ncommute: b a\n"),
      sg::ParseError);
  CHECK_THROWS_AS(sg::parse_matrix("commute: a b\n"), sg::ParseError);
}

TEST_CASE("commuting sets are the cliques, smallest first") {
  CHECK(member_lists(sg::commuting_sets(load_matrix("identity-ab.cm"))) ==
        std::vector<std::vector<std::string>>{{"a"}, {"b"}});
  CHECK(member_lists(sg::commuting_sets(load_matrix("two-commuting.cm"))) ==
        std::vector<std::vector<std::string>>{{"a"}, {"b"}, {"a", "b"}});
  CHECK(member_lists(sg::commuting_sets(load_matrix("abc-chain.cm"))) ==
        std::vector<std::vector<std::string>>{
            {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}});
  auto full = sg::commuting_sets(load_matrix("abc-full.cm"));
  CHECK(member_lists(full) ==
        std::vector<std::vector<std::string>>{{"a"},
                                              {"b"},
                                              {"c"},
                                              {"a", "b"},
                                              {"a", "c"},
                                              {"b", "c"},
                                              {"a", "b", "c"}});
  CHECK(full.back().word == std::vector<std::string>{"c", "b", "a"});
}

TEST_CASE("the alternating polynomial signs sets by parity") {
  auto p = sg::cf_polynomial(load_matrix("two-commuting.cm"));
  CHECK(p.max_len == 2);
  CHECK(decoded(p) == CoeffsByText{{"a", 1}, {"b", 1}, {"ba", -1}});
  auto q = sg::cf_polynomial(load_matrix("abc-full.cm"));
  CHECK(q.max_len == 3);
  CHECK(decoded(q) == CoeffsByText{{"a", 1},
                                   {"b", 1},
                                   {"c", 1},
                                   {"ba", -1},
                                   {"ca", -1},
                                   {"cb", -1},
                                   {"cba", 1}});
  CHECK(decoded(sg::cf_polynomial(load_matrix("identity-ab.cm"))) ==
        CoeffsByText{{"a", 1}, {"b", 1}});
}

TEST_CASE("the expansion series matches the hand-built grammar for a*b*") {
  auto s = sg::cf_series(load_matrix("two-commuting.cm"), 4);
  auto direct = sg::series(load_fixture("ex2.sg"), 4);
  CHECK(s.alphabet == direct.alphabet);
  CHECK(s.coeffs == direct.coeffs);
}

TEST_CASE("with nothing commuting every word survives") {
  auto s = sg::cf_series(load_matrix("identity-ab.cm"), 3);
  CHECK(s.coeffs.size() == 15);
  for (const auto& [w, n] : s.coeffs) CHECK(n == 1);
}

TEST_CASE("expansion truncations are coherent") {
  auto m = load_matrix("abc-chain.cm");
  auto s4 = sg::cf_series(m, 4);
  auto s2 = sg::cf_series(m, 2);
  for (const auto& [w, n] : s2.coeffs) CHECK(s4.at(w) == n);
  for (const auto& [w, n] : s4.coeffs)
    if (static_cast<int>(w.size()) <= 2) CHECK(s2.at(w) == n);
  CHECK_THROWS_AS(sg::cf_series(m, -1), sg::PreconditionError);
}

TEST_CASE("the right-linear grammar renders exactly as documented") {
  CHECK(sg::render_grammar(sg::cf_grammar(load_matrix("two-commuting.cm"))) ==
        "alphabet: a b\nstart: S\nS -> _ | a S | b S | - b a S ;\n");
  auto one = CommutationMatrix::from_pairs({"a"}, {});
  CHECK(sg::render_grammar(sg::cf_grammar(one)) ==
        "alphabet: a\nstart: S\nS -> _ | a S ;\n");
  CHECK(sg::render_grammar(sg::cf_grammar(load_matrix("abc-full.cm"))) ==
        "alphabet: a b c\nstart: S\nS -> _ | a S | b S | c S | - b a S | - c "
        "a S | - c b S | c b a S ;\n");
}

TEST_CASE("the grammar's start symbol dodges letters named S") {
  auto m = CommutationMatrix::from_pairs({"S", "x"}, {});
  auto g = sg::cf_grammar(m);
  CHECK(g.start() == "S#1");
  CHECK(g.terminals() == std::vector<std::string>{"S", "x"});
  auto s = sg::series(g, 2);
  CHECK(s.coeffs.size() == 7);
}

TEST_CASE("trace classes group words reachable by adjacent swaps") {
  auto tp = sg::trace_classes(load_matrix("two-commuting.cm"), 2);
  CHECK(tp.max_len == 2);
  REQUIRE(tp.by_length.size() == 3);
  CHECK(tp.by_length[0].size() == 1);
  CHECK(tp.by_length[0][0].words == std::vector<Word>{Word{}});
  CHECK(tp.by_length[1].size() == 2);
  REQUIRE(tp.by_length[2].size() == 3);
  CHECK(tp.by_length[2][0].words == std::vector<Word>{wrd({0, 0})});
  CHECK(tp.by_length[2][1].words ==
        std::vector<Word>{wrd({0, 1}), wrd({1, 0})});
  CHECK(tp.by_length[2][1].least == wrd({0, 1}));
  CHECK(tp.by_length[2][2].words == std::vector<Word>{wrd({1, 1})});
  CHECK(tp.class_count() == 6);
}

TEST_CASE("the chain matrix merges cab, cba, and acb") {
  auto m = load_matrix("abc-chain.cm");
  auto tp = sg::trace_classes(m, 3);
  const Word cab = wrd({2, 0, 1});
  bool found = false;
  for (const auto& cls : tp.by_length[3]) {
    if (std::find(cls.words.begin(), cls.words.end(), cab) ==
        cls.words.end())
      continue;
    found = true;
    CHECK(cls.words ==
          std::vector<Word>{wrd({0, 2, 1}), wrd({2, 0, 1}), wrd({2, 1, 0})});
    CHECK(cls.least == wrd({0, 2, 1}));
  }
  CHECK(found);
}

TEST_CASE("with nothing commuting every class is a singleton") {
  auto tp = sg::trace_classes(load_matrix("identity-ab.cm"), 3);
  CHECK(tp.class_count() == 15);
  for (const auto& classes : tp.by_length)
    for (const auto& cls : classes) CHECK(cls.words.size() == 1);
}

TEST_CASE("trace enumeration guards against exponential blowups") {
  CHECK_THROWS_WITH_AS(sg::trace_classes(load_matrix("abc-chain.cm"), 13),
                       "trace-class enumeration needs |alphabet|^max_len <= "
                       "10^6",
                       sg::GuardError);
  CHECK_THROWS_AS(sg::trace_classes(load_matrix("abc-chain.cm"), -1),
                  sg::PreconditionError);
}

TEST_CASE("verification passes on all matrix fixtures") {
  for (const auto& name : {"two-commuting.cm", "abc-chain.cm", "abc-full.cm",
                           "identity-ab.cm"}) {
    CAPTURE(name);
    auto m = load_matrix(name);
    auto v = sg::verify_cf(m, 5);
    CHECK(v.max_len == 5);
    CHECK(v.coefficients_01.name == "coefficients01");
    CHECK(v.one_per_class.name == "onePerClass");
    CHECK(v.grammar_route.name == "grammarRoute");
    CHECK(v.coefficients_01.pass);
    CHECK(v.one_per_class.pass);
    CHECK(v.grammar_route.pass);
    CHECK(v.all_pass());
    CHECK(v.survivors_are_minima);
    CHECK(v.minima_mismatches.empty());
    CHECK(v.class_count == v.survivor_count);

    // survivors per length match the class counts per length
    auto s = sg::cf_series(m, 5);
    auto tp = sg::trace_classes(m, 5);
    std::map<size_t, std::int64_t> survivors;
    for (const auto& [w, n] : s.coeffs) {
      CHECK(n == 1);
      ++survivors[w.size()];
    }
    for (size_t len = 0; len < tp.by_length.size(); ++len) {
      CAPTURE(len);
      CHECK(survivors[len] ==
            static_cast<std::int64_t>(tp.by_length[len].size()));
    }
  }
}

TEST_CASE("verification is stable under relabeling the alphabet") {
  // the two structural checks must hold no matter how letters are ordered
  for (const auto& name : {"abc-chain.cm", "abc-full.cm"}) {
    CAPTURE(name);
    auto base = load_matrix(name);
    std::vector<int> perm = {0, 1, 2};
    do {
      std::vector<std::string> alphabet;
      for (int i : perm) alphabet.push_back(base.alphabet[i]);
      std::vector<std::pair<std::string, std::string>> pairs;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (base.commute(i, j))
            pairs.emplace_back(base.alphabet[i], base.alphabet[j]);
      auto m = CommutationMatrix::from_pairs(alphabet, pairs);
      auto v = sg::verify_cf(m, 4);
      CHECK(v.coefficients_01.pass);
      CHECK(v.one_per_class.pass);
      CHECK(v.grammar_route.pass);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}
