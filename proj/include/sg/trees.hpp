#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sg/grammar.hpp"

namespace sg {

// A parse tree node. Internal nodes carry the index of the production they
// apply (an epsilon production gives an internal node with no children);
// leaves are terminal occurrences with production == -1.
struct SignedParseTree {
  Symbol symbol;
  int production = -1;
  std::vector<SignedParseTree> children;
};

// Product of the production signs used in the tree.
int tree_sign(const SignedParseTree& t, const SignedGrammar& g);
// Terminal leaves left to right.
std::vector<Symbol> tree_yield(const SignedParseTree& t);
// Bracketed form, e.g. "(S (A- a (A _)))": "-" marks a negative production,
// "_" an epsilon expansion.
std::string render_tree(const SignedParseTree& t, const SignedGrammar& g);

enum class EnumStatus {
  exhaustive,     // every parse tree for the word is listed
  cap_exceeded,   // more trees exist; output truncated at the cap
  depth_limited,  // grammar fails check_finite_trees; search was bounded
};

struct TreeEnumeration {
  std::vector<SignedParseTree> trees;
  EnumStatus status = EnumStatus::exhaustive;
  std::int64_t positive = 0;  // sign tallies over the returned trees
  std::int64_t negative = 0;
};

// Exhaustively searches parse trees of g whose yield is the given word. This
// path shares nothing with the series engines; it is the oracle they are
// tested against. When the grammar passes check_finite_trees the result is
// complete (tree height is provably bounded for a fixed yield); otherwise
// the search is depth-bounded and says so. A word using letters outside the
// alphabet has no trees.
TreeEnumeration enumerate_trees(const SignedGrammar& g,
                                const std::string& word_text,
                                std::int64_t cap = 100000);
TreeEnumeration enumerate_trees_letters(const SignedGrammar& g,
                                        const std::vector<Symbol>& letters,
                                        std::int64_t cap = 100000);

}  // namespace sg
