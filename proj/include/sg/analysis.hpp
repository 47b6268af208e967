#pragma once

#include <map>
#include <set>

#include "sg/grammar.hpp"

namespace sg {

struct GrammarAnalysis {
  std::set<Symbol> nullable;    // derives epsilon (signs ignored)
  std::set<Symbol> productive;  // derives at least one terminal string
  std::set<Symbol> reachable;   // reachable from the start symbol
  // Same-length dependency edges A -> B: some production rewrites A into a
  // phrase containing B whose other symbols are all nullable, so a subtree at
  // A can hand its whole yield to B. Restricted to nonterminals that are both
  // reachable and productive.
  std::map<Symbol, std::set<Symbol>> same_length_edges;
};

GrammarAnalysis analyze(const SignedGrammar& g);

// Removes unproductive nonterminals, then unreachable ones, together with
// every production mentioning a removed symbol. The alphabet and start symbol
// are kept as-is; production order and signs are preserved. Idempotent.
SignedGrammar reduce(const SignedGrammar& g);

struct FiniteTreeCheck {
  bool ok = false;
  // When !ok: nonterminals along a same-length cycle of the reduced grammar,
  // first == last.
  std::vector<Symbol> cycle;
};

// Every word has finitely many parse trees iff the same-length graph of the
// reduced grammar is acyclic. A cycle lets a derivation pump nodes into a
// tree without changing the yield.
FiniteTreeCheck check_finite_trees(const SignedGrammar& g);

}  // namespace sg
