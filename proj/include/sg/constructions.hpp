#pragma once

#include <map>
#include <string>
#include <vector>

#include "sg/grammar.hpp"

namespace sg {

// Result of a grammar construction. Input grammars are always copied with
// their nonterminals renamed apart (suffix tagging: nonterminal N of the
// i-th input becomes N#i, bumped further on collision), so the outputs never
// capture symbols of the inputs by accident.
struct ConstructionReport {
  std::vector<SignedGrammar> outputs;
  // One map per renamed copy, in input order (for parity_split: one per
  // parity tag): original nonterminal -> renamed nonterminal.
  std::vector<std::map<Symbol, Symbol>> renamings;
  // Symbols minted for the construction itself (start symbol, marker carrier).
  std::vector<Symbol> fresh_symbols;
  // What was checked statically and which hypotheses are left to the caller
  // (run `check` on the output to discharge them).
  std::vector<std::string> notes;
};

// Right-linear grammar for all words over the alphabet: S -> x S for each
// letter, plus S -> _. Every coefficient of its series is 1.
SignedGrammar sigma_star_grammar(const std::vector<Symbol>& alphabet);

// Start productions S -> S#1 | - S#2 over the sigma-star grammar (#1) and the
// input (#2): coefficients satisfy n'(w) = 1 - n(w) exactly.
ConstructionReport complement(const SignedGrammar& g);

// S -> S#1 | S#2: coefficients add. Generates the union when the input
// languages are disjoint (deferred hypothesis).
ConstructionReport disjoint_union(const SignedGrammar& g1,
                                  const SignedGrammar& g2);

// S -> S#1 | - S#2 with the superset first: coefficients subtract. Generates
// the difference when sub's language is contained in super's (deferred).
ConstructionReport subset_minus(const SignedGrammar& super_g,
                                const SignedGrammar& sub_g);

// S -> S#1 M S#2 where M -> marker. The marker must not occur in either
// input alphabet (checked statically); it is appended to the output alphabet.
// Coefficients multiply: n(u marker v) = n1(u) * n2(v).
ConstructionReport dollar_concat(const SignedGrammar& g1,
                                 const SignedGrammar& g2,
                                 const Symbol& marker);

// S -> S#1 S#2; requires disjoint input alphabets (checked statically), which
// makes the cut between the two factors unambiguous.
ConstructionReport disjoint_concat(const SignedGrammar& g1,
                                   const SignedGrammar& g2);

// Splits g by derivation-tree sign into two all-positive grammars over
// parity-tagged nonterminals A#0 / A#1 (tag = parity of negative productions
// in the subtree). outputs[0] counts the positive trees of g (start S#0),
// outputs[1] the negative ones (start S#1); tree counts are in bijection, so
// series(even) - series(odd) = series(g).
ConstructionReport parity_split(const SignedGrammar& g);

}  // namespace sg
