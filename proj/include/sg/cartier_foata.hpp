#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sg/grammar.hpp"
#include "sg/series.hpp"

namespace sg {

// Symmetric commutation relation on an ordered alphabet. Letters always
// commute with themselves.
struct CommutationMatrix {
  std::vector<Symbol> alphabet;
  std::vector<std::vector<bool>> commutes;

  static CommutationMatrix from_pairs(
      std::vector<Symbol> alphabet,
      const std::vector<std::pair<Symbol, Symbol>>& pairs);

  int letter_index(const Symbol& s) const;
  bool commute(int i, int j) const { return commutes[i][j]; }
  size_t size() const { return alphabet.size(); }
};

// Parses the matrix file format:
//
//   alphabet: a b c
//   commute: a b
//   commute: a c
//
// Pairs must name two distinct declared letters; symmetry and the diagonal
// are implicit. Repeating a pair (in either order) is an error.
CommutationMatrix parse_matrix(const std::string& text);

// A nonempty set of pairwise commuting letters.
struct CommutingSet {
  std::vector<Symbol> members;  // increasing declared order
  std::vector<Symbol> word;     // representative spelling, see commuting_sets
};

// All nonempty pairwise-commuting subsets (cliques of the commutation graph),
// ordered by size and then by members. Singletons always qualify. Each set's
// word spells its members in decreasing order of one global letter order: the
// declared order when that is safe, otherwise the first safe permutation of
// the letters. An order is safe when no letter sits between two letters that
// both commute with it but not with each other; the expansion in cf_series
// only keeps 0/1 coefficients under a safe order.
std::vector<CommutingSet> commuting_sets(const CommutationMatrix& m);

// The alternating clique polynomial: each commuting set F contributes its
// representative word with coefficient (-1)^(|F|+1), i.e. singletons enter
// positively and each additional commuting letter flips the sign.
SignedSeries cf_polynomial(const CommutationMatrix& m);

// Star of the polynomial by repeated convolution, truncated at max_len.
// Under a safe representative order (one always exists for alphabets of up
// to four letters) every coefficient lands in {0, 1}, picking one canonical
// representative per trace (commutation) class; verify_cf checks this
// instead of assuming it.
SignedSeries cf_series(const CommutationMatrix& m, int max_len);

// The same expansion as a right-linear signed grammar:
// S -> _ | w(F) S for every commuting set F, with the polynomial's signs.
SignedGrammar cf_grammar(const CommutationMatrix& m);

struct TraceClass {
  std::vector<Word> words;  // letter-order sorted
  Word least;
};

struct TracePartition {
  int max_len = 0;
  // by_length[n]: classes of words of length n, ordered by least member.
  std::vector<std::vector<TraceClass>> by_length;

  std::int64_t class_count() const;
};

// Partitions every word of length <= max_len into equivalence classes under
// swapping adjacent commuting letters (closure by breadth-first search).
// Guard: |alphabet|^max_len must stay <= 10^6.
TracePartition trace_classes(const CommutationMatrix& m, int max_len);

struct CfCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // first witness on failure, summary on pass
};

struct CfVerification {
  int max_len = 0;
  CfCheck coefficients_01;   // every cf_series coefficient is 0 or 1
  CfCheck one_per_class;     // exactly one surviving word per trace class
  CfCheck grammar_route;     // cf_series == series(cf_grammar)
  // Observation, not asserted: whether every survivor is its class's
  // lexicographic minimum under the declared letter order.
  bool survivors_are_minima = false;
  std::vector<std::string> minima_mismatches;
  std::int64_t class_count = 0;
  std::int64_t survivor_count = 0;

  bool all_pass() const {
    return coefficients_01.pass && one_per_class.pass && grammar_route.pass;
  }
};

CfVerification verify_cf(const CommutationMatrix& m, int max_len);

}  // namespace sg
