#pragma once

// Internal integer-indexed view of a grammar, shared by the analyses. The
// counting engines each build their own structures on top of this; they do
// not share counting code.

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "sg/grammar.hpp"

namespace sg::detail {

struct IndexedGrammar {
  std::vector<std::string> terminals;
  std::vector<std::string> nts;  // sorted name order (grammar.nonterminals())
  std::unordered_map<std::string, int> term_id;
  std::unordered_map<std::string, int> nt_id;

  // rhs entries: nonterminal i stored as i, terminal t stored as ~t (< 0).
  struct Prod {
    int lhs = 0;
    std::vector<int> rhs;
    int sign = +1;
    size_t orig_index = 0;  // position in grammar.productions()
  };
  std::vector<Prod> prods;
  std::vector<std::vector<size_t>> by_lhs;
  int start = 0;

  static bool is_term_ref(int s) { return s < 0; }
  static int term_of(int s) { return ~s; }
};

IndexedGrammar index_grammar(const SignedGrammar& g);

std::vector<bool> nullable_nts(const IndexedGrammar& ig);
std::vector<bool> productive_nts(const IndexedGrammar& ig);
std::vector<bool> reachable_nts(const IndexedGrammar& ig);

// Same-length edges a -> b between nonterminals marked useful: a production
// of a contains b with every sibling a nullable nonterminal.
std::vector<std::set<int>> same_length_graph(const IndexedGrammar& ig,
                                             const std::vector<bool>& nullable,
                                             const std::vector<bool>& useful);

struct TopoResult {
  bool ok = false;
  // Dependency-first: for every edge a -> b, b appears before a.
  std::vector<int> order;
  // On failure: nodes along a cycle, first == last.
  std::vector<int> cycle;
};

// prefer_root (if >= 0 and on a cycle-bearing path) steers which witness
// cycle is reported, keeping diagnostics stable.
TopoResult topo_sort(const std::vector<std::set<int>>& edges,
                     int prefer_root = -1);

// Signed count of epsilon-yield trees per nonterminal; order must be
// dependency-first for the same-length graph (epsilon dependencies are a
// subset of it).
std::vector<std::int64_t> epsilon_counts_indexed(const IndexedGrammar& ig,
                                                 const std::vector<bool>& nullable,
                                                 const std::vector<int>& order);

}  // namespace sg::detail
