#include "sg/constructions.hpp"

#include <set>
#include <string>

#include "sg/errors.hpp"

namespace sg {

namespace {

// Hands out symbol names that are new to the construction output. Seeded
// with the output alphabet so nonterminals can never shadow a letter.
struct NamePool {
  std::set<std::string> used;

  void seed(const std::vector<Symbol>& names) {
    used.insert(names.begin(), names.end());
  }

  // For symbols the construction mints itself: base, base#1, base#2, ...
  Symbol fresh(const Symbol& base) {
    if (used.insert(base).second) return base;
    for (int k = 1;; ++k) {
      Symbol cand = base + "#" + std::to_string(k);
      if (used.insert(cand).second) return cand;
    }
  }

  // For renaming input nonterminals apart: N -> N#tag, and if the input
  // already used that name the tag is appended again (N#tag#tag, ...).
  Symbol claim_tagged(const Symbol& base, int tag) {
    Symbol cand = base + "#" + std::to_string(tag);
    while (used.count(cand)) cand += "#" + std::to_string(tag);
    used.insert(cand);
    return cand;
  }
};

std::map<Symbol, Symbol> rename_map(const SignedGrammar& g, int tag,
                                    NamePool& pool) {
  std::map<Symbol, Symbol> m;
  for (const auto& nt : g.nonterminals()) m[nt] = pool.claim_tagged(nt, tag);
  return m;
}

void append_renamed(std::vector<SignedProduction>& out, const SignedGrammar& g,
                    const std::map<Symbol, Symbol>& m) {
  for (const auto& p : g.productions()) {
    SignedProduction q;
    q.lhs = m.at(p.lhs);
    q.sign = p.sign;
    q.rhs.reserve(p.rhs.size());
    for (const auto& s : p.rhs) {
      auto it = m.find(s);
      q.rhs.push_back(it != m.end() ? it->second : s);
    }
    out.push_back(std::move(q));
  }
}

std::vector<Symbol> merge_alphabets(const std::vector<Symbol>& a,
                                    const std::vector<Symbol>& b) {
  std::vector<Symbol> merged = a;
  std::set<Symbol> seen(a.begin(), a.end());
  for (const auto& x : b)
    if (seen.insert(x).second) merged.push_back(x);
  return merged;
}

void append_values(std::vector<Symbol>& out,
                   const std::map<Symbol, Symbol>& m) {
  for (const auto& [from, to] : m) {
    (void)from;
    out.push_back(to);
  }
}

// Shared shape of union and difference: two renamed copies under a fresh
// start, the second copy taken with the given sign.
ConstructionReport pair_combination(const SignedGrammar& g1,
                                    const SignedGrammar& g2, int second_sign,
                                    std::string note) {
  ConstructionReport r;
  auto alphabet = merge_alphabets(g1.terminals(), g2.terminals());
  NamePool pool;
  pool.seed(alphabet);
  Symbol start = pool.fresh("S");
  auto m1 = rename_map(g1, 1, pool);
  auto m2 = rename_map(g2, 2, pool);

  std::vector<SignedProduction> prods;
  prods.push_back({start, {m1.at(g1.start())}, +1});
  prods.push_back({start, {m2.at(g2.start())}, second_sign});
  append_renamed(prods, g1, m1);
  append_renamed(prods, g2, m2);

  std::vector<Symbol> extra{start};
  append_values(extra, m1);
  append_values(extra, m2);
  r.outputs.emplace_back(alphabet, start, std::move(prods), std::move(extra));
  r.renamings = {std::move(m1), std::move(m2)};
  r.fresh_symbols = {start};
  r.notes.push_back(std::move(note));
  return r;
}

}  // namespace

SignedGrammar sigma_star_grammar(const std::vector<Symbol>& alphabet) {
  NamePool pool;
  pool.seed(alphabet);
  Symbol s = pool.fresh("S");
  std::vector<SignedProduction> prods;
  for (const auto& x : alphabet) prods.push_back({s, {x, s}, +1});
  prods.push_back({s, {}, +1});
  return SignedGrammar(alphabet, s, std::move(prods));
}

ConstructionReport complement(const SignedGrammar& g) {
  ConstructionReport r;
  const auto& alphabet = g.terminals();
  NamePool pool;
  pool.seed(alphabet);
  Symbol start = pool.fresh("S");
  SignedGrammar star = sigma_star_grammar(alphabet);
  auto star_map = rename_map(star, 1, pool);
  auto g_map = rename_map(g, 2, pool);

  std::vector<SignedProduction> prods;
  prods.push_back({start, {star_map.at(star.start())}, +1});
  prods.push_back({start, {g_map.at(g.start())}, -1});
  append_renamed(prods, star, star_map);
  append_renamed(prods, g, g_map);

  std::vector<Symbol> extra{start};
  append_values(extra, star_map);
  append_values(extra, g_map);
  r.outputs.emplace_back(alphabet, start, std::move(prods), std::move(extra));
  r.fresh_symbols = {start, star_map.at(star.start())};
  r.renamings = {std::move(g_map)};
  r.notes.push_back(
      "every coefficient satisfies n'(w) = 1 - n(w); the output lists the "
      "complement language exactly when the input lists a language (run "
      "check on the input or output to confirm)");
  return r;
}

ConstructionReport disjoint_union(const SignedGrammar& g1,
                                  const SignedGrammar& g2) {
  return pair_combination(
      g1, g2, +1,
      "coefficients add; the output lists the union exactly when both inputs "
      "list languages and those languages are disjoint (run check)");
}

ConstructionReport subset_minus(const SignedGrammar& super_g,
                                const SignedGrammar& sub_g) {
  return pair_combination(
      super_g, sub_g, -1,
      "coefficients subtract (first input minus second); the output lists "
      "the difference exactly when both inputs list languages and the "
      "second is contained in the first (run check)");
}

ConstructionReport dollar_concat(const SignedGrammar& g1,
                                 const SignedGrammar& g2,
                                 const Symbol& marker) {
  if (!valid_symbol_name(marker))
    throw PreconditionError("marker '" + marker +
                            "' is not a usable symbol name");
  for (const auto* g : {&g1, &g2})
    if (g->is_terminal(marker))
      throw PreconditionError("marker '" + marker +
                              "' already occurs in an input alphabet");

  ConstructionReport r;
  auto alphabet = merge_alphabets(g1.terminals(), g2.terminals());
  alphabet.push_back(marker);
  NamePool pool;
  pool.seed(alphabet);
  Symbol start = pool.fresh("S");
  Symbol mid = pool.fresh("M");
  auto m1 = rename_map(g1, 1, pool);
  auto m2 = rename_map(g2, 2, pool);

  std::vector<SignedProduction> prods;
  prods.push_back({start, {m1.at(g1.start()), mid, m2.at(g2.start())}, +1});
  prods.push_back({mid, {marker}, +1});
  append_renamed(prods, g1, m1);
  append_renamed(prods, g2, m2);

  std::vector<Symbol> extra{start, mid};
  append_values(extra, m1);
  append_values(extra, m2);
  r.outputs.emplace_back(alphabet, start, std::move(prods), std::move(extra));
  r.renamings = {std::move(m1), std::move(m2)};
  r.fresh_symbols = {start, mid};
  r.notes.push_back(
      "marker '" + marker +
      "' occurs in neither input alphabet (checked); every output word "
      "splits uniquely at the marker, so n(u " + marker +
      " v) = n1(u) * n2(v) unconditionally");
  return r;
}

ConstructionReport disjoint_concat(const SignedGrammar& g1,
                                   const SignedGrammar& g2) {
  for (const auto& x : g2.terminals())
    if (g1.is_terminal(x))
      throw PreconditionError("input alphabets share the letter '" + x + "'");

  ConstructionReport r;
  auto alphabet = merge_alphabets(g1.terminals(), g2.terminals());
  NamePool pool;
  pool.seed(alphabet);
  Symbol start = pool.fresh("S");
  auto m1 = rename_map(g1, 1, pool);
  auto m2 = rename_map(g2, 2, pool);

  std::vector<SignedProduction> prods;
  prods.push_back({start, {m1.at(g1.start()), m2.at(g2.start())}, +1});
  append_renamed(prods, g1, m1);
  append_renamed(prods, g2, m2);

  std::vector<Symbol> extra{start};
  append_values(extra, m1);
  append_values(extra, m2);
  r.outputs.emplace_back(alphabet, start, std::move(prods), std::move(extra));
  r.renamings = {std::move(m1), std::move(m2)};
  r.fresh_symbols = {start};
  r.notes.push_back(
      "input alphabets are disjoint (checked), so every output word cuts "
      "uniquely between the two factors and coefficients multiply");
  return r;
}

ConstructionReport parity_split(const SignedGrammar& g) {
  ConstructionReport r;
  const auto& alphabet = g.terminals();
  NamePool pool;
  pool.seed(alphabet);
  std::map<Symbol, Symbol> even, odd;
  for (const auto& nt : g.nonterminals()) {
    even[nt] = pool.claim_tagged(nt, 0);
    odd[nt] = pool.claim_tagged(nt, 1);
  }

  std::vector<SignedProduction> prods;
  for (const auto& p : g.productions()) {
    std::vector<size_t> nt_at;
    for (size_t i = 0; i < p.rhs.size(); ++i)
      if (g.is_nonterminal(p.rhs[i])) nt_at.push_back(i);
    if (nt_at.size() > 20)
      throw GuardError(
          "parity split over a production with more than 20 nonterminal "
          "occurrences");
    for (unsigned long mask = 0; mask < (1UL << nt_at.size()); ++mask) {
      int total = p.sign < 0 ? 1 : 0;
      SignedProduction q;
      q.sign = +1;
      q.rhs = p.rhs;
      for (size_t b = 0; b < nt_at.size(); ++b) {
        int parity = static_cast<int>((mask >> b) & 1);
        total ^= parity;
        const Symbol& child = p.rhs[nt_at[b]];
        q.rhs[nt_at[b]] = parity ? odd.at(child) : even.at(child);
      }
      q.lhs = total ? odd.at(p.lhs) : even.at(p.lhs);
      prods.push_back(std::move(q));
    }
  }

  std::vector<Symbol> extra;
  append_values(extra, even);
  append_values(extra, odd);
  r.outputs.emplace_back(alphabet, even.at(g.start()), prods, extra);
  r.outputs.emplace_back(alphabet, odd.at(g.start()), std::move(prods),
                         std::move(extra));
  r.renamings = {std::move(even), std::move(odd)};
  r.notes.push_back(
      "both outputs are all-positive and share one production set; trees of "
      "the even start minus trees of the odd start recover the input's "
      "signed counts word by word; outputs are generally not reduced");
  return r;
}

}  // namespace sg
