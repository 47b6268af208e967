#include "sg/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "sg/analysis.hpp"
#include "sg/errors.hpp"

namespace sg {

int tree_sign(const SignedParseTree& t, const SignedGrammar& g) {
  int sign = 1;
  if (t.production >= 0) sign = g.productions()[t.production].sign;
  for (const auto& c : t.children) sign *= tree_sign(c, g);
  return sign;
}

std::vector<Symbol> tree_yield(const SignedParseTree& t) {
  std::vector<Symbol> out;
  std::function<void(const SignedParseTree&)> walk =
      [&](const SignedParseTree& node) {
        if (node.production < 0) {
          out.push_back(node.symbol);
          return;
        }
        for (const auto& c : node.children) walk(c);
      };
  walk(t);
  return out;
}

std::string render_tree(const SignedParseTree& t, const SignedGrammar& g) {
  if (t.production < 0) return t.symbol;
  std::string s = "(" + t.symbol;
  if (g.productions()[t.production].sign < 0) s += "-";
  if (t.children.empty()) {
    s += " _";
  } else {
    for (const auto& c : t.children) s += " " + render_tree(c, g);
  }
  return s + ")";
}

namespace {

// Backtracking search for parse trees with a fixed yield. Deliberately
// self-contained: this is the oracle the series engines are tested against,
// so it builds nothing on their code paths. Trees come out in a stable
// order: productions as declared, split points left to right.
struct Enumerator {
  const SignedGrammar& g;
  const std::vector<Symbol>& letters;
  std::map<Symbol, std::vector<int>> by_lhs;
  std::int64_t cap;
  bool finite;
  int height_cap = 0;
  bool depth_hit = false;
  bool stop = false;
  std::vector<SignedParseTree> out;
  // nonterminal expansions open on the current search path, with their spans
  std::vector<std::tuple<const Symbol*, int, int>> path;

  Enumerator(const SignedGrammar& grammar, const std::vector<Symbol>& word,
             std::int64_t cap_in, bool finite_in)
      : g(grammar), letters(word), cap(cap_in), finite(finite_in) {
    const auto& prods = g.productions();
    for (size_t i = 0; i < prods.size(); ++i)
      by_lhs[prods[i].lhs].push_back(static_cast<int>(i));
  }

  void run(int height) {
    height_cap = height;
    depth_hit = false;
    stop = false;
    out.clear();
    path.clear();
    for_symbol(g.start(), 0, static_cast<int>(letters.size()), height,
               [&](SignedParseTree&& t) {
                 out.push_back(std::move(t));
                 if (static_cast<std::int64_t>(out.size()) > cap) stop = true;
               });
  }

  void for_symbol(const Symbol& sym, int i, int j, int budget,
                  const std::function<void(SignedParseTree&&)>& yield) {
    if (stop) return;
    if (g.is_terminal(sym)) {
      if (j == i + 1 && letters[i] == sym)
        yield(SignedParseTree{sym, -1, {}});
      return;
    }
    if (budget <= 0) {
      depth_hit = true;
      return;
    }
    auto it = by_lhs.find(sym);
    if (it == by_lhs.end()) return;
    if (finite) {
      // An ancestor is already expanding this symbol over this exact span.
      // Completing the inner one would pump the tree without changing the
      // yield, i.e. witness a same-length cycle, which finite grammars do
      // not have; the branch is dead, and cutting it keeps left-recursive
      // productions from descending forever through empty spans.
      for (const auto& [s, pi, pj] : path)
        if (pi == i && pj == j && *s == sym) return;
      path.emplace_back(&sym, i, j);
    }
    for (int prod : it->second) {
      const auto& p = g.productions()[prod];
      std::vector<SignedParseTree> acc;
      for_seq(p.rhs, 0, i, j, budget - 1, acc, [&] {
        yield(SignedParseTree{sym, prod, acc});
      });
      if (stop) break;
    }
    if (finite) path.pop_back();
  }

  void for_seq(const std::vector<Symbol>& rhs, size_t t, int i, int j,
               int budget, std::vector<SignedParseTree>& acc,
               const std::function<void()>& done) {
    if (stop) return;
    if (t == rhs.size()) {
      if (i == j) done();
      return;
    }
    for (int m = i; m <= j; ++m) {
      for_symbol(rhs[t], i, m, budget, [&](SignedParseTree&& tr) {
        acc.push_back(std::move(tr));
        for_seq(rhs, t + 1, m, j, budget, acc, done);
        acc.pop_back();
      });
      if (stop) return;
    }
  }
};

std::vector<Symbol> split_word_text(const std::vector<Symbol>& alphabet,
                                    const std::string& text) {
  bool spaced = std::any_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c);
  });
  std::vector<Symbol> letters;
  if (spaced) {
    std::string cur;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) letters.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) letters.push_back(cur);
    return letters;
  }
  size_t pos = 0;
  while (pos < text.size()) {
    size_t best = 0;
    for (const auto& name : alphabet)
      if (name.size() > best && text.compare(pos, name.size(), name) == 0)
        best = name.size();
    if (best == 0)
      throw ParseError("cannot read word '" + text +
                       "': no alphabet letter matches at position " +
                       std::to_string(pos + 1));
    letters.push_back(text.substr(pos, best));
    pos += best;
  }
  return letters;
}

}  // namespace

TreeEnumeration enumerate_trees_letters(const SignedGrammar& g,
                                        const std::vector<Symbol>& letters,
                                        std::int64_t cap) {
  if (cap < 0) throw PreconditionError("cap must be nonnegative");
  bool finite = check_finite_trees(g).ok;
  const int n = static_cast<int>(letters.size());
  const int nts = static_cast<int>(g.nonterminals().size());
  int height = (n + 2) * (nts + 1) + 4;

  Enumerator en(g, letters, cap, finite);
  TreeEnumeration result;
  while (true) {
    en.run(height);
    if (en.stop) {
      result.status = EnumStatus::cap_exceeded;
      en.out.resize(static_cast<size_t>(cap));
      break;
    }
    if (en.depth_hit) {
      if (finite) {
        // the analytic height bound is meant to cover every tree; retry
        // rather than silently drop one if it ever proves short
        height *= 2;
        continue;
      }
      result.status = EnumStatus::depth_limited;
      break;
    }
    result.status = EnumStatus::exhaustive;
    break;
  }
  for (const auto& t : en.out) {
    if (tree_sign(t, g) >= 0)
      ++result.positive;
    else
      ++result.negative;
  }
  result.trees = std::move(en.out);
  return result;
}

TreeEnumeration enumerate_trees(const SignedGrammar& g,
                                const std::string& word_text,
                                std::int64_t cap) {
  std::vector<Symbol> letters;
  try {
    letters = split_word_text(g.terminals(), word_text);
  } catch (const ParseError&) {
    // text that does not spell a word over the alphabet has no trees
    if (cap < 0) throw PreconditionError("cap must be nonnegative");
    return {};
  }
  return enumerate_trees_letters(g, letters, cap);
}

}  // namespace sg
