#include <string>
#include <vector>

#include "indexed.hpp"
#include "sg/analysis.hpp"
#include "sg/errors.hpp"
#include "sg/series.hpp"

namespace sg {

// Span chart over a binarized copy of the grammar. Each production
// A -> s x1 x2 ... xk (k >= 2) becomes a chain A -> s x1 C1, C1 -> x2 C2,
// ..., C(k-2) -> x(k-1) xk with the sign on the first link and the chain
// nonterminals private to the production, so binarized parse trees are in
// signed bijection with the original ones.
struct CoefficientEngine::Impl {
  std::vector<std::string> alphabet;

  struct Rule {
    int lhs = 0;
    int sign = +1;
    std::vector<int> rhs;  // size 0..2; terminal t as ~t, nonterminal i as i
  };
  int n_syms = 0;
  int start = 0;
  std::vector<Rule> rules;
  std::vector<std::vector<size_t>> by_lhs;
  std::vector<int> order;          // same-span dependency order
  std::vector<std::int64_t> eps;   // signed epsilon-tree count per symbol

  explicit Impl(const SignedGrammar& g);
  std::int64_t run(const Word& w) const;
};

CoefficientEngine::Impl::Impl(const SignedGrammar& g) : alphabet(g.terminals()) {
  auto finite = check_finite_trees(g);
  if (!finite.ok) throw InfiniteTreesError(std::move(finite.cycle));

  auto ig = detail::index_grammar(reduce(g));
  n_syms = static_cast<int>(ig.nts.size());
  start = ig.start;
  for (const auto& p : ig.prods) {
    const int k = static_cast<int>(p.rhs.size());
    if (k <= 2) {
      rules.push_back({p.lhs, p.sign, p.rhs});
      continue;
    }
    int lhs = p.lhs;
    int sign = p.sign;
    for (int i = 0; i + 2 < k; ++i) {
      int chain = n_syms++;
      rules.push_back({lhs, sign, {p.rhs[i], chain}});
      lhs = chain;
      sign = +1;
    }
    rules.push_back({lhs, sign, {p.rhs[k - 2], p.rhs[k - 1]}});
  }
  by_lhs.assign(n_syms, {});
  for (size_t ri = 0; ri < rules.size(); ++ri)
    by_lhs[rules[ri].lhs].push_back(ri);

  std::vector<bool> nullable(n_syms, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (nullable[r.lhs]) continue;
      bool all = true;
      for (int s : r.rhs)
        if (detail::IndexedGrammar::is_term_ref(s) || !nullable[s]) {
          all = false;
          break;
        }
      if (all) {
        nullable[r.lhs] = true;
        changed = true;
      }
    }
  }

  // same-span edges: lhs -> rhs nonterminal whose siblings can all vanish
  std::vector<std::set<int>> edges(n_syms);
  for (const auto& r : rules) {
    if (r.rhs.size() == 1 && !detail::IndexedGrammar::is_term_ref(r.rhs[0]))
      edges[r.lhs].insert(r.rhs[0]);
    if (r.rhs.size() == 2) {
      int x = r.rhs[0], y = r.rhs[1];
      bool x_nt = !detail::IndexedGrammar::is_term_ref(x);
      bool y_nt = !detail::IndexedGrammar::is_term_ref(y);
      if (x_nt && y_nt && nullable[y]) edges[r.lhs].insert(x);
      if (y_nt && x_nt && nullable[x]) edges[r.lhs].insert(y);
    }
  }
  auto topo = detail::topo_sort(edges, start);
  if (!topo.ok)
    throw Error("internal: binarized same-span graph is cyclic although the "
                "finite-tree check passed");
  order = std::move(topo.order);

  eps.assign(n_syms, 0);
  for (int a : order) {
    std::int64_t total = 0;
    for (size_t ri : by_lhs[a]) {
      const auto& r = rules[ri];
      std::int64_t term = r.sign;
      bool dead = false;
      for (int s : r.rhs) {
        if (detail::IndexedGrammar::is_term_ref(s)) {
          dead = true;
          break;
        }
        term = checked_mul(term, eps[s]);
      }
      if (!dead) total = checked_add(total, term);
    }
    eps[a] = total;
  }
}

std::int64_t CoefficientEngine::Impl::run(const Word& w) const {
  const int n = static_cast<int>(w.size());
  for (char c : w)
    if (static_cast<size_t>(static_cast<unsigned char>(c)) >= alphabet.size())
      throw PreconditionError("word refers to a letter outside the alphabet");
  if (n == 0) return eps[start];

  // chart[(i * (n + 1) + j) * n_syms + sym] for spans i < j
  std::vector<std::int64_t> chart(
      static_cast<size_t>(n + 1) * (n + 1) * n_syms, 0);
  auto cell = [&](int i, int j, int sym) -> std::int64_t& {
    return chart[(static_cast<size_t>(i) * (n + 1) + j) * n_syms + sym];
  };
  // value of one rhs entry over a span; epsilon spans fall back to eps
  auto value = [&](int s, int i, int j) -> std::int64_t {
    if (detail::IndexedGrammar::is_term_ref(s)) {
      int t = detail::IndexedGrammar::term_of(s);
      return (j == i + 1 && static_cast<int>(static_cast<unsigned char>(w[i])) == t)
                 ? 1
                 : 0;
    }
    return i == j ? eps[s] : cell(i, j, s);
  };

  for (int len = 1; len <= n; ++len)
    for (int i = 0; i + len <= n; ++i) {
      int j = i + len;
      for (int a : order) {
        std::int64_t total = 0;
        for (size_t ri : by_lhs[a]) {
          const auto& r = rules[ri];
          if (r.rhs.size() == 1) {
            total = checked_add(total,
                                checked_mul(r.sign, value(r.rhs[0], i, j)));
          } else if (r.rhs.size() == 2) {
            for (int m = i; m <= j; ++m) {
              std::int64_t left = value(r.rhs[0], i, m);
              if (left == 0) continue;
              std::int64_t right = value(r.rhs[1], m, j);
              if (right == 0) continue;
              total = checked_add(
                  total, checked_mul(r.sign, checked_mul(left, right)));
            }
          }
          // rhs.size() == 0 only yields epsilon spans
        }
        cell(i, j, a) = total;
      }
    }
  return cell(0, n, start);
}

CoefficientEngine::CoefficientEngine(const SignedGrammar& g)
    : impl_(new Impl(g)) {}

CoefficientEngine::~CoefficientEngine() { delete impl_; }

std::int64_t CoefficientEngine::coefficient(const Word& w) const {
  return impl_->run(w);
}

const std::vector<std::string>& CoefficientEngine::alphabet() const {
  return impl_->alphabet;
}

std::int64_t coefficient_encoded(const SignedGrammar& g, const Word& w) {
  return CoefficientEngine(g).coefficient(w);
}

std::int64_t coefficient(const SignedGrammar& g, const std::string& word_text) {
  CoefficientEngine engine(g);
  return engine.coefficient(encode_word(engine.alphabet(), word_text));
}

}  // namespace sg
