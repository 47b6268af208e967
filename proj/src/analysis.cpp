#include "sg/analysis.hpp"

#include "indexed.hpp"

namespace sg {

GrammarAnalysis analyze(const SignedGrammar& g) {
  auto ig = detail::index_grammar(g);
  auto nullable = detail::nullable_nts(ig);
  auto productive = detail::productive_nts(ig);
  auto reachable = detail::reachable_nts(ig);

  GrammarAnalysis a;
  for (size_t i = 0; i < ig.nts.size(); ++i) {
    if (nullable[i]) a.nullable.insert(ig.nts[i]);
    if (productive[i]) a.productive.insert(ig.nts[i]);
    if (reachable[i]) a.reachable.insert(ig.nts[i]);
  }
  std::vector<bool> useful(ig.nts.size());
  for (size_t i = 0; i < ig.nts.size(); ++i)
    useful[i] = productive[i] && reachable[i];
  auto edges = detail::same_length_graph(ig, nullable, useful);
  for (size_t a_id = 0; a_id < edges.size(); ++a_id)
    for (int b : edges[a_id])
      a.same_length_edges[ig.nts[a_id]].insert(ig.nts[b]);
  return a;
}

SignedGrammar reduce(const SignedGrammar& g) {
  auto ig = detail::index_grammar(g);
  auto productive = detail::productive_nts(ig);

  // reachability over productions whose symbols are all productive
  std::vector<bool> reachable(ig.nts.size(), false);
  std::vector<int> stack;
  reachable[ig.start] = true;
  stack.push_back(ig.start);
  auto prod_alive = [&](const detail::IndexedGrammar::Prod& p) {
    for (int s : p.rhs)
      if (!detail::IndexedGrammar::is_term_ref(s) && !productive[s])
        return false;
    return true;
  };
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (size_t pi : ig.by_lhs[a]) {
      const auto& p = ig.prods[pi];
      if (!prod_alive(p)) continue;
      for (int s : p.rhs)
        if (!detail::IndexedGrammar::is_term_ref(s) && !reachable[s]) {
          reachable[s] = true;
          stack.push_back(s);
        }
    }
  }

  std::vector<SignedProduction> kept;
  const auto& orig = g.productions();
  for (size_t i = 0; i < orig.size(); ++i) {
    const auto& q = ig.prods[i];
    if (!reachable[q.lhs] || !productive[q.lhs] || !prod_alive(q)) continue;
    kept.push_back(orig[i]);
  }
  return SignedGrammar(g.terminals(), g.start(), std::move(kept));
}

FiniteTreeCheck check_finite_trees(const SignedGrammar& g) {
  SignedGrammar r = reduce(g);
  auto ig = detail::index_grammar(r);
  auto nullable = detail::nullable_nts(ig);
  std::vector<bool> all(ig.nts.size(), true);
  auto edges = detail::same_length_graph(ig, nullable, all);
  auto topo = detail::topo_sort(edges, ig.start);
  FiniteTreeCheck out;
  out.ok = topo.ok;
  for (int id : topo.cycle) out.cycle.push_back(ig.nts[id]);
  return out;
}

}  // namespace sg
