#include "indexed.hpp"

#include <algorithm>

#include "sg/errors.hpp"
#include "sg/series.hpp"

namespace sg::detail {

IndexedGrammar index_grammar(const SignedGrammar& g) {
  IndexedGrammar ig;
  ig.terminals = g.terminals();
  ig.nts = g.nonterminals();
  for (size_t i = 0; i < ig.terminals.size(); ++i)
    ig.term_id[ig.terminals[i]] = static_cast<int>(i);
  for (size_t i = 0; i < ig.nts.size(); ++i)
    ig.nt_id[ig.nts[i]] = static_cast<int>(i);
  ig.by_lhs.resize(ig.nts.size());
  const auto& prods = g.productions();
  ig.prods.reserve(prods.size());
  for (size_t pi = 0; pi < prods.size(); ++pi) {
    const auto& p = prods[pi];
    IndexedGrammar::Prod q;
    q.lhs = ig.nt_id.at(p.lhs);
    q.sign = p.sign;
    q.orig_index = pi;
    q.rhs.reserve(p.rhs.size());
    for (const auto& s : p.rhs) {
      auto t = ig.term_id.find(s);
      if (t != ig.term_id.end())
        q.rhs.push_back(~t->second);
      else
        q.rhs.push_back(ig.nt_id.at(s));
    }
    ig.by_lhs[q.lhs].push_back(ig.prods.size());
    ig.prods.push_back(std::move(q));
  }
  ig.start = ig.nt_id.at(g.start());
  return ig;
}

std::vector<bool> nullable_nts(const IndexedGrammar& ig) {
  std::vector<bool> nullable(ig.nts.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : ig.prods) {
      if (nullable[p.lhs]) continue;
      bool all = true;
      for (int s : p.rhs)
        if (IndexedGrammar::is_term_ref(s) || !nullable[s]) {
          all = false;
          break;
        }
      if (all) {
        nullable[p.lhs] = true;
        changed = true;
      }
    }
  }
  return nullable;
}

std::vector<bool> productive_nts(const IndexedGrammar& ig) {
  std::vector<bool> productive(ig.nts.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : ig.prods) {
      if (productive[p.lhs]) continue;
      bool all = true;
      for (int s : p.rhs)
        if (!IndexedGrammar::is_term_ref(s) && !productive[s]) {
          all = false;
          break;
        }
      if (all) {
        productive[p.lhs] = true;
        changed = true;
      }
    }
  }
  return productive;
}

std::vector<bool> reachable_nts(const IndexedGrammar& ig) {
  std::vector<bool> reachable(ig.nts.size(), false);
  std::vector<int> stack{ig.start};
  reachable[ig.start] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (size_t pi : ig.by_lhs[a])
      for (int s : ig.prods[pi].rhs)
        if (!IndexedGrammar::is_term_ref(s) && !reachable[s]) {
          reachable[s] = true;
          stack.push_back(s);
        }
  }
  return reachable;
}

std::vector<std::set<int>> same_length_graph(const IndexedGrammar& ig,
                                             const std::vector<bool>& nullable,
                                             const std::vector<bool>& useful) {
  std::vector<std::set<int>> edges(ig.nts.size());
  for (const auto& p : ig.prods) {
    if (!useful[p.lhs]) continue;
    for (size_t i = 0; i < p.rhs.size(); ++i) {
      int b = p.rhs[i];
      if (IndexedGrammar::is_term_ref(b) || !useful[b]) continue;
      bool context_nullable = true;
      for (size_t j = 0; j < p.rhs.size(); ++j) {
        if (j == i) continue;
        int s = p.rhs[j];
        if (IndexedGrammar::is_term_ref(s) || !nullable[s]) {
          context_nullable = false;
          break;
        }
      }
      if (context_nullable) edges[p.lhs].insert(b);
    }
  }
  return edges;
}

TopoResult topo_sort(const std::vector<std::set<int>>& edges,
                     int prefer_root) {
  const int n = static_cast<int>(edges.size());
  TopoResult r;
  std::vector<int> outdeg(n, 0);
  std::vector<std::vector<int>> rev(n);
  for (int a = 0; a < n; ++a) {
    outdeg[a] = static_cast<int>(edges[a].size());
    for (int b : edges[a]) rev[b].push_back(a);
  }
  std::set<int> ready;
  for (int i = 0; i < n; ++i)
    if (outdeg[i] == 0) ready.insert(i);
  while (!ready.empty()) {
    int b = *ready.begin();
    ready.erase(ready.begin());
    r.order.push_back(b);
    for (int a : rev[b])
      if (--outdeg[a] == 0) ready.insert(a);
  }
  if (static_cast<int>(r.order.size()) == n) {
    r.ok = true;
    return r;
  }

  // extract a witness cycle among the remaining nodes by stack-marked dfs
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> path;
  std::vector<bool> remaining(n, false);
  for (int i = 0; i < n; ++i)
    if (outdeg[i] > 0) remaining[i] = true;

  std::vector<int> roots;
  if (prefer_root >= 0 && prefer_root < n && remaining[prefer_root])
    roots.push_back(prefer_root);
  for (int i = 0; i < n; ++i)
    if (remaining[i]) roots.push_back(i);

  auto dfs = [&](auto&& self, int a) -> bool {
    state[a] = 1;
    path.push_back(a);
    for (int b : edges[a]) {
      if (!remaining[b]) continue;
      if (state[b] == 1) {
        auto it = std::find(path.begin(), path.end(), b);
        r.cycle.assign(it, path.end());
        r.cycle.push_back(b);
        return true;
      }
      if (state[b] == 0 && self(self, b)) return true;
    }
    path.pop_back();
    state[a] = 2;
    return false;
  };
  for (int root : roots)
    if (state[root] == 0 && dfs(dfs, root)) break;
  return r;
}

std::vector<std::int64_t> epsilon_counts_indexed(
    const IndexedGrammar& ig, const std::vector<bool>& nullable,
    const std::vector<int>& order) {
  std::vector<std::int64_t> e(ig.nts.size(), 0);
  for (int a : order) {
    std::int64_t total = 0;
    for (size_t pi : ig.by_lhs[a]) {
      const auto& p = ig.prods[pi];
      bool eligible = true;
      for (int s : p.rhs)
        if (IndexedGrammar::is_term_ref(s) || !nullable[s]) {
          eligible = false;
          break;
        }
      if (!eligible) continue;
      std::int64_t term = p.sign;
      for (int s : p.rhs) term = checked_mul(term, e[s]);
      total = checked_add(total, term);
    }
    e[a] = total;
  }
  return e;
}

}  // namespace sg::detail
