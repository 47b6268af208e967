#include <map>
#include <string>
#include <utility>
#include <vector>

#include "indexed.hpp"
#include "sg/analysis.hpp"
#include "sg/errors.hpp"
#include "sg/series.hpp"

namespace sg {

namespace {

using WordCounts = std::map<Word, std::int64_t>;

struct DpContext {
  detail::IndexedGrammar ig;
  std::vector<bool> nullable;
  std::vector<int> order;  // dependency-first along the same-length graph
  std::vector<std::int64_t> eps;
};

DpContext prepare(const SignedGrammar& g) {
  DpContext cx;
  cx.ig = detail::index_grammar(reduce(g));
  cx.nullable = detail::nullable_nts(cx.ig);
  std::vector<bool> all(cx.ig.nts.size(), true);
  auto edges = detail::same_length_graph(cx.ig, cx.nullable, all);
  auto topo = detail::topo_sort(edges, cx.ig.start);
  if (!topo.ok) {
    std::vector<std::string> names;
    names.reserve(topo.cycle.size());
    for (int id : topo.cycle) names.push_back(cx.ig.nts[id]);
    throw InfiniteTreesError(std::move(names));
  }
  cx.order = std::move(topo.order);
  cx.eps = detail::epsilon_counts_indexed(cx.ig, cx.nullable, cx.order);
  return cx;
}

void add_count(WordCounts& m, const Word& w, std::int64_t n) {
  auto [it, fresh] = m.try_emplace(w, 0);
  (void)fresh;
  it->second = checked_add(it->second, n);
  if (it->second == 0) m.erase(it);
}

}  // namespace

std::map<Symbol, std::int64_t> epsilon_counts(const SignedGrammar& g) {
  DpContext cx = prepare(g);
  std::map<Symbol, std::int64_t> out;
  for (size_t i = 0; i < cx.ig.nts.size(); ++i) out[cx.ig.nts[i]] = cx.eps[i];
  return out;
}

SignedSeries series(const SignedGrammar& g, int max_len,
                    const SeriesOptions& options) {
  if (max_len < 0) throw PreconditionError("max_len must be nonnegative");
  DpContext cx = prepare(g);
  const auto& ig = cx.ig;
  const int nts = static_cast<int>(ig.nts.size());

  // counts[a][l] for l >= 1: signed tree count per word of length l derivable
  // from a. Epsilon yields live in cx.eps. Within one length the topological
  // order makes every same-length read hit an already finished cell: a
  // production can pass all l letters to one nonterminal only when its
  // siblings derive epsilon, which is exactly when the same-length graph has
  // that edge.
  std::vector<std::vector<WordCounts>> counts(nts);
  for (auto& per_len : counts) per_len.resize(max_len + 1);
  std::int64_t stored = 0;

  for (int len = 1; len <= max_len; ++len) {
    for (int a : cx.order) {
      WordCounts result;
      for (size_t pi : ig.by_lhs[a]) {
        const auto& p = ig.prods[pi];
        const int k = static_cast<int>(p.rhs.size());

        // least letters the suffix from position i can still consume
        std::vector<int> floor_after(k + 1, 0);
        for (int i = k - 1; i >= 0; --i)
          floor_after[i] = floor_after[i + 1] +
                           (detail::IndexedGrammar::is_term_ref(p.rhs[i]) ? 1 : 0);
        if (floor_after[0] > len) continue;

        // partial[c]: signed counts of length-c prefixes after the symbols
        // folded so far
        std::vector<WordCounts> partial(len + 1);
        partial[0][Word()] = p.sign;
        for (int i = 0; i < k; ++i) {
          int s = p.rhs[i];
          std::vector<WordCounts> next(len + 1);
          for (int c = 0; c <= len; ++c) {
            if (partial[c].empty()) continue;
            if (detail::IndexedGrammar::is_term_ref(s)) {
              if (c + 1 + floor_after[i + 1] > len) continue;
              char letter = static_cast<char>(detail::IndexedGrammar::term_of(s));
              for (const auto& [w, n] : partial[c])
                add_count(next[c + 1], w + letter, n);
            } else {
              if (cx.eps[s] != 0 && c + floor_after[i + 1] <= len)
                for (const auto& [w, n] : partial[c])
                  add_count(next[c], w, checked_mul(n, cx.eps[s]));
              for (int m = 1; c + m + floor_after[i + 1] <= len; ++m) {
                const WordCounts& sub = counts[s][m];
                if (sub.empty()) continue;
                for (const auto& [w, n] : partial[c])
                  for (const auto& [u, cnt] : sub)
                    add_count(next[c + m], w + u, checked_mul(n, cnt));
              }
            }
          }
          partial = std::move(next);
        }
        for (const auto& [w, n] : partial[len]) add_count(result, w, n);
      }
      stored += static_cast<std::int64_t>(result.size());
      counts[a][len] = std::move(result);
      if (stored > options.max_stored_words)
        throw GuardError("series computation exceeded the stored-word guard (" +
                         std::to_string(options.max_stored_words) + " words)");
    }
  }

  SignedSeries out;
  out.alphabet = g.terminals();
  out.max_len = max_len;
  if (cx.eps[ig.start] != 0) out.coeffs[Word()] = cx.eps[ig.start];
  for (int len = 1; len <= max_len; ++len)
    for (const auto& [w, n] : counts[ig.start][len]) out.coeffs[w] = n;
  return out;
}

}  // namespace sg
