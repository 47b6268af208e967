#include "sg/cartier_foata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "sg/errors.hpp"

namespace sg {

namespace {

struct MatrixToken {
  std::string text;
  int line = 0;
  int col = 0;
};

// Whitespace-separated tokens; '#' opens a comment only when it starts a
// token, matching the grammar file format.
std::vector<MatrixToken> tokenize_matrix(const std::string& text) {
  std::vector<MatrixToken> tokens;
  int line = 1, col = 1;
  std::string cur;
  int cur_line = 0, cur_col = 0;
  bool comment = false;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back({cur, cur_line, cur_col});
    cur.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      comment = false;
      ++line;
      col = 1;
      continue;
    }
    if (comment) {
      ++col;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
      ++col;
      continue;
    }
    if (cur.empty()) {
      if (c == '#') {
        comment = true;
        ++col;
        continue;
      }
      cur_line = line;
      cur_col = col;
    }
    cur += c;
    ++col;
  }
  flush();
  return tokens;
}

// Slot assignment for spelling commuting sets as words: letter i goes to
// slot pos[i] and every set is read out from the highest slot down. Reading
// all sets by one global order is what lets the star expansion cancel down
// to 0/1 coefficients, but the order has to keep every letter c outside the
// stretch between any two letters x, y that commute with c and not with each
// other. Put c between them and the word "x c y" (slots decreasing) picks up
// the factorizations [x][c][y], -[xc][y] and -[x][cy] with nothing left to
// cancel the surplus, so its coefficient lands at -1. The declared order is
// kept whenever it is already safe, which also keeps the spelled words
// stable for the common relations. Otherwise the first safe permutation in
// lexicographic order takes over. Some relations admit no safe order at all
// (a chordless 5-cycle is the smallest) and past 8 letters the search is too
// wide; both cases keep the declared order and verify_cf reports whatever
// word-level failures follow.
std::vector<int> representative_positions(const CommutationMatrix& m) {
  const int n = static_cast<int>(m.size());
  auto safe = [&](const std::vector<int>& pos) {
    for (int c = 0; c < n; ++c)
      for (int x = 0; x < n; ++x) {
        if (x == c || !m.commute(c, x)) continue;
        for (int y = x + 1; y < n; ++y) {
          if (y == c || !m.commute(c, y) || m.commute(x, y)) continue;
          auto [lo, hi] = std::minmax(pos[x], pos[y]);
          if (lo < pos[c] && pos[c] < hi) return false;
        }
      }
    return true;
  };
  std::vector<int> declared(n);
  std::iota(declared.begin(), declared.end(), 0);
  if (safe(declared) || n > 8) return declared;
  std::vector<int> perm = declared;
  std::vector<int> pos(n);
  do {
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    if (safe(pos)) return pos;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return declared;
}

}  // namespace

CommutationMatrix CommutationMatrix::from_pairs(
    std::vector<Symbol> alphabet,
    const std::vector<std::pair<Symbol, Symbol>>& pairs) {
  CommutationMatrix m;
  for (const auto& x : alphabet)
    if (!valid_symbol_name(x))
      throw ValidationError("invalid letter name '" + x + "'");
  m.alphabet = std::move(alphabet);
  const size_t n = m.alphabet.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m.alphabet[i] == m.alphabet[j])
        throw ValidationError("duplicate letter '" + m.alphabet[i] + "'");
  m.commutes.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) m.commutes[i][i] = true;
  for (const auto& [x, y] : pairs) {
    int i = m.letter_index(x);
    int j = m.letter_index(y);
    if (i < 0) throw ValidationError("letter '" + x + "' is not declared");
    if (j < 0) throw ValidationError("letter '" + y + "' is not declared");
    if (i == j)
      throw ValidationError("commuting pair must name two distinct letters");
    if (m.commutes[i][j])
      throw ValidationError("commuting pair " + x + " " + y + " repeated");
    m.commutes[i][j] = m.commutes[j][i] = true;
  }
  return m;
}

int CommutationMatrix::letter_index(const Symbol& s) const {
  for (size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == s) return static_cast<int>(i);
  return -1;
}

CommutationMatrix parse_matrix(const std::string& text) {
  auto tokens = tokenize_matrix(text);
  size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    if (pos < tokens.size())
      return ParseError(msg, tokens[pos].line, tokens[pos].col);
    return ParseError(msg);
  };

  if (pos >= tokens.size() || tokens[pos].text != "alphabet:")
    throw fail("expected 'alphabet:' header");
  int header_line = tokens[pos].line;
  ++pos;
  std::vector<Symbol> alphabet;
  while (pos < tokens.size() && tokens[pos].line == header_line) {
    const auto& t = tokens[pos];
    if (!valid_symbol_name(t.text))
      throw ParseError("invalid letter name '" + t.text + "'", t.line, t.col);
    for (const auto& prev : alphabet)
      if (prev == t.text)
        throw ParseError("duplicate letter '" + t.text + "'", t.line, t.col);
    alphabet.push_back(t.text);
    ++pos;
  }

  std::vector<std::pair<Symbol, Symbol>> pairs;
  std::set<std::pair<int, int>> seen;
  auto index_of = [&](const MatrixToken& t) {
    for (size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == t.text) return static_cast<int>(i);
    throw ParseError("letter '" + t.text + "' is not in the alphabet", t.line,
                     t.col);
  };
  while (pos < tokens.size()) {
    if (tokens[pos].text != "commute:")
      throw fail("expected 'commute:' line");
    int line = tokens[pos].line;
    ++pos;
    std::vector<MatrixToken> args;
    while (pos < tokens.size() && tokens[pos].line == line) args.push_back(tokens[pos++]);
    if (args.size() != 2)
      throw ParseError("'commute:' takes exactly two letters", line, 1);
    int i = index_of(args[0]);
    int j = index_of(args[1]);
    if (i == j)
      throw ParseError("commuting pair must name two distinct letters",
                       args[1].line, args[1].col);
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second)
      throw ParseError("commuting pair " + args[0].text + " " + args[1].text +
                           " repeated",
                       args[0].line, args[0].col);
    pairs.emplace_back(args[0].text, args[1].text);
  }
  return CommutationMatrix::from_pairs(std::move(alphabet), pairs);
}

std::vector<CommutingSet> commuting_sets(const CommutationMatrix& m) {
  if (m.size() > 20)
    throw GuardError("commuting-set enumeration supports at most 20 letters");
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int from) -> void {
    for (int i = from; i < n; ++i) {
      bool ok = true;
      for (int j : cur)
        if (!m.commute(j, i)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(i);
      sets.push_back(cur);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(sets.begin(), sets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  const std::vector<int> pos = representative_positions(m);
  std::vector<CommutingSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    CommutingSet cs;
    for (int i : s) cs.members.push_back(m.alphabet[i]);
    std::vector<int> spelled = s;
    std::sort(spelled.begin(), spelled.end(),
              [&](int a, int b) { return pos[a] > pos[b]; });
    for (int i : spelled) cs.word.push_back(m.alphabet[i]);
    out.push_back(std::move(cs));
  }
  return out;
}

SignedSeries cf_polynomial(const CommutationMatrix& m) {
  SignedSeries p;
  p.alphabet = m.alphabet;
  p.max_len = static_cast<int>(m.size());
  for (const auto& cs : commuting_sets(m)) {
    Word w = encode_letters(m.alphabet, cs.word);
    p.coeffs[w] = cs.members.size() % 2 == 1 ? +1 : -1;
  }
  return p;
}

SignedSeries cf_series(const CommutationMatrix& m, int max_len) {
  if (max_len < 0) throw PreconditionError("max_len must be nonnegative");
  SignedSeries p = cf_polynomial(m);
  p.max_len = max_len;  // the polynomial is exact; lift the truncation mark
  std::erase_if(p.coeffs, [&](const auto& kv) {
    return static_cast<int>(kv.first.size()) > max_len;
  });

  SignedSeries acc;
  acc.alphabet = m.alphabet;
  acc.max_len = max_len;
  acc.coeffs[Word()] = 1;
  SignedSeries power = acc;
  for (int k = 1; k <= max_len; ++k) {
    power = convolve(power, p, max_len);
    if (power.coeffs.empty()) break;
    acc = add(acc, power);
  }
  return acc;
}

SignedGrammar cf_grammar(const CommutationMatrix& m) {
  Symbol start = "S";
  for (int k = 1; m.letter_index(start) >= 0; ++k)
    start = "S#" + std::to_string(k);
  std::vector<SignedProduction> prods;
  prods.push_back({start, {}, +1});
  for (const auto& cs : commuting_sets(m)) {
    SignedProduction p;
    p.lhs = start;
    p.sign = cs.members.size() % 2 == 1 ? +1 : -1;
    p.rhs = cs.word;
    p.rhs.push_back(start);
    prods.push_back(std::move(p));
  }
  return SignedGrammar(m.alphabet, start, std::move(prods));
}

std::int64_t TracePartition::class_count() const {
  std::int64_t total = 0;
  for (const auto& classes : by_length)
    total += static_cast<std::int64_t>(classes.size());
  return total;
}

TracePartition trace_classes(const CommutationMatrix& m, int max_len) {
  if (max_len < 0) throw PreconditionError("max_len must be nonnegative");
  const int n = static_cast<int>(m.size());
  double budget = 1;
  for (int l = 0; l < max_len; ++l) {
    budget *= std::max(n, 1);
    if (budget > 1e6)
      throw GuardError(
          "trace-class enumeration needs |alphabet|^max_len <= 10^6");
  }

  TracePartition tp;
  tp.max_len = max_len;
  tp.by_length.resize(static_cast<size_t>(max_len) + 1);
  for (int len = 0; len <= max_len; ++len) {
    if (n == 0 && len > 0) break;
    std::unordered_set<Word> visited;
    Word w(static_cast<size_t>(len), char(0));
    bool done = false;
    while (!done) {
      if (!visited.count(w)) {
        TraceClass cls;
        std::deque<Word> queue{w};
        visited.insert(w);
        while (!queue.empty()) {
          Word u = queue.front();
          queue.pop_front();
          cls.words.push_back(u);
          for (int i = 0; i + 1 < len; ++i) {
            int a = static_cast<unsigned char>(u[i]);
            int b = static_cast<unsigned char>(u[i + 1]);
            if (a == b || !m.commute(a, b)) continue;
            Word v = u;
            std::swap(v[i], v[i + 1]);
            if (visited.insert(v).second) queue.push_back(v);
          }
        }
        std::sort(cls.words.begin(), cls.words.end());
        cls.least = cls.words.front();
        tp.by_length[len].push_back(std::move(cls));
      }
      // next word in letter order
      done = true;
      for (int i = len - 1; i >= 0; --i) {
        int c = static_cast<unsigned char>(w[i]) + 1;
        if (c < n) {
          w[i] = static_cast<char>(c);
          std::fill(w.begin() + i + 1, w.end(), char(0));
          done = false;
          break;
        }
      }
    }
  }
  return tp;
}

CfVerification verify_cf(const CommutationMatrix& m, int max_len) {
  CfVerification v;
  v.max_len = max_len;
  SignedSeries s = cf_series(m, max_len);
  TracePartition tp = trace_classes(m, max_len);
  v.class_count = tp.class_count();

  v.coefficients_01.name = "coefficients01";
  v.coefficients_01.pass = true;
  for (const auto& [w, nv] : s.coeffs)
    if (nv != 0 && nv != 1) {
      v.coefficients_01.pass = false;
      v.coefficients_01.detail = "word '" + decode_word(m.alphabet, w) +
                                 "' has coefficient " + std::to_string(nv);
      break;
    }
  if (v.coefficients_01.pass)
    v.coefficients_01.detail =
        std::to_string(s.coeffs.size()) + " nonzero coefficients, all equal 1";

  v.survivor_count = 0;
  for (const auto& [w, nv] : s.coeffs)
    if (nv == 1) ++v.survivor_count;

  v.one_per_class.name = "onePerClass";
  v.one_per_class.pass = true;
  for (const auto& classes : tp.by_length) {
    for (const auto& cls : classes) {
      int found = 0;
      Word survivor;
      for (const auto& w : cls.words)
        if (s.at(w) == 1) {
          ++found;
          if (found == 1) survivor = w;
        }
      if (found != 1 && v.one_per_class.pass) {
        v.one_per_class.pass = false;
        v.one_per_class.detail =
            "class of '" + decode_word(m.alphabet, cls.least) + "' has " +
            std::to_string(found) + " surviving words";
      }
      if (found == 1 && survivor != cls.least)
        v.minima_mismatches.push_back(
            "survivor '" + decode_word(m.alphabet, survivor) +
            "' differs from class minimum '" +
            decode_word(m.alphabet, cls.least) + "'");
    }
  }
  if (v.one_per_class.pass)
    v.one_per_class.detail = std::to_string(v.class_count) +
                             " trace classes, exactly one survivor each";
  v.survivors_are_minima = v.minima_mismatches.empty();

  v.grammar_route.name = "grammarRoute";
  SignedSeries via_grammar = series(cf_grammar(m), max_len);
  v.grammar_route.pass = via_grammar.coeffs == s.coeffs;
  if (v.grammar_route.pass) {
    v.grammar_route.detail =
        "right-linear grammar reproduces the series up to length " +
        std::to_string(max_len);
  } else {
    for (const auto& [w, nv] : s.coeffs)
      if (via_grammar.at(w) != nv) {
        v.grammar_route.detail =
            "word '" + decode_word(m.alphabet, w) + "': series " +
            std::to_string(nv) + " vs grammar " +
            std::to_string(via_grammar.at(w));
        break;
      }
    if (v.grammar_route.detail.empty())
      for (const auto& [w, nv] : via_grammar.coeffs)
        if (s.at(w) != nv) {
          v.grammar_route.detail =
              "word '" + decode_word(m.alphabet, w) + "': series " +
              std::to_string(s.at(w)) + " vs grammar " + std::to_string(nv);
          break;
        }
  }
  return v;
}

}  // namespace sg
