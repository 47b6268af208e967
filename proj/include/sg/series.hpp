#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sg/grammar.hpp"

namespace sg {

// A word over a grammar's alphabet, stored one byte per letter, the byte
// being the letter's index in declared order. operator< on the underlying
// string is then exactly the declared letter order.
using Word = std::string;

// Length first, then letter order: the sort used everywhere series are
// rendered.
struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using CoeffMap = std::map<Word, std::int64_t, ShortlexLess>;

// A finitely supported signed word series truncated at max_len. Zero
// coefficients are never stored, so cancellation is literal: a word whose
// trees cancel simply disappears.
struct SignedSeries {
  int max_len = 0;
  std::vector<std::string> alphabet;  // letter names, declared order
  CoeffMap coeffs;

  std::int64_t at(const Word& w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? 0 : it->second;
  }
};

// Checked 64-bit coefficient arithmetic; throws OverflowError instead of
// wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Word <-> text. encode_word tokenizes greedily by longest terminal name
// (for single-character alphabets this is the obvious reading); text may
// alternatively separate letters with spaces. Throws ParseError when the
// text does not spell a word over the alphabet.
Word encode_word(const std::vector<std::string>& alphabet,
                 const std::string& text);
Word encode_letters(const std::vector<std::string>& alphabet,
                    const std::vector<std::string>& letters);
std::string decode_word(const std::vector<std::string>& alphabet,
                        const Word& w);

// Pointwise sum/difference; both series must carry the same alphabet.
SignedSeries add(const SignedSeries& a, const SignedSeries& b);
SignedSeries subtract(const SignedSeries& a, const SignedSeries& b);
// Word concatenation product, truncated at max_len.
SignedSeries convolve(const SignedSeries& a, const SignedSeries& b,
                      int max_len);
// Re-expresses a series over a larger alphabet (every letter of the old
// alphabet must appear in the new one).
SignedSeries reencode(const SignedSeries& s,
                      const std::vector<std::string>& alphabet);

// Stable JSON rendering: {"maxLen": .., "coefficients": [{"word": .., "n":
// ..}, ...]} sorted by length then declared letter order; epsilon is "".
std::string series_to_json(const SignedSeries& s);

struct SeriesOptions {
  // Abort (GuardError) once the engine holds this many nonzero stored words
  // across all nonterminals and lengths.
  std::int64_t max_stored_words = 10'000'000;
};

// Signed count of epsilon-yield parse trees per nonterminal of the reduced
// grammar (nonterminals dropped by reduction are not listed). Requires
// check_finite_trees to pass; counts are evaluated along a topological order
// of the same-length graph.
std::map<Symbol, std::int64_t> epsilon_counts(const SignedGrammar& g);

// The signed series of g up to max_len: for every word, the number of parse
// trees with sign +1 minus the number with sign -1. Length-stratified dynamic
// programming over the reduced grammar. Requires check_finite_trees to pass
// (throws InfiniteTreesError with the cycle witness otherwise).
SignedSeries series(const SignedGrammar& g, int max_len,
                    const SeriesOptions& options = {});

// Signed tree count for a single word, computed by an independent span-based
// chart over an internally binarized grammar. Always equals
// series(g, |w|).at(w).
std::int64_t coefficient(const SignedGrammar& g, const std::string& word_text);
std::int64_t coefficient_encoded(const SignedGrammar& g, const Word& w);

// Reusable chart when many words are queried against one grammar.
class CoefficientEngine {
public:
  explicit CoefficientEngine(const SignedGrammar& g);
  ~CoefficientEngine();
  CoefficientEngine(const CoefficientEngine&) = delete;
  CoefficientEngine& operator=(const CoefficientEngine&) = delete;

  std::int64_t coefficient(const Word& w) const;
  const std::vector<std::string>& alphabet() const;

private:
  struct Impl;
  Impl* impl_;
};

struct ListingCheck {
  bool ok = false;
  int max_len = 0;
  // Words with coefficient exactly 1 (the generated language up to max_len),
  // decoded, shortlex order.
  std::vector<std::string> words;
  // Words whose coefficient is neither 0 nor 1, with the coefficient.
  std::vector<std::pair<std::string, std::int64_t>> violations;
};

// Does g generate a language up to max_len, i.e. is every coefficient 0 or 1?
ListingCheck check_listing(const SignedGrammar& g, int max_len,
                           const SeriesOptions& options = {});

struct AmbiguityProfile {
  int max_len = 0;
  struct PerLength {
    int len = 0;
    std::int64_t max_coefficient = 0;
    std::int64_t ambiguous_words = 0;  // words with coefficient >= 2
    std::map<std::int64_t, std::int64_t> histogram;  // coefficient -> #words
  };
  std::vector<PerLength> per_length;  // entries for lengths 0..max_len
};

// Tree-count profile for an all-positive grammar (throws PreconditionError
// if any production is negative).
AmbiguityProfile ambiguity_profile(const SignedGrammar& g, int max_len,
                                   const SeriesOptions& options = {});

}  // namespace sg
