#include <algorithm>

#include "sg/errors.hpp"
#include "sg/series.hpp"

namespace sg {

ListingCheck check_listing(const SignedGrammar& g, int max_len,
                           const SeriesOptions& options) {
  SignedSeries s = series(g, max_len, options);
  ListingCheck out;
  out.max_len = max_len;
  for (const auto& [w, n] : s.coeffs) {
    if (n == 1)
      out.words.push_back(decode_word(s.alphabet, w));
    else
      out.violations.emplace_back(decode_word(s.alphabet, w), n);
  }
  out.ok = out.violations.empty();
  return out;
}

AmbiguityProfile ambiguity_profile(const SignedGrammar& g, int max_len,
                                   const SeriesOptions& options) {
  for (const auto& p : g.productions())
    if (p.sign < 0)
      throw PreconditionError(
          "ambiguity profile requires an all-positive grammar");
  SignedSeries s = series(g, max_len, options);
  AmbiguityProfile out;
  out.max_len = max_len;
  out.per_length.resize(static_cast<size_t>(max_len) + 1);
  for (int l = 0; l <= max_len; ++l) out.per_length[l].len = l;
  for (const auto& [w, n] : s.coeffs) {
    auto& pl = out.per_length[w.size()];
    pl.max_coefficient = std::max(pl.max_coefficient, n);
    if (n >= 2) ++pl.ambiguous_words;
    ++pl.histogram[n];
  }
  return out;
}

}  // namespace sg
