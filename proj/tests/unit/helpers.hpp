#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sg/analysis.hpp"
#include "sg/cartier_foata.hpp"
#include "sg/grammar.hpp"
#include "sg/series.hpp"

namespace sgtest {

inline std::string fixture_path(const std::string& name) {
  return std::string(SG_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline sg::SignedGrammar load_fixture(const std::string& name) {
  return sg::parse_grammar(slurp(fixture_path(name)));
}

inline sg::CommutationMatrix load_matrix(const std::string& name) {
  return sg::parse_matrix(slurp(fixture_path(name)));
}

using CoeffsByText = std::map<std::string, std::int64_t>;

// series coefficients keyed by their decoded spelling, so expectations can be
// written as plain string maps
inline CoeffsByText decoded(const sg::SignedSeries& s) {
  CoeffsByText out;
  for (const auto& [w, n] : s.coeffs) out[sg::decode_word(s.alphabet, w)] = n;
  return out;
}

// encoded word from letter indices
inline sg::Word wrd(std::initializer_list<int> letters) {
  sg::Word w;
  for (int i : letters) w.push_back(static_cast<char>(i));
  return w;
}

// every encoded word over an alphabet of the given size up to max_len,
// shortest lengths first
inline std::vector<sg::Word> all_words(size_t alphabet_size, int max_len) {
  std::vector<sg::Word> out{sg::Word{}};
  size_t begin = 0;
  for (int l = 1; l <= max_len; ++l) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (size_t c = 0; c < alphabet_size; ++c) {
        sg::Word w = out[i];
        w.push_back(static_cast<char>(c));
        out.push_back(w);
      }
    begin = end;
  }
  return out;
}

// a same-length cycle witness must close up and follow real edges of the
// reduced grammar
inline bool valid_cycle_witness(const sg::SignedGrammar& g,
                                const std::vector<sg::Symbol>& cycle) {
  if (cycle.size() < 2) return false;
  if (cycle.front() != cycle.back()) return false;
  auto edges = sg::analyze(sg::reduce(g)).same_length_edges;
  for (size_t i = 0; i + 1 < cycle.size(); ++i) {
    auto it = edges.find(cycle[i]);
    if (it == edges.end() || !it->second.count(cycle[i + 1])) return false;
  }
  return true;
}

inline const std::vector<std::string>& finite_fixture_names() {
  static const std::vector<std::string> names = {
      "ex1.sg",          "ex2.sg",     "ex3-even.sg", "ex3-mult6.sg",
      "ex4.sg",          "ex5.sg",     "ex5a.sg",     "astar-bstar.sg",
      "ij-jk-union.sg",  "ambig-a.sg", "odd-as.sg",   "bb-star.sg",
      "empty.sg"};
  return names;
}

}  // namespace sgtest
