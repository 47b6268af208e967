#include "sg/series.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "sg/errors.hpp"

namespace sg {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("coefficient overflow in 64-bit addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("coefficient overflow in 64-bit multiplication");
  return r;
}

namespace {

void check_alphabet_size(const std::vector<std::string>& alphabet) {
  if (alphabet.size() > 256)
    throw PreconditionError("alphabets beyond 256 letters are not supported");
}

int find_letter(const std::vector<std::string>& alphabet,
                const std::string& name) {
  for (size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == name) return static_cast<int>(i);
  return -1;
}

bool has_space(const std::string& text) {
  return std::any_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Word encode_word(const std::vector<std::string>& alphabet,
                 const std::string& text) {
  check_alphabet_size(alphabet);
  if (has_space(text)) {
    std::vector<std::string> letters;
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
    return encode_letters(alphabet, letters);
  }

  Word w;
  size_t pos = 0;
  while (pos < text.size()) {
    int best = -1;
    size_t best_len = 0;
    for (size_t i = 0; i < alphabet.size(); ++i) {
      const auto& name = alphabet[i];
      if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
        best = static_cast<int>(i);
        best_len = name.size();
      }
    }
    if (best < 0)
      throw ParseError("cannot read word '" + text +
                       "': no alphabet letter matches at position " +
                       std::to_string(pos + 1));
    w += static_cast<char>(best);
    pos += best_len;
  }
  return w;
}

Word encode_letters(const std::vector<std::string>& alphabet,
                    const std::vector<std::string>& letters) {
  check_alphabet_size(alphabet);
  Word w;
  for (const auto& name : letters) {
    int i = find_letter(alphabet, name);
    if (i < 0) throw ParseError("unknown letter '" + name + "'");
    w += static_cast<char>(i);
  }
  return w;
}

std::string decode_word(const std::vector<std::string>& alphabet,
                        const Word& w) {
  bool single = std::all_of(alphabet.begin(), alphabet.end(),
                            [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (char c : w) {
    size_t i = static_cast<unsigned char>(c);
    if (i >= alphabet.size())
      throw PreconditionError("word refers to a letter outside the alphabet");
    if (!out.empty() && !single) out += ' ';
    out += alphabet[i];
  }
  return out;
}

namespace {

SignedSeries combine(const SignedSeries& a, const SignedSeries& b, int flip) {
  if (a.alphabet != b.alphabet)
    throw PreconditionError("series alphabets differ");
  SignedSeries out;
  out.alphabet = a.alphabet;
  out.max_len = std::min(a.max_len, b.max_len);
  for (const auto& [w, n] : a.coeffs)
    if (static_cast<int>(w.size()) <= out.max_len) out.coeffs[w] = n;
  for (const auto& [w, n] : b.coeffs) {
    if (static_cast<int>(w.size()) > out.max_len) continue;
    auto [it, fresh] = out.coeffs.try_emplace(w, 0);
    it->second = checked_add(it->second, checked_mul(flip, n));
    if (it->second == 0) out.coeffs.erase(it);
    (void)fresh;
  }
  return out;
}

}  // namespace

SignedSeries add(const SignedSeries& a, const SignedSeries& b) {
  return combine(a, b, +1);
}

SignedSeries subtract(const SignedSeries& a, const SignedSeries& b) {
  return combine(a, b, -1);
}

SignedSeries convolve(const SignedSeries& a, const SignedSeries& b,
                      int max_len) {
  if (a.alphabet != b.alphabet)
    throw PreconditionError("series alphabets differ");
  SignedSeries out;
  out.alphabet = a.alphabet;
  out.max_len = std::min({max_len, a.max_len, b.max_len});
  for (const auto& [u, cu] : a.coeffs) {
    if (static_cast<int>(u.size()) > out.max_len) continue;
    for (const auto& [v, cv] : b.coeffs) {
      if (static_cast<int>(u.size() + v.size()) > out.max_len) continue;
      Word w = u + v;
      auto [it, fresh] = out.coeffs.try_emplace(w, 0);
      it->second = checked_add(it->second, checked_mul(cu, cv));
      if (it->second == 0) out.coeffs.erase(it);
      (void)fresh;
    }
  }
  return out;
}

SignedSeries reencode(const SignedSeries& s,
                      const std::vector<std::string>& alphabet) {
  check_alphabet_size(alphabet);
  std::vector<char> translate(s.alphabet.size());
  for (size_t i = 0; i < s.alphabet.size(); ++i) {
    int j = find_letter(alphabet, s.alphabet[i]);
    if (j < 0)
      throw PreconditionError("letter '" + s.alphabet[i] +
                              "' missing from the target alphabet");
    translate[i] = static_cast<char>(j);
  }
  SignedSeries out;
  out.alphabet = alphabet;
  out.max_len = s.max_len;
  for (const auto& [w, n] : s.coeffs) {
    Word t;
    t.reserve(w.size());
    for (char c : w) t += translate[static_cast<unsigned char>(c)];
    out.coeffs[t] = n;
  }
  return out;
}

std::string series_to_json(const SignedSeries& s) {
  nlohmann::json j;
  j["maxLen"] = s.max_len;
  auto arr = nlohmann::json::array();
  for (const auto& [w, n] : s.coeffs) {
    nlohmann::json entry;
    entry["word"] = decode_word(s.alphabet, w);
    entry["n"] = n;
    arr.push_back(std::move(entry));
  }
  j["coefficients"] = std::move(arr);
  return j.dump(2);
}

}  // namespace sg
