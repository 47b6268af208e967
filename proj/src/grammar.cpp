#include "sg/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sg {

namespace {

bool reserved_token(const std::string& t) {
  return t == "->" || t == "|" || t == ";" || t == "-" || t == "_" ||
         t == "lambda";
}

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

// Whitespace-separated tokens. '#' opens a comment only when it starts a
// token, so names like "A#1" survive.
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      t.text.push_back(text[i]);
      ++i;
      ++col;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string production_key(const SignedProduction& p) {
  std::string k = p.sign < 0 ? "-" : "+";
  k += p.lhs;
  for (const auto& s : p.rhs) {
    k += ' ';
    k += s;
  }
  return k;
}

}  // namespace

bool valid_symbol_name(const Symbol& name) {
  if (name.empty() || reserved_token(name)) return false;
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) ||
        !std::isprint(static_cast<unsigned char>(c)))
      return false;
  return true;
}

SignedGrammar::SignedGrammar(std::vector<Symbol> terminals, Symbol start,
                             std::vector<SignedProduction> productions,
                             std::vector<Symbol> extra_nonterminals)
    : terminals_(std::move(terminals)),
      start_(std::move(start)),
      productions_(std::move(productions)) {
  for (size_t i = 0; i < terminals_.size(); ++i) {
    const Symbol& t = terminals_[i];
    if (!valid_symbol_name(t))
      throw ValidationError("invalid terminal name '" + t + "'");
    if (!terminal_index_.emplace(t, static_cast<int>(i)).second)
      throw ValidationError("duplicate terminal '" + t + "'");
  }
  if (!valid_symbol_name(start_))
    throw ValidationError("invalid start symbol '" + start_ + "'");
  if (terminal_index_.count(start_))
    throw ValidationError("start symbol '" + start_ + "' is a terminal");

  std::set<Symbol> nts;
  nts.insert(start_);
  for (const Symbol& s : extra_nonterminals) {
    if (!valid_symbol_name(s))
      throw ValidationError("invalid nonterminal name '" + s + "'");
    if (terminal_index_.count(s))
      throw ValidationError("'" + s + "' declared both terminal and nonterminal");
    nts.insert(s);
  }
  std::set<std::string> seen;
  for (const auto& p : productions_) {
    if (!valid_symbol_name(p.lhs))
      throw ValidationError("invalid symbol name '" + p.lhs + "'");
    if (terminal_index_.count(p.lhs))
      throw ValidationError("terminal '" + p.lhs + "' used as lhs");
    if (p.sign != 1 && p.sign != -1)
      throw ValidationError("production sign must be +1 or -1");
    nts.insert(p.lhs);
    for (const Symbol& s : p.rhs) {
      if (!valid_symbol_name(s))
        throw ValidationError("invalid symbol name '" + s + "'");
      if (!terminal_index_.count(s)) nts.insert(s);
    }
    if (!seen.insert(production_key(p)).second)
      throw ValidationError("duplicate production with lhs '" + p.lhs + "'");
  }
  nonterminals_.assign(nts.begin(), nts.end());
}

bool SignedGrammar::is_nonterminal(const Symbol& s) const {
  return std::binary_search(nonterminals_.begin(), nonterminals_.end(), s);
}

int SignedGrammar::terminal_index(const Symbol& s) const {
  auto it = terminal_index_.find(s);
  return it == terminal_index_.end() ? -1 : it->second;
}

SignedGrammar parse_grammar(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  size_t pos = 0;
  auto have = [&] { return pos < toks.size(); };
  auto at_end_error = [&](const std::string& msg) -> ParseError {
    if (toks.empty()) return ParseError(msg, 1, 1);
    const Token& last = toks.back();
    return ParseError(msg, last.line,
                      last.col + static_cast<int>(last.text.size()));
  };

  // alphabet: header
  if (!have() || toks[pos].text != "alphabet:")
    throw have() ? ParseError("expected 'alphabet:' header", toks[pos].line,
                              toks[pos].col)
                 : at_end_error("expected 'alphabet:' header");
  int alpha_line = toks[pos].line;
  ++pos;
  std::vector<Symbol> terminals;
  std::set<Symbol> term_set;
  while (have() && toks[pos].line == alpha_line) {
    const Token& t = toks[pos];
    if (!valid_symbol_name(t.text))
      throw ParseError("invalid terminal name '" + t.text + "'", t.line,
                       t.col);
    if (!term_set.insert(t.text).second)
      throw ParseError("duplicate terminal '" + t.text + "'", t.line, t.col);
    terminals.push_back(t.text);
    ++pos;
  }

  // start: header
  if (!have() || toks[pos].text != "start:")
    throw have() ? ParseError("start symbol not declared (expected 'start:')",
                              toks[pos].line, toks[pos].col)
                 : at_end_error("start symbol not declared (expected 'start:')");
  int start_line = toks[pos].line;
  ++pos;
  if (!have() || toks[pos].line != start_line)
    throw at_end_error("expected start symbol after 'start:'");
  Token start_tok = toks[pos];
  if (!valid_symbol_name(start_tok.text))
    throw ParseError("invalid start symbol '" + start_tok.text + "'",
                     start_tok.line, start_tok.col);
  if (term_set.count(start_tok.text))
    throw ParseError("start symbol '" + start_tok.text + "' is a terminal",
                     start_tok.line, start_tok.col);
  ++pos;
  if (have() && toks[pos].line == start_line)
    throw ParseError("expected a single start symbol", toks[pos].line,
                     toks[pos].col);

  // production groups
  struct PendingProduction {
    SignedProduction prod;
    std::vector<Token> rhs_tokens;
    Token lhs_token;
  };
  std::vector<PendingProduction> pending;
  std::vector<Symbol> declared_only;
  std::set<Symbol> lhs_seen;
  std::set<std::string> prod_keys;

  while (have()) {
    Token lhs = toks[pos];
    if (!valid_symbol_name(lhs.text))
      throw ParseError("expected nonterminal, got '" + lhs.text + "'",
                       lhs.line, lhs.col);
    if (term_set.count(lhs.text))
      throw ParseError("terminal '" + lhs.text + "' used as lhs", lhs.line,
                       lhs.col);
    ++pos;
    if (!have() || toks[pos].text != "->")
      throw have() ? ParseError("expected '->'", toks[pos].line, toks[pos].col)
                   : at_end_error("expected '->'");
    ++pos;

    if (have() && toks[pos].text == ";") {  // declaration with no productions
      if (!lhs_seen.count(lhs.text)) declared_only.push_back(lhs.text);
      lhs_seen.insert(lhs.text);
      ++pos;
      continue;
    }

    bool group_done = false;
    while (!group_done) {
      PendingProduction pp;
      pp.lhs_token = lhs;
      pp.prod.lhs = lhs.text;
      pp.prod.sign = +1;
      if (have() && toks[pos].text == "-") {
        pp.prod.sign = -1;
        ++pos;
      }
      if (!have())
        throw at_end_error("unterminated production (expected ';')");
      if (toks[pos].text == "_" || toks[pos].text == "lambda") {
        ++pos;
        if (!have())
          throw at_end_error("unterminated production (expected ';')");
        if (toks[pos].text != "|" && toks[pos].text != ";")
          throw ParseError("epsilon must be the whole alternative",
                           toks[pos].line, toks[pos].col);
      } else {
        while (have() && toks[pos].text != "|" && toks[pos].text != ";") {
          const Token& t = toks[pos];
          if (t.text == "->" )
            throw ParseError("unexpected '->' (missing ';'?)", t.line, t.col);
          if (t.text == "-")
            throw ParseError("'-' is only allowed at the head of an alternative",
                             t.line, t.col);
          if (t.text == "_" || t.text == "lambda")
            throw ParseError("epsilon must be the whole alternative", t.line,
                             t.col);
          if (!valid_symbol_name(t.text))
            throw ParseError("invalid symbol '" + t.text + "'", t.line, t.col);
          pp.prod.rhs.push_back(t.text);
          pp.rhs_tokens.push_back(t);
          ++pos;
        }
        if (!have())
          throw at_end_error("unterminated production (expected ';')");
        if (pp.prod.rhs.empty())
          throw ParseError("empty alternative", toks[pos].line, toks[pos].col);
      }
      if (!prod_keys.insert(production_key(pp.prod)).second)
        throw ParseError("duplicate production for '" + lhs.text + "'",
                         pp.lhs_token.line, pp.lhs_token.col);
      lhs_seen.insert(lhs.text);
      pending.push_back(std::move(pp));
      if (toks[pos].text == ";") {
        ++pos;
        group_done = true;
      } else {  // "|"
        ++pos;
      }
    }
  }

  // every rhs symbol must be a terminal or a declared nonterminal
  std::set<Symbol> declared_nts(lhs_seen);
  declared_nts.insert(start_tok.text);
  for (const auto& pp : pending)
    for (size_t i = 0; i < pp.prod.rhs.size(); ++i) {
      const Symbol& s = pp.prod.rhs[i];
      if (!term_set.count(s) && !declared_nts.count(s)) {
        const Token& t = pp.rhs_tokens[i];
        throw ParseError("undeclared symbol '" + s + "' on an rhs", t.line,
                         t.col);
      }
    }

  std::vector<SignedProduction> prods;
  prods.reserve(pending.size());
  for (auto& pp : pending) prods.push_back(std::move(pp.prod));
  return SignedGrammar(std::move(terminals), start_tok.text, std::move(prods),
                       std::move(declared_only));
}

std::string render_grammar(const SignedGrammar& g) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& t : g.terminals()) out << ' ' << t;
  out << "\nstart: " << g.start() << "\n";

  const auto& prods = g.productions();
  size_t i = 0;
  while (i < prods.size()) {
    size_t j = i;
    while (j < prods.size() && prods[j].lhs == prods[i].lhs) ++j;
    out << prods[i].lhs << " ->";
    for (size_t k = i; k < j; ++k) {
      if (k > i) out << " |";
      if (prods[k].sign < 0) out << " -";
      if (prods[k].rhs.empty())
        out << " _";
      else
        for (const auto& s : prods[k].rhs) out << ' ' << s;
    }
    out << " ;\n";
    i = j;
  }

  // nonterminals that have no production and are not the start still need a
  // declaration so the file reparses to the same grammar
  std::set<Symbol> with_prods;
  for (const auto& p : prods) with_prods.insert(p.lhs);
  for (const auto& nt : g.nonterminals())
    if (nt != g.start() && !with_prods.count(nt)) out << nt << " -> ;\n";
  return out.str();
}

}  // namespace sg
