#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "sg/errors.hpp"

namespace sg {

// Grammar symbols are plain tokens: any run of printable non-whitespace
// characters except the reserved tokens "->", "|", ";", "-", "_" (and the
// epsilon synonym "lambda"). Whether a symbol is a terminal is decided per
// grammar by the declared alphabet.
using Symbol = std::string;

bool valid_symbol_name(const Symbol& name);

struct SignedProduction {
  Symbol lhs;
  std::vector<Symbol> rhs;  // empty rhs = epsilon production
  int sign = +1;            // +1 or -1

  friend bool operator==(const SignedProduction&,
                         const SignedProduction&) = default;
};

// A signed context-free grammar. Immutable after construction.
//
// The declared terminal order is significant: it fixes the letter order used
// for word encoding and for sorting series output. Nonterminals are whatever
// appears as a production lhs, on an rhs without being a declared terminal,
// as the start symbol, or in extra_nonterminals (used for nonterminals that
// are declared but have no productions and no other occurrence).
class SignedGrammar {
public:
  SignedGrammar(std::vector<Symbol> terminals, Symbol start,
                std::vector<SignedProduction> productions,
                std::vector<Symbol> extra_nonterminals = {});

  const std::vector<Symbol>& terminals() const { return terminals_; }
  const Symbol& start() const { return start_; }
  const std::vector<SignedProduction>& productions() const {
    return productions_;
  }
  // Sorted, duplicate-free.
  const std::vector<Symbol>& nonterminals() const { return nonterminals_; }

  bool is_terminal(const Symbol& s) const {
    return terminal_index_.count(s) != 0;
  }
  bool is_nonterminal(const Symbol& s) const;
  // Index in declared order, -1 if not a terminal.
  int terminal_index(const Symbol& s) const;

  friend bool operator==(const SignedGrammar& a, const SignedGrammar& b) {
    return a.terminals_ == b.terminals_ && a.start_ == b.start_ &&
           a.productions_ == b.productions_ &&
           a.nonterminals_ == b.nonterminals_;
  }

private:
  std::vector<Symbol> terminals_;
  Symbol start_;
  std::vector<SignedProduction> productions_;
  std::vector<Symbol> nonterminals_;
  std::unordered_map<Symbol, int> terminal_index_;
};

// Parses the grammar file format:
//
//   alphabet: a b
//   start: S
//   S -> a S | b S | - b a S | _ ;
//
// Line 1 declares the terminals (declaration order matters), line 2 the start
// symbol. After that, production groups "NT -> alt | alt | ... ;" where each
// alternative is an optional leading "-" (sign -1) followed by symbols, or
// "_" / "lambda" for an epsilon rhs. A group may span lines; ";" terminates
// it. "NT -> ;" declares a nonterminal with no productions. "#" starts a
// comment when it begins a token; inside a token (as in "A#1") it is an
// ordinary character. Every rhs symbol must be a declared terminal or a
// nonterminal with a group (or the start symbol).
SignedGrammar parse_grammar(const std::string& text);

// Renders a grammar in the file format above. parse_grammar(render_grammar(g))
// reproduces g exactly, including production order.
std::string render_grammar(const SignedGrammar& g);

}  // namespace sg
