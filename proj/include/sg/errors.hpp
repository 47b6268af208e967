#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sg {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Text input (grammar or commutation matrix file) that does not parse or
// validate. line/col are 1-based; 0 means "no position available".
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line = 0, int col = 0)
      : Error(format(message, line, col)), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  static std::string format(const std::string& m, int line, int col) {
    if (line <= 0) return m;
    return "line " + std::to_string(line) + ", col " + std::to_string(col) +
           ": " + m;
  }
  int line_;
  int col_;
};

// Programmatic construction of a grammar or matrix that breaks an invariant
// (duplicate production, terminal used as lhs, bad symbol name, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

// A documented precondition of an operation does not hold for the input.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// The grammar admits infinitely many parse trees for some word: the
// same-length dependency graph of the reduced grammar has a cycle.
// The witness lists nonterminals along the cycle, first == last.
class InfiniteTreesError : public PreconditionError {
public:
  explicit InfiniteTreesError(std::vector<std::string> cycle)
      : PreconditionError(describe(cycle)), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const { return cycle_; }

private:
  static std::string describe(const std::vector<std::string>& cycle) {
    std::string s =
        "grammar admits infinitely many parse trees: same-length cycle";
    for (size_t i = 0; i < cycle.size(); ++i)
      s += (i ? " -> " : " ") + cycle[i];
    return s;
  }
  std::vector<std::string> cycle_;
};

// Checked 64-bit coefficient arithmetic overflowed.
class OverflowError : public Error {
public:
  using Error::Error;
};

// A resource guard tripped (stored-word cap, enumeration bounds).
class GuardError : public Error {
public:
  using Error::Error;
};

}  // namespace sg
