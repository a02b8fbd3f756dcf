#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "minilog/common.hpp"
#include "minilog/term.hpp"

namespace minilog {

// Shared tokenizer for the term-like input syntaxes: atoms are lowercase
// identifiers or quoted symbols, variables start uppercase or `_`, integers
// are decimal with optional `-`, `%` starts a comment line.
struct Token {
  enum class Kind { Ident, Variable, Integer, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  long long int_value = 0;
  int line = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text, int start_line = 1);

  const Token& peek() const { return current_; }
  Token next();

  bool at(Token::Kind kind) const { return current_.kind == kind; }
  bool at_punct(std::string_view p) const {
    return current_.kind == Token::Kind::Punct && current_.text == p;
  }
  // Consumes the token or throws ParseError.
  Token expect(Token::Kind kind, std::string_view what);
  void expect_punct(std::string_view p);

  [[noreturn]] void fail(const std::string& reason) const;

 private:
  void advance();

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  Token current_;
};

// Named variables seen while parsing, in first-occurrence order. `_` alone
// is anonymous: always a fresh variable, never recorded here.
struct VarTable {
  std::vector<std::pair<std::string, int>> in_order;
  std::map<std::string, int> by_name;

  int intern(const std::string& name, VarSource& vars);
  std::map<int, std::string> id_to_name() const;
};

// Parses one Prolog-style term: atom, integer, variable, or compound.
TermPtr parse_term(Lexer& lex, VarSource& vars, VarTable& table);

// Convenience: parse a complete single-term input.
TermPtr parse_term_text(const std::string& text, VarSource& vars, VarTable& table);

}  // namespace minilog
