#include "minilog/parse.hpp"

#include <cctype>

namespace minilog {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Lexer::Lexer(std::string_view text, int start_line)
    : text_(text), line_(start_line) {
  advance();
}

Token Lexer::next() {
  Token t = current_;
  advance();
  return t;
}

Token Lexer::expect(Token::Kind kind, std::string_view what) {
  if (current_.kind != kind) {
    fail("expected " + std::string(what) + ", found '" + current_.text + "'");
  }
  return next();
}

void Lexer::expect_punct(std::string_view p) {
  if (!at_punct(p)) {
    fail("expected '" + std::string(p) + "', found '" + current_.text + "'");
  }
  next();
}

void Lexer::fail(const std::string& reason) const {
  throw ParseError(reason, current_.line);
}

void Lexer::advance() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '\n') {
      ++line_;
      ++pos_;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++pos_;
    } else if (c == '%') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    } else {
      break;
    }
  }
  current_ = Token{};
  current_.line = line_;
  if (pos_ >= text_.size()) {
    current_.kind = Token::Kind::End;
    current_.text = "<end of input>";
    return;
  }

  char c = text_[pos_];
  auto digits_from = [&](std::size_t start) {
    std::size_t end = start;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
      ++end;
    return end;
  };

  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::size_t end = digits_from(pos_);
    current_.kind = Token::Kind::Integer;
    current_.text = std::string(text_.substr(pos_, end - pos_));
    current_.int_value = std::stoll(current_.text);
    pos_ = end;
    return;
  }
  if (c == '-' && pos_ + 1 < text_.size() &&
      std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
    std::size_t end = digits_from(pos_ + 1);
    current_.kind = Token::Kind::Integer;
    current_.text = std::string(text_.substr(pos_, end - pos_));
    current_.int_value = std::stoll(current_.text);
    pos_ = end;
    return;
  }
  if (std::islower(static_cast<unsigned char>(c))) {
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    current_.kind = Token::Kind::Ident;
    current_.text = std::string(text_.substr(pos_, end - pos_));
    pos_ = end;
    return;
  }
  if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    current_.kind = Token::Kind::Variable;
    current_.text = std::string(text_.substr(pos_, end - pos_));
    pos_ = end;
    return;
  }
  if (c == '\'') {
    std::size_t end = pos_ + 1;
    while (end < text_.size() && text_[end] != '\'') ++end;
    if (end >= text_.size()) {
      throw ParseError("unterminated quoted atom", line_);
    }
    current_.kind = Token::Kind::Ident;
    current_.text = std::string(text_.substr(pos_ + 1, end - pos_ - 1));
    pos_ = end + 1;
    return;
  }

  auto two = [&](char a, char b) {
    return c == a && pos_ + 1 < text_.size() && text_[pos_ + 1] == b;
  };
  current_.kind = Token::Kind::Punct;
  if (two('-', '>')) {
    current_.text = "->";
    pos_ += 2;
    return;
  }
  if (two('|', '|')) {
    current_.text = "||";
    pos_ += 2;
    return;
  }
  if (two('<', '=')) {
    current_.text = "<=";
    pos_ += 2;
    return;
  }
  switch (c) {
    case '(': case ')': case '[': case ']': case ',': case '.':
    case '=': case '>': case '*': case '+': case '-':
      current_.text = std::string(1, c);
      ++pos_;
      return;
    default:
      throw ParseError("unexpected character '" + std::string(1, c) + "'", line_);
  }
}

int VarTable::intern(const std::string& name, VarSource& vars) {
  auto it = by_name.find(name);
  if (it != by_name.end()) return it->second;
  int id = vars.fresh_id();
  by_name.emplace(name, id);
  in_order.emplace_back(name, id);
  return id;
}

std::map<int, std::string> VarTable::id_to_name() const {
  std::map<int, std::string> out;
  for (const auto& [name, id] : in_order) out.emplace(id, name);
  return out;
}

TermPtr parse_term(Lexer& lex, VarSource& vars, VarTable& table) {
  if (lex.at(Token::Kind::Integer)) {
    return mk_int(lex.next().int_value);
  }
  if (lex.at(Token::Kind::Variable)) {
    Token t = lex.next();
    if (t.text == "_") return vars.fresh();
    return mk_var(table.intern(t.text, vars));
  }
  if (lex.at_punct("[")) {
    lex.next();
    lex.expect_punct("]");  // only the empty list is a term here
    return mk_atom("[]");
  }
  if (lex.at(Token::Kind::Ident)) {
    Token t = lex.next();
    if (!lex.at_punct("(")) return mk_atom(t.text);
    lex.next();
    std::vector<TermPtr> args;
    args.push_back(parse_term(lex, vars, table));
    while (lex.at_punct(",")) {
      lex.next();
      args.push_back(parse_term(lex, vars, table));
    }
    lex.expect_punct(")");
    return mk_compound(t.text, std::move(args));
  }
  lex.fail("expected a term, found '" + lex.peek().text + "'");
}

TermPtr parse_term_text(const std::string& text, VarSource& vars, VarTable& table) {
  Lexer lex(text);
  TermPtr t = parse_term(lex, vars, table);
  if (!lex.at(Token::Kind::End)) {
    lex.fail("trailing input after term");
  }
  return t;
}

}  // namespace minilog
