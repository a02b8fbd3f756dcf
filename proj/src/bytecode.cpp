#include "minilog/bytecode.hpp"

#include <sstream>

#include "minilog/parse.hpp"

namespace minilog {

std::string render(const DomainConst& c) {
  if (c.is_int()) return std::to_string(c.as_int());
  return render(c.as_sign());
}

std::string render(const Opcode& op) {
  struct Visitor {
    std::string operator()(const IConst& o) const {
      return "iconst(" + minilog::render(o.value) + ")";
    }
    std::string operator()(const IOp& o) const {
      return "iop(" + minilog::render(o.op) + ")";
    }
    std::string operator()(const Dup&) const { return "dup"; }
    std::string operator()(const If1& o) const {
      return "if1(" + minilog::render(o.cmp) + "," + minilog::render(o.constant) +
             "," + std::to_string(o.target) + ")";
    }
    std::string operator()(const Return&) const { return "return"; }
  };
  return std::visit(Visitor{}, op);
}

Program::Program(std::vector<Instruction> instructions) {
  for (Instruction& ins : instructions) {
    if (ins.pc < 0) throw ParseError("negative pc " + std::to_string(ins.pc));
    if (!instructions_.emplace(ins.pc, ins).second) {
      throw ParseError("duplicate instruction at pc " + std::to_string(ins.pc));
    }
  }
  if (instructions_.empty()) {
    throw ParseError("program has no instructions");
  }
  if (!contains(0)) {
    throw ParseError("no entry instruction at pc 0");
  }
  for (const auto& [pc, ins] : instructions_) {
    bool is_return = std::holds_alternative<Return>(ins.opcode);
    if (ins.size < 0 || (ins.size == 0 && !is_return)) {
      throw ParseError("instruction at pc " + std::to_string(pc) +
                       " has invalid size " + std::to_string(ins.size));
    }
    if (const If1* br = std::get_if<If1>(&ins.opcode)) {
      if (!contains(br->target)) throw InvalidTarget(br->target);
    }
    if (!is_return && !contains(pc + ins.size)) {
      throw InvalidTarget(pc + ins.size);
    }
  }
}

const Instruction& Program::at(int pc) const { return instructions_.at(pc); }

namespace {

DomainConst parse_const(Lexer& lex) {
  if (lex.at(Token::Kind::Integer)) {
    return DomainConst{lex.next().int_value};
  }
  Token t = lex.expect(Token::Kind::Ident, "constant");
  if (t.text == "pos") return DomainConst{Sign::Pos};
  if (t.text == "neg") return DomainConst{Sign::Neg};
  if (t.text == "top") return DomainConst{Sign::Top};
  throw ParseError("unknown constant '" + t.text + "'", t.line);
}

CmpOp parse_cmp(Lexer& lex) {
  // Accepts the quoted forms '<=' and '>' as well as the bare symbols.
  if (lex.at_punct("<=")) {
    lex.next();
    return CmpOp::Le;
  }
  if (lex.at_punct(">")) {
    lex.next();
    return CmpOp::Gt;
  }
  if (lex.at(Token::Kind::Ident)) {
    Token t = lex.next();
    if (t.text == "<=") return CmpOp::Le;
    if (t.text == ">") return CmpOp::Gt;
    throw ParseError("unknown comparison '" + t.text + "'", t.line);
  }
  lex.fail("expected comparison operator");
}

ArithOp parse_arith(Lexer& lex) {
  for (auto [sym, op] : {std::pair{"*", ArithOp::Mul}, {"+", ArithOp::Add},
                         {"-", ArithOp::Sub}}) {
    if (lex.at_punct(sym)) {
      lex.next();
      return op;
    }
  }
  lex.fail("expected arithmetic operator");
}

Opcode parse_opcode(Lexer& lex) {
  Token name = lex.expect(Token::Kind::Ident, "opcode");
  if (name.text == "dup") return Dup{};
  if (name.text == "return") return Return{};
  if (name.text == "iconst") {
    lex.expect_punct("(");
    DomainConst c = parse_const(lex);
    lex.expect_punct(")");
    return IConst{c};
  }
  if (name.text == "iop") {
    lex.expect_punct("(");
    ArithOp op = parse_arith(lex);
    lex.expect_punct(")");
    return IOp{op};
  }
  if (name.text == "if1") {
    lex.expect_punct("(");
    CmpOp cmp = parse_cmp(lex);
    lex.expect_punct(",");
    DomainConst c = parse_const(lex);
    lex.expect_punct(",");
    Token target = lex.expect(Token::Kind::Integer, "branch target");
    lex.expect_punct(")");
    return If1{cmp, c, static_cast<int>(target.int_value)};
  }
  throw ParseError("unknown opcode '" + name.text + "'", name.line);
}

}  // namespace

Program parse_program(const std::string& text) {
  std::vector<Instruction> out;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    Lexer lex(line, line_no);
    if (lex.at(Token::Kind::End)) continue;
    Token head = lex.expect(Token::Kind::Ident, "'instr'");
    if (head.text != "instr") {
      throw ParseError("expected 'instr', found '" + head.text + "'", line_no);
    }
    lex.expect_punct("(");
    Token pc = lex.expect(Token::Kind::Integer, "pc");
    lex.expect_punct(",");
    Opcode op = parse_opcode(lex);
    lex.expect_punct(",");
    Token size = lex.expect(Token::Kind::Integer, "size");
    lex.expect_punct(")");
    lex.expect_punct(".");
    if (!lex.at(Token::Kind::End)) {
      throw ParseError("trailing input after fact", line_no);
    }
    out.push_back(Instruction{static_cast<int>(pc.int_value), op,
                              static_cast<int>(size.int_value)});
  }
  return Program(std::move(out));
}

}  // namespace minilog
