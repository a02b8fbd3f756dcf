#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "minilog/common.hpp"
#include "minilog/sign.hpp"

namespace minilog {

// A constant as it appears in the program text: a concrete integer or an
// abstract sign name. Each value domain injects it into its own value type.
struct DomainConst {
  std::variant<long long, Sign> value;

  bool is_int() const { return std::holds_alternative<long long>(value); }
  long long as_int() const { return std::get<long long>(value); }
  Sign as_sign() const { return std::get<Sign>(value); }
};

std::string render(const DomainConst& c);

struct IConst {
  DomainConst value;
};
struct IOp {
  ArithOp op;
};
struct Dup {};
struct If1 {
  CmpOp cmp;
  DomainConst constant;
  int target;
};
struct Return {};

using Opcode = std::variant<IConst, IOp, Dup, If1, Return>;

std::string render(const Opcode& op);

struct Instruction {
  int pc = 0;
  Opcode opcode;
  int size = 0;  // byte size; locates the fall-through instruction
};

// Instruction map keyed by pc. Validated on construction: unique pcs, entry
// point 0, every fall-through and branch target present.
class Program {
 public:
  explicit Program(std::vector<Instruction> instructions);

  const Instruction& at(int pc) const;
  bool contains(int pc) const { return instructions_.count(pc) != 0; }
  const std::map<int, Instruction>& instructions() const { return instructions_; }

 private:
  std::map<int, Instruction> instructions_;
};

// Parses the `instr(<pc>,<opcode>,<size>).` fact-per-line format; `%` starts
// a comment line. Throws ParseError / InvalidTarget.
Program parse_program(const std::string& text);

// Operand stack (index 0 = top) plus local variables, over a domain value V.
template <typename V>
struct MachineEnv {
  std::vector<V> stack;
  std::vector<V> locals;

  bool operator==(const MachineEnv&) const = default;
};

// Renders `env([top,...],[locals...])`, top of stack first.
template <typename V, typename RenderFn>
std::string render_env(const MachineEnv<V>& env, RenderFn render_value) {
  std::string out = "env([";
  for (std::size_t i = 0; i < env.stack.size(); ++i) {
    if (i) out += ',';
    out += render_value(env.stack[i]);
  }
  out += "],[";
  for (std::size_t i = 0; i < env.locals.size(); ++i) {
    if (i) out += ',';
    out += render_value(env.locals[i]);
  }
  out += "])";
  return out;
}

}  // namespace minilog
